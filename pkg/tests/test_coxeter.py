import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bruhat_nbc import (
    CoxeterDatum,
    absolute_length_bfs,
    absolute_length_carter,
    build_system,
    independent_roots,
    inverse,
    inversions,
    multiply,
    reduced_word,
)
from bruhat_nbc.coxeter import (
    check_reduced,
    coxeter_length_checked,
    dihedral_encoding,
    enumerate_reduced_words,
    inversion_set,
    minimal_reflection_factorizations,
    sample_reduced_word,
)
from bruhat_nbc.errors import CapExceeded, InvalidDatum, NotReduced, UnsupportedRing
from bruhat_nbc.typea import Permutation, absolute_length_cycles, all_permutations, to_element

from conftest import system

# (name, |W|, |Phi+|) from the standard tables
SIZES = [
    ("A1", 2, 1), ("A2", 6, 3), ("A3", 24, 6), ("A4", 120, 10),
    ("B2", 8, 4), ("B3", 48, 9), ("B4", 384, 16), ("D4", 192, 12),
    ("F4", 1152, 24), ("G2", 12, 6), ("H3", 120, 15),
    ("I2(3)", 6, 3), ("I2(5)", 10, 5), ("I2(8)", 16, 8), ("I2(12)", 24, 12),
]


@pytest.mark.parametrize("name,order,npos", SIZES)
def test_group_sizes(name, order, npos):
    W = system(name)
    assert len(W.elements) == order
    assert W.n_roots == npos == len(W.reflections)
    assert W.w0.length == npos
    assert len(set(W.reflections)) == npos


@pytest.mark.parametrize("name", ["A3", "B3", "D4", "G2", "H3", "I2(7)", "F4"])
def test_length_is_word_distance(name):
    W = system(name)
    for i, x in enumerate(W.elements):
        assert x.length == W.word_length[i]
    assert coxeter_length_checked(W, W.w0) == W.n_roots


def test_length_is_permutation_inversion_count():
    W = system("A4")
    for p in all_permutations(5):
        assert to_element(W, p).length == p.inversion_count()


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "I2(5)"])
def test_coxeter_relations(name):
    W = system(name)
    M = W.datum.coxeter_matrix()
    for i, j in combinations(range(W.rank), 2):
        st_ = multiply(W.generators[i], W.generators[j])
        x, order = st_, 1
        while x != W.e:
            x, order = multiply(x, st_), order + 1
        assert order == M[i][j]


def test_coxeter_matrices():
    assert build_system("A3").datum.coxeter_matrix() == [[1, 3, 2], [3, 1, 3], [2, 3, 1]]
    assert 4 in sum(CoxeterDatum.parse("B3").coxeter_matrix(), [])
    assert 5 in sum(CoxeterDatum.parse("H3").coxeter_matrix(), [])
    assert CoxeterDatum.parse("G2").coxeter_matrix() == [[1, 6], [6, 1]]


def test_multiplication_matches_permutations():
    W = system("A3")
    perms = all_permutations(4)
    for p in perms:
        for q in perms:
            assert multiply(to_element(W, p), to_element(W, q)) == to_element(W, p * q)
        assert inverse(to_element(W, p)) == to_element(W, p.inverse())


@pytest.mark.parametrize("name,w0_words", [("A2", 2), ("A3", 16), ("A4", 768), ("B3", 42)])
def test_reduced_word_counts_of_w0(name, w0_words):
    W = system(name)
    assert len(enumerate_reduced_words(W, W.w0)) == w0_words


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_inversion_set_independent_of_word(name):
    W = system(name)
    for x in W.elements:
        target = inversion_set(W, x)
        assert len(target) == x.length
        for word in enumerate_reduced_words(W, x, cap=30):
            ts = [t for t, _ in inversions(W, x, word)]
            assert len(ts) == len(set(ts))
            assert set(ts) == target


def test_reduced_word_and_sampling():
    W = system("B3")
    rng = random.Random(7)
    for x in W.elements:
        word = reduced_word(W, x)
        check_reduced(W, x, word)
        check_reduced(W, x, sample_reduced_word(W, x, rng))


def test_not_reduced():
    W = system("A3")
    x = W.element([0, 0])
    with pytest.raises(NotReduced):
        check_reduced(W, W.generators[0], [0, 0, 0])
    with pytest.raises(NotReduced):
        inversions(W, x, [0, 0])


@pytest.mark.parametrize("name", ["A3", "B3", "D4", "H3", "G2", "I2(5)", "I2(6)"])
def test_carter_matches_bfs(name):
    W = system(name)
    for x in W.elements:
        assert absolute_length_bfs(W, x) == absolute_length_carter(W, x)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_absolute_length_cycles_type_a(n):
    W = system(f"A{n - 1}")
    for p in all_permutations(n):
        x = to_element(W, p)
        assert absolute_length_bfs(W, x) == absolute_length_cycles(p) == absolute_length_carter(W, x)


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_reflection_changes_absolute_length_by_one(name):
    W = system(name)
    al = W.absolute_lengths
    for r, row in enumerate(W.left_refl_table):
        for i, j in enumerate(row):
            assert abs(al[j] - al[i]) == 1


def _product(W, ts):
    x = W.e
    for t in ts:
        x = multiply(x, t)
    return x


@pytest.mark.parametrize("name", ["B3", "D4", "H3"])
@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_carter_independence(name, data):
    W = system(name)
    k = data.draw(st.integers(1, W.rank))
    idx = data.draw(st.lists(st.integers(0, W.n_roots - 1), min_size=k, max_size=k, unique=True))
    ts = [W.reflections[i] for i in idx]
    indep = independent_roots(W, ts)
    assert indep == (absolute_length_bfs(W, _product(W, ts)) == k)


def test_a2_reflections_dependent():
    W = system("A2")
    assert not independent_roots(W, W.reflections)
    assert independent_roots(W, W.reflections[:2])


@pytest.mark.parametrize("name", ["A3", "B3"])
def test_minimal_factorizations_span_same_space(name):
    W = system(name)
    for x in W.elements:
        k = absolute_length_bfs(W, x)
        facs = minimal_reflection_factorizations(W, x, limit=40)
        assert facs
        base = [W.reflection_root[t] for t in facs[0]]
        for f in facs:
            assert _product(W, f) == x and len(f) == k
            roots = [W.reflection_root[t] for t in f]
            assert W.rank_of_roots(roots) == k
            assert W.rank_of_roots(set(roots) | set(base)) == k


@pytest.mark.parametrize("m", [3, 5, 8])
def test_dihedral_encoding(m):
    W = system(f"I2({m})")
    codes = {dihedral_encoding(W, x) for x in W.elements}
    assert len(codes) == 2 * m
    for x in W.elements:
        assert dihedral_encoding(W, x)[1] == (x.length % 2 == 1)
    with pytest.raises(UnsupportedRing):
        dihedral_encoding(system("A2"), system("A2").e)
    with pytest.raises(UnsupportedRing):
        W.reflection_matrix(W.e)


def test_parse_variants():
    assert CoxeterDatum.parse("A", 3) == CoxeterDatum("A", 3)
    assert CoxeterDatum.parse("e6") == CoxeterDatum.parse("E", 6) == CoxeterDatum("E6", 6)
    assert CoxeterDatum.parse("I2(5)") == CoxeterDatum.parse("I2", m=5) == CoxeterDatum("I2", 2, 5)
    assert CoxeterDatum.parse("I2(5)").name == "I2(5)"
    assert not CoxeterDatum.parse("H3").crystallographic


@pytest.mark.parametrize("args", [("X", 3), ("B", 1), ("D", 3), ("A", 0), ("H5", None),
                                  ("I2", None, 2), ("A", 3, 5)])
def test_invalid_datum(args):
    with pytest.raises(InvalidDatum):
        CoxeterDatum.parse(*args)


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        build_system("E6")
    with pytest.raises(CapExceeded):
        build_system("A4", cap=100)
    assert len(build_system("A4", cap=120)) == 120
