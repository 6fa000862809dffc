from itertools import combinations

import pytest

from bruhat_nbc import (
    characteristic_polynomial,
    circuits,
    distance_condition,
    ideal,
    inversion_arrangement,
    lexmax_preimage,
    multiply,
    nbc_sets,
    phi,
    phi_check,
    region_count_charpoly,
)
from bruhat_nbc.arrangement import deletion_product, is_nbc, phi_table
from bruhat_nbc.bruhat import down_distances
from bruhat_nbc.coxeter import enumerate_reduced_words, inversion_set
from bruhat_nbc.errors import NotNBC, NotReduced, PreconditionViolated, TooManyHyperplanes

from conftest import perm_el, system


def brute_nbc(arr):
    """NBC sets straight from the definition: sweep every subset."""
    k = arr.k
    subsets = [c for n in range(k + 1) for c in combinations(range(1, k + 1), n)]
    dependent = [s for s in subsets if arr.rank(s) < len(s)]
    circs = [s for s in dependent if not any(set(d) < set(s) for d in dependent)]
    broken = [set(c[:-1]) for c in circs]
    return sorted((s for s in subsets if not any(b <= set(s) for b in broken)),
                  key=lambda s: (len(s), s))


def test_arrangement_basics(A3):
    assert inversion_arrangement(A3, A3.e).k == 0
    arr = inversion_arrangement(A3, A3.w0)
    assert sorted(arr.roots) == list(range(1, 7))
    w = perm_el(A3, "3412")
    arr = inversion_arrangement(A3, w)
    assert arr.k == 4
    assert set(arr.reflections) == inversion_set(A3, w)
    with pytest.raises(NotReduced):
        inversion_arrangement(A3, w, [1, 0, 2])


def test_braid_arrangement_s3():
    W = system("A2")
    arr = inversion_arrangement(W, W.w0)
    assert [c.positions for c in circuits(arr)] == [(1, 2, 3)]
    fam = nbc_sets(arr)
    assert len(fam) == 6 == region_count_charpoly(arr)
    assert characteristic_polynomial(arr) == [2, -3, 1]  # (t - 1)(t - 2)


def test_braid_arrangement_s4(A3):
    arr = inversion_arrangement(A3, A3.w0)
    assert region_count_charpoly(arr) == 24 == len(nbc_sets(arr))
    assert characteristic_polynomial(arr) == [-6, 11, -6, 1]  # (t-1)(t-2)(t-3)


@pytest.mark.parametrize("m", [3, 4, 5, 8, 12])
def test_rank_two_arrangement(m):
    W = system(f"I2({m})")
    arr = inversion_arrangement(W, W.w0)
    assert arr.k == m
    cs = circuits(arr)
    assert sorted(c.positions for c in cs) == list(combinations(range(1, m + 1), 3))
    fam = nbc_sets(arr)
    assert len(fam) == 2 * m == region_count_charpoly(arr)
    pairs = [s for s in fam.sets if len(s) == 2]
    assert all(s[1] == m for s in pairs)


def test_independent_arrangement():
    W = system("B3")
    # s1 s3 commute: two orthogonal roots
    for word in ([0], [0, 2], [0, 1]):
        x = W.element(word)
        arr = inversion_arrangement(W, x)
        assert circuits(arr) == []
        assert len(nbc_sets(arr)) == 2 ** arr.k == region_count_charpoly(arr)


def test_empty_arrangement(A3):
    arr = inversion_arrangement(A3, A3.e)
    assert region_count_charpoly(arr) == 1
    assert nbc_sets(arr).sets == ((),)
    assert phi(arr, ()) == A3.e


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "I2(5)"])
def test_nbc_matches_brute_force(name):
    W = system(name)
    for x in W.elements:
        if x.length > 9:
            continue
        arr = inversion_arrangement(W, x)
        fam = nbc_sets(arr)
        assert list(fam.sets) == brute_nbc(arr)
        # downward closed, contains the empty set
        assert () in fam
        for s in fam.sets:
            for i in range(len(s)):
                assert s[:i] + s[i + 1:] in fam


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "H3"])
def test_circuits_are_minimal_dependent(name):
    W = system(name)
    for x in W.elements:
        arr = inversion_arrangement(W, x)
        for c in circuits(arr):
            assert arr.rank(c.positions) == len(c.positions) - 1
            for sub in combinations(c.positions, len(c.positions) - 1):
                assert arr.rank(sub) == len(sub)


def test_worked_example_phi(A3):
    w = perm_el(A3, "3412")
    arr = inversion_arrangement(A3, w)
    fam = nbc_sets(arr)
    assert len(fam) == 14
    chk = phi_check(arr)
    assert chk.well_defined and chk.injective and chk.surjective
    assert phi(arr, ()) == w
    for i in range(1, arr.k + 1):
        assert phi(arr, (i,)) == multiply(arr.reflections[i - 1], w)
        assert phi(arr, (i,)).length < w.length
    assert {x for _, x in phi_table(arr)} == set(ideal(A3, w).elements())
    for word in enumerate_reduced_words(A3, w):
        assert len(nbc_sets(inversion_arrangement(A3, w, word))) == 14


def test_phi_check_examples(A3):
    e = phi_check(inversion_arrangement(A3, A3.e))
    assert e.well_defined and e.injective and e.surjective
    bad = phi_check(inversion_arrangement(A3, perm_el(A3, "4231")))
    assert bad.well_defined and bad.injective and not bad.surjective
    assert bad.nbc_count < bad.interval_size == 20


def test_phi_rejects_non_nbc(A3):
    arr = inversion_arrangement(A3, A3.w0)
    fam = nbc_sets(arr)
    broken = circuits(arr)[0].broken
    assert not is_nbc(arr, broken)
    with pytest.raises(NotNBC):
        phi(arr, broken)
    with pytest.raises(NotNBC):
        phi(arr, broken, fam)


def test_phi_is_deletion(A3):
    for x in A3.elements:
        arr = inversion_arrangement(A3, x)
        for s, image in phi_table(arr):
            assert deletion_product(arr, s) == image


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_going_down(name):
    W = system(name)
    for x in W.elements:
        if not distance_condition(W, x):
            continue
        arr = inversion_arrangement(W, x)
        for s in nbc_sets(arr).sets:
            cur = x
            for p in reversed(s):
                nxt = multiply(arr.reflections[p - 1], cur)
                assert nxt.length < cur.length
                cur = nxt


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_lexmax_preimage_round_trip(name):
    W = system(name)
    for x in W.elements:
        if not distance_condition(W, x):
            continue
        arr = inversion_arrangement(W, x)
        fam = nbc_sets(arr)
        dist = down_distances(W, W.index[x])
        for ui, d in dist.items():
            u = W.elements[ui]
            s = lexmax_preimage(arr, u)
            assert len(s) == d
            assert s in fam
            assert phi(arr, s, fam) == u


def test_lexmax_examples(A3):
    w = perm_el(A3, "3412")
    arr = inversion_arrangement(A3, w)
    assert lexmax_preimage(arr, w) == ()
    last = multiply(arr.reflections[-1], w)
    assert lexmax_preimage(arr, last) == (arr.k,)


def test_lexmax_precondition(A3):
    w = perm_el(A3, "4231")
    with pytest.raises(PreconditionViolated):
        lexmax_preimage(inversion_arrangement(A3, w), A3.e)
    v = perm_el(A3, "3412")
    with pytest.raises(PreconditionViolated):
        lexmax_preimage(inversion_arrangement(A3, v), perm_el(A3, "2341"))


def test_too_many_hyperplanes():
    W = system("B5")
    arr = inversion_arrangement(W, W.w0)  # 25 hyperplanes
    with pytest.raises(TooManyHyperplanes):
        circuits(arr)
    with pytest.raises(TooManyHyperplanes):
        region_count_charpoly(arr)
