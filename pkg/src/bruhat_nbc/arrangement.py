"""Inversion arrangements, broken circuits, NBC sets and the map phi.

Ground-set order is the position order of a fixed reduced word.  A broken
circuit is a circuit with its *largest* position removed; this is the
reverse of the usual matroid convention and phi depends on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .bruhat import BruhatInterval, distance_condition, down_distances, ideal
from .coxeter import CoxeterSystem, Element, check_reduced, inversions, multiply, reduced_word
from .errors import NotNBC, PreconditionViolated, TooManyHyperplanes

MAX_HYPERPLANES = 22


@dataclass(frozen=True)
class InversionArrangement:
    """Inversion roots of w in the order given by ``word``.

    Positions are 1-based throughout, matching t_1, ..., t_k.
    """

    system: CoxeterSystem
    w: Element
    word: tuple[int, ...]
    reflections: tuple[Element, ...]
    roots: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.roots)

    @property
    def ambient_rank(self) -> int:
        return self.system.rank

    def rank(self, positions) -> int:
        return self.system.rank_of_roots([self.roots[p - 1] for p in positions])

    def root_mask(self, positions) -> int:
        m = 0
        for p in positions:
            m |= 1 << (self.roots[p - 1] - 1)
        return m


def inversion_arrangement(W: CoxeterSystem, w: Element, word=None) -> InversionArrangement:
    if word is None:
        word = reduced_word(W, w)
    word = tuple(word)
    check_reduced(W, w, word)
    inv = inversions(W, w, word)
    return InversionArrangement(W, w, word, tuple(t for t, _ in inv), tuple(r for _, r in inv))


@dataclass(frozen=True)
class Circuit:
    positions: tuple[int, ...]

    @property
    def broken(self) -> tuple[int, ...]:
        return self.positions[:-1]


def _guard(arr: InversionArrangement):
    if arr.k > MAX_HYPERPLANES:
        raise TooManyHyperplanes(f"{arr.k} hyperplanes exceeds the limit of {MAX_HYPERPLANES}")


def circuits(arr: InversionArrangement) -> list[Circuit]:
    """Minimal dependent position sets, by increasing size."""
    _guard(arr)
    positions = range(1, arr.k + 1)
    found: list[Circuit] = []
    masks: list[int] = []
    # a circuit has at most rank + 1 elements
    for size in range(1, min(arr.k, arr.ambient_rank + 1) + 1):
        for combo in combinations(positions, size):
            if arr.rank(combo) == size:
                continue
            m = _pos_mask(combo)
            if any(c & m == c for c in masks):
                continue
            found.append(Circuit(combo))
            masks.append(m)
    return found


def _pos_mask(positions) -> int:
    m = 0
    for p in positions:
        m |= 1 << p
    return m


@dataclass(frozen=True)
class NBCFamily:
    arrangement: InversionArrangement
    sets: tuple[tuple[int, ...], ...]
    circuits: tuple[Circuit, ...] = field(repr=False)

    def __len__(self):
        return len(self.sets)

    def __contains__(self, s) -> bool:
        return tuple(sorted(s)) in self._lookup

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.sets)


def nbc_sets(arr: InversionArrangement) -> NBCFamily:
    """All subsets of positions containing no broken circuit.

    Backtracking in increasing position order; only broken circuits whose
    largest element is the newly added position need to be tested.
    """
    circs = circuits(arr)
    by_top: dict[int, list[int]] = {}
    for c in circs:
        b = c.broken
        if b:
            by_top.setdefault(b[-1], []).append(_pos_mask(b))
    k = arr.k
    out: list[tuple[int, ...]] = []

    def rec(start, chosen, mask):
        out.append(tuple(chosen))
        for p in range(start, k + 1):
            m = mask | (1 << p)
            if any(b & m == b for b in by_top.get(p, ())):
                continue
            chosen.append(p)
            rec(p + 1, chosen, m)
            chosen.pop()

    rec(1, [], 0)
    out.sort(key=lambda s: (len(s), s))
    return NBCFamily(arr, tuple(out), tuple(circs))


def characteristic_polynomial(arr: InversionArrangement) -> list[int]:
    """Coefficients c[i] of t^i in sum_B (-1)^|B| t^(d - rank B), d the ambient rank."""
    _guard(arr)
    d = arr.ambient_rank
    W = arr.system
    coeffs = [0] * (d + 1)
    roots = [r - 1 for r in arr.roots]
    k = len(roots)
    # subsets via their root bitmask, built by Gray-code-free incremental doubling
    masks = [0]
    sizes = [0]
    for r in roots:
        bit = 1 << r
        masks += [m | bit for m in masks]
        sizes += [s + 1 for s in sizes]
    for m, s in zip(masks, sizes):
        rk = W.rank_of_mask(m)
        coeffs[d - rk] += -1 if s % 2 else 1
    assert len(masks) == 1 << k
    return coeffs


def region_count_charpoly(arr: InversionArrangement) -> int:
    """(-1)^d chi(-1), the number of regions."""
    coeffs = characteristic_polynomial(arr)
    d = len(coeffs) - 1
    chi = sum(c * (-1) ** i for i, c in enumerate(coeffs))
    return (-1) ** d * chi


def phi(arr: InversionArrangement, nbc, family: NBCFamily | None = None) -> Element:
    """t_{i_1} ... t_{i_m} w for positions i_1 < ... < i_m."""
    s = tuple(sorted(nbc))
    if family is not None and s not in family:
        raise NotNBC(f"{s} is not an NBC set")
    if family is None and not is_nbc(arr, s):
        raise NotNBC(f"{s} is not an NBC set")
    x = arr.w
    for p in reversed(s):
        x = multiply(arr.reflections[p - 1], x)
    return x


def is_nbc(arr: InversionArrangement, positions) -> bool:
    m = _pos_mask(positions)
    for c in circuits(arr):
        b = _pos_mask(c.broken)
        if c.broken and b & m == b:
            return False
    return True


@dataclass(frozen=True)
class PhiCheck:
    well_defined: bool
    injective: bool
    surjective: bool
    nbc_count: int
    interval_size: int


def phi_table(arr: InversionArrangement, family: NBCFamily | None = None) -> list[tuple[tuple[int, ...], Element]]:
    fam = family if family is not None else nbc_sets(arr)
    return [(s, phi(arr, s, fam)) for s in fam.sets]


def phi_check(arr: InversionArrangement, family: NBCFamily | None = None,
              interval: BruhatInterval | None = None) -> PhiCheck:
    W = arr.system
    fam = family if family is not None else nbc_sets(arr)
    iv = interval if interval is not None else ideal(W, arr.w)
    images = [W.index[x] for _, x in phi_table(arr, fam)]
    well_defined = all(i in iv.member_set for i in images)
    injective = len(set(images)) == len(images)
    surjective = well_defined and set(images) == iv.member_set
    return PhiCheck(well_defined, injective, surjective, len(fam), len(iv))


def deletion_product(arr: InversionArrangement, positions) -> Element:
    """The word with the given positions deleted, evaluated."""
    W = arr.system
    drop = set(positions)
    return W.element(s for i, s in enumerate(arr.word, start=1) if i not in drop)


def lexmax_preimage(arr: InversionArrangement, u: Element) -> tuple[int, ...]:
    """Deletion positions for u of size al(u, w), lexicographically maximal
    when read from the largest position down."""
    W = arr.system
    if not distance_condition(W, arr.w):
        raise PreconditionViolated("distance condition fails for w")
    dist = down_distances(W, W.index[arr.w])
    ui = W.index[u]
    if ui not in dist:
        raise PreconditionViolated("u is not below w")
    m = dist[ui]
    best = None
    for combo in combinations(range(1, arr.k + 1), m):
        key = combo[::-1]
        if best is not None and key <= best:
            continue
        if deletion_product(arr, combo) == u:
            best = key
    if best is None:
        raise PreconditionViolated("no deletion of the required size yields u")
    return best[::-1]
