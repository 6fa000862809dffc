"""Symmetric-group specifics.

Permutations compose left to right: ``(u*w)(i) = w(u(i))``.  With this
convention the inversions of the Coxeter structure are the usual
permutation inversions, and the realization map to type A_{n-1} elements
sends the adjacent transposition (i, i+1) to generator i-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .arrangement import inversion_arrangement, nbc_sets
from .bruhat import distance_condition, ideal
from .coxeter import CoxeterSystem, Element, reduced_word
from .errors import InvalidDatum

FORBIDDEN_PATTERNS = ("4231", "35142", "42513", "351624")


@dataclass(frozen=True, order=True)
class Permutation:
    oneline: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.oneline) != list(range(1, len(self.oneline) + 1)):
            raise ValueError(f"{self.oneline} is not a permutation of 1..n")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """``"3412"`` for n <= 9, or comma/space separated values."""
        text = text.strip()
        if "," in text or " " in text:
            vals = [int(v) for v in text.replace(",", " ").split()]
        else:
            vals = [int(c) for c in text]
        return cls(tuple(vals))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        vals = list(range(1, n + 1))
        vals[i - 1], vals[j - 1] = j, i
        return cls(tuple(vals))

    @property
    def n(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for i, v in enumerate(self.oneline, start=1):
            out[v - 1] = i
        return Permutation(tuple(out))

    def inversion_count(self) -> int:
        return sum(1 for i, j in combinations(range(self.n), 2) if self.oneline[i] > self.oneline[j])

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.oneline))
        return ",".join(map(str, self.oneline))


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


# -- realization -------------------------------------------------------------


def _check_type_a(W: CoxeterSystem, n: int):
    if W.datum.kind != "A" or W.rank != n - 1:
        raise InvalidDatum(f"permutations of {n} letters need the system A{n - 1}, not {W.name}")


def adjacent_word(p: Permutation) -> list[int]:
    """Word in adjacent transpositions (0-based) whose left-to-right product is p."""
    word = []
    vals = list(p.oneline)
    while True:
        i = next((i for i in range(len(vals) - 1) if vals[i] > vals[i + 1]), None)
        if i is None:
            return word
        # s_i * p swaps the values in positions i, i+1
        word.append(i)
        vals[i], vals[i + 1] = vals[i + 1], vals[i]


def to_element(W: CoxeterSystem, p: Permutation) -> Element:
    _check_type_a(W, p.n)
    return W.element(adjacent_word(p))


def to_permutation(W: CoxeterSystem, x: Element) -> Permutation:
    n = W.rank + 1
    _check_type_a(W, n)
    p = Permutation.identity(n)
    for s in reduced_word(W, x):
        p = p * Permutation.transposition(n, s + 1, s + 2)
    return p


# -- patterns ----------------------------------------------------------------


def _as_perm(p) -> Permutation:
    return p if isinstance(p, Permutation) else Permutation.parse(p)


def contains_pattern(w, p) -> bool:
    w, p = _as_perm(w), _as_perm(p)
    if p.n > w.n:
        return False
    target = p.oneline
    for idx in combinations(w.oneline, p.n):
        if all((idx[a] < idx[b]) == (target[a] < target[b])
               for a, b in combinations(range(p.n), 2)):
            return True
    return False


def avoids_forbidden_patterns(w) -> bool:
    """Avoids 4231, 35142, 42513 and 351624."""
    return not any(contains_pattern(w, p) for p in FORBIDDEN_PATTERNS)


# -- diagrams and the dominance order ----------------------------------------


def rank_table(w: Permutation) -> tuple[int, ...]:
    """Flattened w[i, j] = #{x <= i : w(x) >= j}, row-major over (i, j)."""
    n = w.n
    out = []
    for i in range(1, n + 1):
        head = w.oneline[:i]
        for j in range(1, n + 1):
            out.append(sum(1 for v in head if v >= j))
    return tuple(out)


_rank_table_cached = lru_cache(maxsize=None)(rank_table)


def dominance_leq(u: Permutation, w: Permutation) -> bool:
    if u.n != w.n:
        raise ValueError("permutations of different sizes")
    return all(a <= b for a, b in zip(_rank_table_cached(u), _rank_table_cached(w)))


def diagram(w: Permutation) -> frozenset[tuple[int, int]]:
    return frozenset((i, w(i)) for i in range(1, w.n + 1))


def right_hull(w: Permutation) -> frozenset[tuple[int, int]]:
    """Cells whose upper-right and lower-left rectangles both meet diag(w)."""
    n = w.n
    dots = diagram(w)
    cells = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            upper_right = any(x <= i and y >= j for x, y in dots)
            lower_left = any(x >= i and y <= j for x, y in dots)
            if upper_right and lower_left:
                cells.add((i, j))
    return frozenset(cells)


def rotate(w: Permutation) -> Permutation:
    """180 degree diagram rotation, (i, j) -> (n+1-i, n+1-j)."""
    n = w.n
    return Permutation(tuple(n + 1 - w(n + 1 - i) for i in range(1, n + 1)))


def has_right_hull_property(w: Permutation) -> bool:
    hull = right_hull(w)
    for u in all_permutations(w.n):
        if dominance_leq(u, w) != (diagram(u) <= hull):
            return False
    return True


def cycle_count(w: Permutation) -> int:
    seen = set()
    c = 0
    for i in range(1, w.n + 1):
        if i in seen:
            continue
        c += 1
        while i not in seen:
            seen.add(i)
            i = w(i)
    return c


def absolute_length_cycles(w: Permutation) -> int:
    return w.n - cycle_count(w)


# -- the four equivalent conditions ------------------------------------------


@dataclass(frozen=True)
class CollectionCheck:
    regions_eq_interval: bool
    right_hull_prop: bool
    avoids_patterns: bool
    distance_cond: bool

    @property
    def consistent(self) -> bool:
        return len({self.regions_eq_interval, self.right_hull_prop,
                    self.avoids_patterns, self.distance_cond}) == 1


def check_collection(W: CoxeterSystem, w: Permutation) -> CollectionCheck:
    x = to_element(W, w)
    n_nbc = len(nbc_sets(inversion_arrangement(W, x)))
    return CollectionCheck(
        regions_eq_interval=n_nbc == len(ideal(W, x)),
        right_hull_prop=has_right_hull_property(w),
        avoids_patterns=avoids_forbidden_patterns(w),
        distance_cond=distance_condition(W, x),
    )
