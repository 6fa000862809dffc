"""Finite Coxeter systems realized by their action on roots.

An element is stored as the signed permutation it induces on the root
system: ``perm[i-1]`` is the signed index of ``w(alpha_i)`` for the
positive root ``alpha_i``.  This gives canonical hashing and equality and
multiplication in O(|Phi+|), with no floating point anywhere.

Root coordinates (simple-root basis) are integers for the Weyl types and
elements of Q(tau) for H3/H4.  The dihedral types I2(m) use angular slots
instead of coordinates, see :class:`DihedralModel`.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import exact
from .errors import CapExceeded, InvalidDatum, NotReduced, UnsupportedRing

DEFAULT_CAP = 50_000

KINDS = ("A", "B", "D", "E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2")


@dataclass(frozen=True)
class CoxeterDatum:
    kind: str
    rank: int
    m: int | None = None

    def __post_init__(self):
        k, r, m = self.kind, self.rank, self.m
        if k not in KINDS:
            raise InvalidDatum(f"unknown Coxeter type {k!r}")
        if not isinstance(r, int) or r < 1:
            raise InvalidDatum(f"rank must be a positive integer, got {r!r}")
        fixed = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2, "H3": 3, "H4": 4, "I2": 2}
        if k in fixed and r != fixed[k]:
            raise InvalidDatum(f"type {k} has rank {fixed[k]}, not {r}")
        if k == "B" and r < 2:
            raise InvalidDatum("type B needs rank >= 2")
        if k == "D" and r < 4:
            raise InvalidDatum("type D needs rank >= 4")
        if k == "I2":
            if not isinstance(m, int) or m < 3:
                raise InvalidDatum("I2(m) needs an integer m >= 3")
        elif m is not None:
            raise InvalidDatum("the dihedral order m only applies to I2")

    @classmethod
    def parse(cls, kind: str, rank: int | None = None, m: int | None = None) -> "CoxeterDatum":
        """Accept ``("A", 3)``, ``("E6",)``, ``("E", 6)``, ``("I2", m=5)`` and ``("I2(5)",)``."""
        kind = kind.strip().upper()
        hit = re.fullmatch(r"I2?\((\d+)\)", kind)
        if hit:
            return cls("I2", 2, int(hit.group(1)))
        if kind in ("E6", "E7", "E8", "F4", "G2", "H3", "H4"):
            return cls(kind, int(kind[1]), m)
        hit = re.fullmatch(r"([ABD])(\d+)", kind)
        if hit:
            return cls(hit.group(1), int(hit.group(2)), m)
        if kind in ("E", "F", "G", "H"):
            if rank is None:
                raise InvalidDatum(f"type {kind} needs a rank")
            return cls(f"{kind}{rank}", rank, m)
        if kind in ("I", "I2"):
            return cls("I2", 2, m)
        if rank is None:
            raise InvalidDatum(f"type {kind} needs a rank")
        return cls(kind, rank, m)

    @property
    def name(self) -> str:
        if self.kind == "I2":
            return f"I2({self.m})"
        if self.kind in ("A", "B", "D"):
            return f"{self.kind}{self.rank}"
        return self.kind

    @property
    def crystallographic(self) -> bool:
        return self.kind not in ("H3", "H4", "I2")

    def group_order(self) -> int:
        k, n = self.kind, self.rank
        if k == "A":
            return math.factorial(n + 1)
        if k == "B":
            return 2**n * math.factorial(n)
        if k == "D":
            return 2 ** (n - 1) * math.factorial(n)
        if k == "I2":
            return 2 * self.m
        return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152,
                "G2": 12, "H3": 120, "H4": 14400}[k]

    def coxeter_matrix(self) -> list[list[int]]:
        """Entries m(s, s'); m(s, s) = 1."""
        if self.kind == "I2":
            return [[1, self.m], [self.m, 1]]
        p = _pairing_matrix(self)
        n = self.rank
        out = [[1] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if isinstance(p[i][j], exact.QTau):
                    out[i][j] = 5 if p[i][j].b else (3 if p[i][j] else 2)
                else:
                    out[i][j] = {0: 2, 1: 3, 2: 4, 3: 6}[p[i][j] * p[j][i]]
        return out


def _chain(n):
    return [(i, i + 1) for i in range(n - 1)]


def _pairing_matrix(datum: CoxeterDatum):
    """Matrix P with P[i][j] = <alpha_i^vee, alpha_j>."""
    k, n = datum.kind, datum.rank
    if k in ("H3", "H4"):
        p = [[exact.QTau(2 if i == j else 0) for j in range(n)] for i in range(n)]
        edges = {(0, 1): 5, **{e: 3 for e in _chain(n)[1:]}}
        for (i, j), m in edges.items():
            # -2 cos(pi/m): -1 for m = 3, -tau for m = 5
            v = exact.QTau(0, -1) if m == 5 else exact.QTau(-1)
            p[i][j] = p[j][i] = v
        return p
    p = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if k == "A":
        edges = _chain(n)
    elif k == "B":
        edges = _chain(n)
    elif k == "D":
        edges = _chain(n - 1) + [(n - 3, n - 1)]
    elif k in ("E6", "E7", "E8"):
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    elif k == "F4":
        edges = _chain(4)
    elif k == "G2":
        edges = []
    else:
        raise UnsupportedRing(f"no coordinate realization for {k}")
    for i, j in edges:
        p[i][j] = p[j][i] = -1
    if k == "B":
        p[n - 1][n - 2] = -2  # alpha_n short
    elif k == "F4":
        p[2][1] = -2  # alpha_3, alpha_4 short
    elif k == "G2":
        p[0][1], p[1][0] = -3, -1  # alpha_1 short
    return p


class CoordinateModel:
    """Roots as exact coordinate vectors in the simple-root basis."""

    def __init__(self, datum: CoxeterDatum):
        self.pairing = _pairing_matrix(datum)
        self.rank = datum.rank
        zero = self.pairing[0][0] * 0
        self.simple = [tuple(zero + (1 if j == i else 0) for j in range(self.rank))
                       for i in range(self.rank)]

    def reflect(self, i, beta):
        c = sum((self.pairing[i][j] * beta[j] for j in range(self.rank)), self.pairing[i][i] * 0)
        if not c:
            return beta
        out = list(beta)
        out[i] = out[i] - c
        return tuple(out)

    def negate(self, beta):
        return tuple(-x for x in beta)

    def is_positive(self, beta):
        for x in beta:
            s = exact.sign(x)
            if s:
                return s > 0
        raise ValueError("zero vector is not a root")

    def rank_of(self, roots) -> int:
        return exact.rank(roots)


class DihedralModel:
    """I2(m) without coordinates.

    Root directions are angular slots ``a`` in Z/2m standing for the angle
    a*pi/m; slot ``a + m`` is the negative of slot ``a``.  Positive roots
    occupy slots 0..m-1, with the simple roots at slots 0 and m-1.  Any two
    distinct positive roots are independent and any three are dependent.
    """

    def __init__(self, m: int):
        self.m = m
        self.rank = 2
        self.simple = [0, m - 1]

    def reflect(self, i, a):
        r = self.simple[i]
        return (2 * r + self.m - a) % (2 * self.m)

    def negate(self, a):
        return (a + self.m) % (2 * self.m)

    def is_positive(self, a):
        return 0 <= a < self.m

    def rank_of(self, roots) -> int:
        return min(len(set(roots)), 2)

    def encode(self, action) -> tuple[int, bool]:
        """(rotation exponent k mod m, reflection flag) of a slot map.

        ``action`` maps a slot to its image.  Rotations act as a -> a + 2k,
        reflections as a -> c - a.
        """
        a0, a1 = action(0), action(1)
        two_m = 2 * self.m
        if (a1 - a0) % two_m == 1:
            return (a0 // 2) % self.m, False
        # reflections a -> c - a have c = m (mod 2)
        return ((a0 - self.m) % two_m) // 2, True


@dataclass(frozen=True)
class Element:
    """A group element as a signed permutation of root indices.

    ``perm[i-1] = j`` means ``w(alpha_i) = sign(j) * alpha_|j|``.
    """

    perm: tuple[int, ...]
    length: int = field(default=-1, compare=False)

    def __post_init__(self):
        if self.length < 0:
            object.__setattr__(self, "length", sum(1 for j in self.perm if j < 0))

    def __call__(self, i: int) -> int:
        """Signed index of the image of root ``i`` (signed)."""
        j = self.perm[abs(i) - 1]
        return j if i > 0 else -j

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __repr__(self):
        return f"Element(len={self.length}, perm={self.perm})"


def multiply(x: Element, y: Element) -> Element:
    """The product xy, acting as y first then x."""
    xp = x.perm
    out = tuple(xp[j - 1] if j > 0 else -xp[-j - 1] for j in y.perm)
    return Element(out)


def inverse(x: Element) -> Element:
    out = [0] * len(x.perm)
    for i, j in enumerate(x.perm, start=1):
        if j > 0:
            out[j - 1] = i
        else:
            out[-j - 1] = -i
    return Element(tuple(out), x.length)


def identity(n_roots: int) -> Element:
    return Element(tuple(range(1, n_roots + 1)), 0)


class CoxeterSystem:
    """A finite Coxeter system with its roots, elements and reflections.

    Immutable after construction apart from lazily computed tables, which
    are deterministic functions of the construction data.
    """

    def __init__(self, datum: CoxeterDatum, cap: int = DEFAULT_CAP):
        order = datum.group_order()
        if order > cap:
            raise CapExceeded(f"|W({datum.name})| = {order} exceeds cap {cap}")
        self.datum = datum
        self.model = DihedralModel(datum.m) if datum.kind == "I2" else CoordinateModel(datum)
        self.rank = datum.rank
        self._build_roots()
        self._build_elements()
        if len(self.elements) != order:
            raise InvalidDatum(f"enumerated {len(self.elements)} elements, expected {order}")

    # -- construction -------------------------------------------------------

    def _build_roots(self):
        model = self.model
        roots = list(model.simple)
        parent = [None] * len(roots)  # (generator, root index) with beta = s(parent)
        seen = {r: i for i, r in enumerate(roots)}
        queue = deque(range(len(roots)))
        while queue:
            i = queue.popleft()
            for s in range(self.rank):
                b = model.reflect(s, roots[i])
                if b in seen or not model.is_positive(b):
                    continue
                seen[b] = len(roots)
                roots.append(b)
                parent.append((s, i))
                queue.append(len(roots) - 1)
        self.positive_roots = roots
        self.n_roots = len(roots)
        self.root_index = {r: i + 1 for i, r in enumerate(roots)}
        for r, i in list(self.root_index.items()):
            self.root_index[model.negate(r)] = -i
        self._root_parent = parent
        gens = []
        for s in range(self.rank):
            gens.append(Element(tuple(self.root_index[model.reflect(s, r)] for r in roots)))
        self.generators = gens

    def _build_elements(self):
        e = identity(self.n_roots)
        elements = [e]
        index = {e: 0}
        word_depth = [0]
        queue = deque([e])
        while queue:
            x = queue.popleft()
            for s in self.generators:
                y = multiply(s, x)
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    word_depth.append(word_depth[index[x]] + 1)
                    queue.append(y)
        self.elements = elements
        self.index = index
        self.word_length = word_depth
        self.e = e
        self.w0 = max(elements, key=lambda x: x.length)
        # reflections t_beta = s t_parent s, ordered by positive root index
        refl = [None] * self.n_roots
        for i in range(self.n_roots):
            if self._root_parent[i] is None:
                refl[i] = self.generators[i]
            else:
                s, p = self._root_parent[i]
                g = self.generators[s]
                refl[i] = multiply(multiply(g, refl[p]), g)
        self.reflections = refl
        self.reflection_root = {t: i + 1 for i, t in enumerate(refl)}

    # -- lookup tables ------------------------------------------------------

    @property
    def name(self) -> str:
        return self.datum.name

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"CoxeterSystem({self.name}, |W|={len(self.elements)}, |T|={self.n_roots})"

    @cached_property
    def lengths(self) -> list[int]:
        return [x.length for x in self.elements]

    @cached_property
    def left_gen_table(self) -> list[list[int]]:
        """``left_gen_table[s][i]`` is the index of s * elements[i]."""
        idx = self.index
        return [[idx[multiply(s, x)] for x in self.elements] for s in self.generators]

    @cached_property
    def left_refl_table(self) -> list[list[int]]:
        """``left_refl_table[r][i]`` is the index of t_r * elements[i] (r 0-based root)."""
        idx = self.index
        return [[idx[multiply(t, x)] for x in self.elements] for t in self.reflections]

    @cached_property
    def inverse_table(self) -> list[int]:
        return [self.index[inverse(x)] for x in self.elements]

    @cached_property
    def absolute_lengths(self) -> list[int]:
        """Distance from e in the Cayley graph of (W, T), by BFS."""
        table = self.left_refl_table
        dist = [-1] * len(self.elements)
        dist[0] = 0
        queue = deque([0])
        while queue:
            i = queue.popleft()
            d = dist[i] + 1
            for row in table:
                j = row[i]
                if dist[j] < 0:
                    dist[j] = d
                    queue.append(j)
        return dist

    def mul_index(self, i: int, j: int) -> int:
        return self.index[multiply(self.elements[i], self.elements[j])]

    def element(self, word) -> Element:
        """Evaluate a word of generator indices (0-based) left to right."""
        x = self.e
        for s in word:
            x = multiply(x, self.generators[s])
        return x

    def root_vector(self, i: int):
        """Coordinates (or slot) of the signed root index ``i``."""
        r = self.positive_roots[abs(i) - 1]
        return r if i > 0 else self.model.negate(r)

    def rank_of_roots(self, indices) -> int:
        """Rank of a set of positive roots given by 1-based indices."""
        key = 0
        for i in indices:
            key |= 1 << (i - 1)
        return self.rank_of_mask(key)

    def rank_of_mask(self, key: int) -> int:
        """Rank of the positive roots whose (0-based) bits are set in ``key``."""
        cache = self.__dict__.setdefault("_rank_cache", {})
        r = cache.get(key)
        if r is None:
            roots = [self.positive_roots[i] for i in range(self.n_roots) if key >> i & 1]
            r = self.model.rank_of(roots) if roots else 0
            cache[key] = r
        return r

    def reflection_matrix(self, w: Element):
        """Matrix of w in the simple-root basis (columns are w(alpha_j))."""
        if isinstance(self.model, DihedralModel):
            raise UnsupportedRing("I2(m) has no exact coordinate realization here")
        cols = [self.root_vector(w(j + 1)) for j in range(self.rank)]
        return [[cols[j][i] for j in range(self.rank)] for i in range(self.rank)]


def build_system(datum: CoxeterDatum | str, cap: int = DEFAULT_CAP, rank=None, m=None) -> CoxeterSystem:
    if isinstance(datum, str):
        datum = CoxeterDatum.parse(datum, rank, m)
    return CoxeterSystem(datum, cap)


# -- lengths, words, inversions ----------------------------------------------


def coxeter_length(w: Element) -> int:
    return w.length


def coxeter_length_checked(W: CoxeterSystem, w: Element) -> int:
    """Inversion count, asserted equal to the word distance found by BFS."""
    n = w.length
    bfs = W.word_length[W.index[w]]
    if n != bfs:
        raise AssertionError(f"inversion count {n} != word BFS distance {bfs}")
    return n


def left_descents(W: CoxeterSystem, w: Element) -> list[int]:
    """Generators s with l(sw) < l(w), i.e. w^-1(alpha_s) < 0."""
    winv = inverse(w)
    return [s for s in range(W.rank) if winv.perm[s] < 0]


def reduced_word(W: CoxeterSystem, w: Element) -> list[int]:
    """Reduced word (0-based generator indices), smallest left descent first."""
    word = []
    while w.length:
        s = left_descents(W, w)[0]
        word.append(s)
        w = multiply(W.generators[s], w)
    return word


def enumerate_reduced_words(W: CoxeterSystem, w: Element, cap: int = 10_000) -> list[list[int]]:
    """All reduced words of w, or the first ``cap`` of them in backtracking order."""
    out: list[list[int]] = []

    def rec(x, prefix):
        if len(out) >= cap:
            return
        if x.length == 0:
            out.append(list(prefix))
            return
        for s in left_descents(W, x):
            prefix.append(s)
            rec(multiply(W.generators[s], x), prefix)
            prefix.pop()

    rec(w, [])
    return out


def sample_reduced_word(W: CoxeterSystem, w: Element, rng) -> list[int]:
    """A random reduced word: a uniformly chosen left descent at every step."""
    word = []
    while w.length:
        s = rng.choice(left_descents(W, w))
        word.append(s)
        w = multiply(W.generators[s], w)
    return word


def check_reduced(W: CoxeterSystem, w: Element, word) -> None:
    if len(word) != w.length or W.element(word) != w:
        raise NotReduced(f"{list(word)} is not a reduced word for the given element")


def inversions(W: CoxeterSystem, w: Element, word=None) -> list[tuple[Element, int]]:
    """Inversions t_i = s_1..s_{i-1} s_i s_{i-1}..s_1 in word order, with root indices."""
    if word is None:
        word = reduced_word(W, w)
    check_reduced(W, w, word)
    out = []
    prefix = W.e
    for s in word:
        root = prefix.perm[s]
        if root < 0:
            raise NotReduced("word is not reduced")
        out.append((W.reflections[root - 1], root))
        prefix = multiply(prefix, W.generators[s])
    return out


def inversion_set(W: CoxeterSystem, w: Element) -> frozenset[Element]:
    """Reflections t with l(tw) < l(w), computed without any word."""
    return frozenset(t for t in W.reflections if multiply(t, w).length < w.length)


# -- absolute length ---------------------------------------------------------


def absolute_length_bfs(W: CoxeterSystem, w: Element) -> int:
    return W.absolute_lengths[W.index[w]]


def absolute_length_carter(W: CoxeterSystem, w: Element) -> int:
    """Codimension of the fixed space: rank(I - M_w) by exact elimination."""
    if isinstance(W.model, DihedralModel):
        if w.length == 0:
            return 0
        return 1 if w.length % 2 else 2
    mat = W.reflection_matrix(w)
    n = W.rank
    diff = [[(1 if i == j else 0) - mat[i][j] for j in range(n)] for i in range(n)]
    return exact.rank(diff)


def independent_roots(W: CoxeterSystem, ts) -> bool:
    """Whether the roots of the reflections ``ts`` are linearly independent."""
    idx = [W.reflection_root[t] for t in ts]
    if len(set(idx)) != len(idx):
        return False
    return W.rank_of_roots(idx) == len(idx)


def minimal_reflection_factorizations(W: CoxeterSystem, w: Element, limit: int = 1000):
    """Up to ``limit`` factorizations of w into l'(w) reflections."""
    target = absolute_length_bfs(W, w)
    out = []

    def rec(x, acc):
        if len(out) >= limit:
            return
        k = len(acc)
        if k == target:
            if x == w:
                out.append(list(acc))
            return
        for t in W.reflections:
            y = multiply(x, t)
            # remaining distance must shrink by one
            if absolute_length_bfs(W, multiply(inverse(y), w)) == target - k - 1:
                acc.append(t)
                rec(y, acc)
                acc.pop()

    rec(W.e, [])
    return out


def dihedral_encoding(W: CoxeterSystem, w: Element) -> tuple[int, bool]:
    """(rotation exponent, reflection flag) of an element of I2(m)."""
    model = W.model
    if not isinstance(model, DihedralModel):
        raise UnsupportedRing("dihedral encoding only applies to I2(m)")

    def action(a):
        return W.root_vector(w(W.root_index[a]))

    return model.encode(action)


def all_subsets(items, max_size=None):
    n = len(items)
    top = n if max_size is None else min(n, max_size)
    for k in range(top + 1):
        yield from combinations(items, k)
