"""Bruhat order, Bruhat graphs and the distance/regularity criteria.

Internally everything runs on element indices of the ambient
:class:`~bruhat_nbc.coxeter.CoxeterSystem`, using its generator and
reflection multiplication tables.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .coxeter import CoxeterSystem, Element, inverse, multiply, reduced_word
from .errors import NotInIdeal, SearchExhausted


def leq_index(W: CoxeterSystem, u: int, w: int) -> bool:
    """u <= w by descent lifting: for sw < w, u <= w iff min(u, su) <= sw."""
    lengths = W.lengths
    table = W.left_gen_table
    rank = W.rank
    while True:
        lu, lw = lengths[u], lengths[w]
        if lu > lw:
            return False
        if lu == lw:
            return u == w
        if lu == 0:
            return True
        for s in range(rank):
            sw = table[s][w]
            if lengths[sw] < lw:
                break
        su = table[s][u]
        if lengths[su] < lu:
            u = su
        w = sw


def bruhat_leq(W: CoxeterSystem, u: Element, w: Element) -> bool:
    return leq_index(W, W.index[u], W.index[w])


def subword_leq(W: CoxeterSystem, u: Element, w: Element) -> bool:
    """Subword test over one reduced word of w (exponential, for small cases)."""
    word = reduced_word(W, w)
    reachable = {W.e}
    for s in word:
        g = W.generators[s]
        reachable |= {multiply(x, g) for x in reachable}
    return u in reachable


def down_distances(W: CoxeterSystem, w: int) -> dict[int, int]:
    """al(u, w) for every u <= w, by BFS from w along reversed edges.

    Every directed path into w stays below w, so the search never leaves
    the ideal and its vertex set is exactly [e, w].
    """
    table = W.left_refl_table
    lengths = W.lengths
    dist = {w: 0}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        lv = lengths[v]
        d = dist[v] + 1
        for row in table:
            x = row[v]
            if lengths[x] < lv and x not in dist:
                dist[x] = d
                queue.append(x)
    return dist


@dataclass(frozen=True)
class BruhatInterval:
    """The principal order ideal [e, w]."""

    system: CoxeterSystem
    top: int
    members: tuple[int, ...]

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @property
    def w(self) -> Element:
        return self.system.elements[self.top]

    def elements(self) -> list[Element]:
        return [self.system.elements[i] for i in self.members]

    def __len__(self):
        return len(self.members)

    def __contains__(self, x) -> bool:
        if isinstance(x, Element):
            x = self.system.index[x]
        return x in self.member_set

    def leq(self, u, v) -> bool:
        W = self.system
        if isinstance(u, Element):
            u, v = W.index[u], W.index[v]
        if u not in self.member_set or v not in self.member_set:
            raise NotInIdeal("both arguments must lie in the interval")
        return leq_index(W, u, v)


def ideal(W: CoxeterSystem, w: Element) -> BruhatInterval:
    """[e, w] by filtering the whole group through the order test."""
    wi = W.index[w]
    members = tuple(i for i in range(len(W.elements)) if leq_index(W, i, wi))
    return BruhatInterval(W, wi, members)


@dataclass(frozen=True)
class BruhatGraph:
    """bg(w): edges (u, v, r) with v = t_r u, l(u) < l(v), both in [e, w].

    Vertices and edges are element indices; ``r`` is the 1-based root index
    of the reflection.
    """

    interval: BruhatInterval
    edges: tuple[tuple[int, int, int], ...]

    @property
    def system(self) -> CoxeterSystem:
        return self.interval.system

    def is_covering(self, edge) -> bool:
        lengths = self.system.lengths
        return lengths[edge[1]] - lengths[edge[0]] == 1

    def covering_edges(self):
        return [e for e in self.edges if self.is_covering(e)]

    def non_covering_edges(self):
        return [e for e in self.edges if not self.is_covering(e)]

    @cached_property
    def up(self) -> dict[int, set[int]]:
        out = {v: set() for v in self.interval.members}
        for u, v, _ in self.edges:
            out[u].add(v)
        return out

    @cached_property
    def down(self) -> dict[int, set[int]]:
        out = {v: set() for v in self.interval.members}
        for u, v, _ in self.edges:
            out[v].add(u)
        return out

    def degree(self, v: int) -> int:
        return len(self.up[v]) + len(self.down[v])


def bruhat_graph(W: CoxeterSystem, w: Element, interval: BruhatInterval | None = None) -> BruhatGraph:
    iv = interval if interval is not None else ideal(W, w)
    members = iv.member_set
    lengths = W.lengths
    edges = []
    for u in iv.members:
        lu = lengths[u]
        for r, row in enumerate(W.left_refl_table, start=1):
            v = row[u]
            if lengths[v] > lu and v in members:
                edges.append((u, v, r))
    return BruhatGraph(iv, tuple(edges))


def directed_distance(W: CoxeterSystem, u: Element, w: Element) -> float:
    """al(u, w); ``math.inf`` when u is not below w."""
    d = down_distances(W, W.index[w]).get(W.index[u])
    return math.inf if d is None else d


def relative_absolute_length(W: CoxeterSystem, u: Element, w: Element) -> int:
    """l'(u w^-1)."""
    return W.absolute_lengths[W.index[multiply(u, inverse(w))]]


def distance_defects(W: CoxeterSystem, w: Element) -> dict[int, tuple[int, int]]:
    """Members u of [e, w] with al(u, w) > l'(uw^-1), mapped to (al, l')."""
    wi = W.index[w]
    winv = inverse(w)
    out = {}
    for u, d in down_distances(W, wi).items():
        a = W.absolute_lengths[W.index[multiply(W.elements[u], winv)]]
        if d != a:
            out[u] = (d, a)
    return out


def distance_condition(W: CoxeterSystem, w: Element) -> bool:
    """al(u, w) = l'(uw^-1) for all u <= w."""
    return not distance_defects(W, w)


def meet_point(W: CoxeterSystem, u: Element, w: Element) -> Element:
    """Some v <= u, w with al(v, w) + al(v, u) = l'(uw^-1).

    Candidates are tried in increasing l'(vu^-1) + l'(vw^-1), ties by
    element index; the first witness is returned.
    """
    target = relative_absolute_length(W, u, w)
    du = down_distances(W, W.index[u])
    dw = down_distances(W, W.index[w])
    common = du.keys() & dw.keys()
    uinv, winv = inverse(u), inverse(w)
    absl = W.absolute_lengths

    def key(v):
        x = W.elements[v]
        return (absl[W.index[multiply(x, uinv)]] + absl[W.index[multiply(x, winv)]], v)

    for v in sorted(common, key=key):
        if du[v] + dw[v] == target:
            return W.elements[v]
    raise SearchExhausted("no meeting point found")


def edge_set_at(W: CoxeterSystem, u: Element, w: Element, interval: BruhatInterval | None = None) -> frozenset[Element]:
    """E(u) = {t in T : tu <= w}."""
    iv = interval if interval is not None else ideal(W, w)
    ui = W.index[u]
    if ui not in iv.member_set:
        raise NotInIdeal("u is not below w")
    return frozenset(W.reflections[r] for r, row in enumerate(W.left_refl_table)
                     if row[ui] in iv.member_set)


def degree(W: CoxeterSystem, u: Element, w: Element, interval: BruhatInterval | None = None) -> int:
    return len(edge_set_at(W, u, w, interval))


def degrees(W: CoxeterSystem, w: Element, interval: BruhatInterval | None = None) -> dict[int, int]:
    iv = interval if interval is not None else ideal(W, w)
    members = iv.member_set
    table = W.left_refl_table
    return {u: sum(1 for row in table if row[u] in members) for u in iv.members}


def is_regular_bg(W: CoxeterSystem, w: Element, interval: BruhatInterval | None = None) -> bool:
    return all(d == w.length for d in degrees(W, w, interval).values())


@dataclass(frozen=True)
class BrokenRhombus:
    x: Element
    y: Element
    z: Element


def _rhombi(graph: BruhatGraph, first_only=False, literal=False):
    W = graph.system
    up = graph.up
    out = []
    for y in graph.interval.members:
        tops = sorted(up[y])
        for x in tops:
            for z in tops:
                if x == z or up[x] & up[z]:
                    continue
                # Without this, (w, e, s) would count whenever e -> w.
                if not literal and (leq_index(W, x, z) or leq_index(W, z, x)):
                    continue
                out.append((x, y, z))
                if first_only:
                    return out
    return out


def broken_rhombi(W: CoxeterSystem, w: Element, graph: BruhatGraph | None = None,
                  literal: bool = False) -> list[BrokenRhombus]:
    """Ordered triples (x, y, z) with x <- y -> z in bg(w), x and z incomparable,
    and no v <= w with x -> v <- z.

    ``literal=True`` drops the incomparability requirement.  That reading
    flags every nontrivial w (take x = w), so emptiness no longer matches
    regularity of bg(w).
    """
    g = graph if graph is not None else bruhat_graph(W, w)
    els = W.elements
    return [BrokenRhombus(els[x], els[y], els[z]) for x, y, z in _rhombi(g, literal=literal)]


def has_broken_rhombus(W: CoxeterSystem, w: Element, graph: BruhatGraph | None = None,
                       literal: bool = False) -> bool:
    g = graph if graph is not None else bruhat_graph(W, w)
    return bool(_rhombi(g, first_only=True, literal=literal))
