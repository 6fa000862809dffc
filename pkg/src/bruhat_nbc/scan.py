"""Per-element scan records, optionally computed by a worker pool."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import arrangement as arr_mod
from . import bruhat, typea
from .coxeter import DEFAULT_CAP, CoxeterDatum, CoxeterSystem, absolute_length_bfs, reduced_word
from .export import element_label

DEFAULT_REGION_LIMIT = 16


@dataclass
class ScanRecord:
    group: str
    element: int
    form: str
    word: list[int]
    length: int
    abs_length: int
    interval_size: int
    nbc_count: int
    region_count: int | None
    star: bool
    distance_cond: bool
    regular_bg: bool
    has_rhombus: bool
    right_hull: bool | None = None
    avoids_patterns: bool | None = None
    seconds: float | None = None

    def as_dict(self, timing: bool = False) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("seconds")
        return d


def scan_element(W: CoxeterSystem, i: int, region_limit: int = DEFAULT_REGION_LIMIT) -> ScanRecord:
    t0 = time.perf_counter()
    x = W.elements[i]
    arr = arr_mod.inversion_arrangement(W, x)
    fam = arr_mod.nbc_sets(arr)
    iv = bruhat.ideal(W, x)
    graph = bruhat.bruhat_graph(W, x, iv)
    regions = arr_mod.region_count_charpoly(arr) if arr.k <= region_limit else None
    rec = ScanRecord(
        group=W.name,
        element=i,
        form=element_label(W, x),
        word=[s + 1 for s in reduced_word(W, x)],
        length=x.length,
        abs_length=absolute_length_bfs(W, x),
        interval_size=len(iv),
        nbc_count=len(fam),
        region_count=regions,
        star=len(fam) == len(iv),
        distance_cond=bruhat.distance_condition(W, x),
        regular_bg=bruhat.is_regular_bg(W, x, iv),
        has_rhombus=bruhat.has_broken_rhombus(W, x, graph),
    )
    if W.datum.kind == "A":
        p = typea.to_permutation(W, x)
        rec.right_hull = typea.has_right_hull_property(p)
        rec.avoids_patterns = typea.avoids_forbidden_patterns(p)
    rec.seconds = time.perf_counter() - t0
    return rec


def record_consistent(rec: ScanRecord) -> bool:
    """Every theorem-mandated equivalence inside one record."""
    ok = rec.star == rec.distance_cond
    ok &= rec.regular_bg != rec.has_rhombus
    ok &= (not rec.regular_bg) or rec.star
    if rec.region_count is not None:
        ok &= rec.region_count == rec.nbc_count
    if rec.right_hull is not None:
        ok &= rec.right_hull == rec.avoids_patterns == rec.star
    return ok


_worker_system: CoxeterSystem | None = None
_worker_limit = DEFAULT_REGION_LIMIT


def _init_worker(datum: CoxeterDatum, cap: int, region_limit: int):
    global _worker_system, _worker_limit
    _worker_system = CoxeterSystem(datum, cap)
    _worker_limit = region_limit


def _work(i: int) -> ScanRecord:
    return scan_element(_worker_system, i, _worker_limit)


def scan_group(W: CoxeterSystem, jobs: int = 1, region_limit: int = DEFAULT_REGION_LIMIT,
               cap: int = DEFAULT_CAP):
    """Yield one record per element in canonical index order."""
    n = len(W.elements)
    if jobs <= 1:
        for i in range(n):
            yield scan_element(W, i, region_limit)
        return
    with ProcessPoolExecutor(jobs, initializer=_init_worker,
                             initargs=(W.datum, cap, region_limit)) as pool:
        yield from pool.map(_work, range(n), chunksize=max(1, n // (4 * jobs)))
