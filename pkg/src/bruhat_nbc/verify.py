"""Exhaustive verification suites.

Each suite walks a whole group (or set of pairs) and collects violations
of one theorem-level statement.  They back both ``bruhat-nbc verify`` and
the acceptance tests.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import arrangement as arr_mod
from . import bruhat, coxeter, typea
from .coxeter import CoxeterSystem, build_system


@dataclass
class SuiteResult:
    suite: str
    group: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    seconds: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"{status} {self.suite:<18} {self.group:<8} checked={self.checked:<6} "
                f"violations={len(self.violations)} time={self.seconds:.2f}s")


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _label(W: CoxeterSystem, x) -> str:
    if W.datum.kind == "A":
        return str(typea.to_permutation(W, x))
    return f"#{W.index[x]}"


@_timed
def suite_injective(W: CoxeterSystem) -> SuiteResult:
    """phi is well defined and injective for every w."""
    res = SuiteResult("injective", W.name)
    for x in W.elements:
        chk = arr_mod.phi_check(arr_mod.inversion_arrangement(W, x))
        res.checked += 1
        if not (chk.well_defined and chk.injective):
            res.violations.append(f"{_label(W, x)}: {chk}")
    return res


@_timed
def suite_surjective(W: CoxeterSystem) -> SuiteResult:
    """phi surjective iff the distance condition holds."""
    res = SuiteResult("surjective", W.name)
    for x in W.elements:
        surj = arr_mod.phi_check(arr_mod.inversion_arrangement(W, x)).surjective
        dist = bruhat.distance_condition(W, x)
        res.checked += 1
        if surj != dist:
            res.violations.append(f"{_label(W, x)}: surjective={surj} distance={dist}")
    return res


@_timed
def suite_rhombi(W: CoxeterSystem) -> SuiteResult:
    """No broken rhombi iff bg(w) is l(w)-regular."""
    res = SuiteResult("rhombi", W.name)
    for x in W.elements:
        g = bruhat.bruhat_graph(W, x)
        regular = bruhat.is_regular_bg(W, x, g.interval)
        rhombus = bruhat.has_broken_rhombus(W, x, g)
        res.checked += 1
        if regular == rhombus:
            res.violations.append(f"{_label(W, x)}: regular={regular} rhombus={rhombus}")
    return res


@_timed
def suite_regular_surjective(W: CoxeterSystem) -> SuiteResult:
    """Regular bg(w) implies phi surjective."""
    res = SuiteResult("regular-surjective", W.name)
    for x in W.elements:
        res.checked += 1
        if bruhat.is_regular_bg(W, x):
            if not arr_mod.phi_check(arr_mod.inversion_arrangement(W, x)).surjective:
                res.violations.append(f"{_label(W, x)}: regular but phi not surjective")
    return res


@_timed
def suite_carter(W: CoxeterSystem) -> SuiteResult:
    """BFS absolute length equals rank(I - w); in type A also n - c(w)."""
    res = SuiteResult("carter", W.name)
    type_a = W.datum.kind == "A"
    for x in W.elements:
        bfs = coxeter.absolute_length_bfs(W, x)
        car = coxeter.absolute_length_carter(W, x)
        res.checked += 1
        if bfs != car:
            res.violations.append(f"{_label(W, x)}: bfs={bfs} carter={car}")
        if type_a:
            cyc = typea.absolute_length_cycles(typea.to_permutation(W, x))
            if cyc != bfs:
                res.violations.append(f"{_label(W, x)}: bfs={bfs} cycles={cyc}")
    return res


@_timed
def suite_meet(W: CoxeterSystem) -> SuiteResult:
    """A meeting point exists for every ordered pair (u, w)."""
    res = SuiteResult("meet", W.name)
    for w in W.elements:
        for u in W.elements:
            res.checked += 1
            target = bruhat.relative_absolute_length(W, u, w)
            try:
                v = bruhat.meet_point(W, u, w)
            except Exception as exc:  # SearchExhausted is a violation, not a crash
                res.violations.append(f"{_label(W, u)},{_label(W, w)}: {exc!r}")
                continue
            ok = (bruhat.bruhat_leq(W, v, u) and bruhat.bruhat_leq(W, v, w)
                  and bruhat.directed_distance(W, v, w) + bruhat.directed_distance(W, v, u) == target)
            if not ok:
                res.violations.append(f"{_label(W, u)},{_label(W, w)}: bad witness")
    return res


@_timed
def suite_oracle(W: CoxeterSystem, word_strategy: str = "canonical", seed: int = 0,
                 word_cap: int = 10_000, samples: int = 20) -> SuiteResult:
    """|NBC| equals the Whitney-sum region count.

    With ``word_strategy`` "all" (up to ``word_cap`` words) or "sample"
    (``samples`` random words), |NBC| must also be the same for every word.
    """
    rng = random.Random(seed)
    res = SuiteResult("oracle", W.name)
    for x in W.elements:
        a = arr_mod.inversion_arrangement(W, x)
        n = len(arr_mod.nbc_sets(a))
        r = arr_mod.region_count_charpoly(a)
        res.checked += 1
        if n != r:
            res.violations.append(f"{_label(W, x)}: nbc={n} regions={r}")
        if word_strategy == "all":
            words = coxeter.enumerate_reduced_words(W, x, word_cap)
        elif word_strategy == "sample":
            words = [coxeter.sample_reduced_word(W, x, rng) for _ in range(samples)]
        else:
            words = []
        for word in words:
            m = len(arr_mod.nbc_sets(arr_mod.inversion_arrangement(W, x, word)))
            if m != n:
                res.violations.append(f"{_label(W, x)} word={word}: nbc={m} != {n}")
    return res


@_timed
def suite_census(W: CoxeterSystem) -> SuiteResult:
    """Counts elements with #NBC = |[e, w]| and lists the others in ``extra``."""
    res = SuiteResult("census", W.name)
    failures = res.extra.setdefault("failures", [])
    for x in W.elements:
        res.checked += 1
        n = len(arr_mod.nbc_sets(arr_mod.inversion_arrangement(W, x)))
        if n != len(bruhat.ideal(W, x)):
            failures.append(_label(W, x))
    res.extra["star"] = res.checked - len(failures)
    return res


@_timed
def suite_collection(n: int) -> SuiteResult:
    """The four type-A conditions agree for every permutation of n letters."""
    W = build_system("A", rank=n - 1) if n > 1 else None
    res = SuiteResult("collection", f"S{n}")
    if W is None:
        res.checked = 1
        return res
    for p in typea.all_permutations(n):
        chk = typea.check_collection(W, p)
        res.checked += 1
        if not chk.consistent:
            res.violations.append(f"{p}: {chk}")
    return res


@_timed
def suite_worked_example() -> SuiteResult:
    """The 3412 example in S4."""
    res = SuiteResult("worked-example", "A3")
    W = build_system("A", rank=3)
    P = typea.Permutation.parse
    w = typea.to_element(W, P("3412"))
    a = arr_mod.inversion_arrangement(W, w)
    iv = bruhat.ideal(W, w)
    fam = arr_mod.nbc_sets(a)
    chk = arr_mod.phi_check(a, fam, iv)
    g = bruhat.bruhat_graph(W, w, iv)
    rh = {tuple(str(typea.to_permutation(W, e)) for e in (r.x, r.y, r.z))
          for r in bruhat.broken_rhombi(W, w, g)}
    checks = {
        "interval size 14": len(iv) == 14,
        "#NBC 14": len(fam) == 14,
        "region oracle 14": arr_mod.region_count_charpoly(a) == 14,
        "phi bijective": chk.injective and chk.surjective and chk.well_defined,
        "2 non-covering edges": len(g.non_covering_edges()) == 2,
        "not regular": not bruhat.is_regular_bg(W, w, iv),
        "rhombus (2314,1324,1342)": ("2314", "1324", "1342") in rh,
        "rhombus (1432,1234,2134)": ("1432", "1234", "2134") in rh,
    }
    for name, ok in checks.items():
        res.checked += 1
        if not ok:
            res.violations.append(name)
    return res


GROUP_SUITES = {
    "injective": suite_injective,
    "surjective": suite_surjective,
    "rhombi": suite_rhombi,
    "regular-surjective": suite_regular_surjective,
    "carter": suite_carter,
    "meet": suite_meet,
    "oracle": suite_oracle,
}

SUITES = tuple(GROUP_SUITES) + ("collection", "census", "worked-example")
