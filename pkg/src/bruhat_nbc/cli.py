"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error (including
cap, parse and IO failures).
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from pathlib import Path

from . import arrangement as arr_mod
from . import bruhat, coxeter, typea, verify
from .coxeter import DEFAULT_CAP, CoxeterDatum, build_system
from .errors import BruhatNBCError
from .export import element_label, nbc_json, to_dot
from .scan import DEFAULT_REGION_LIMIT, record_consistent, scan_group

DEFAULT_GROUPS = {
    "injective": ["A1", "A2", "A3", "A4", "B2", "B3", "G2", "H3"] + [f"I2({m})" for m in range(3, 13)],
    "surjective": ["A1", "A2", "A3", "A4", "B3", "H3"],
    "rhombi": ["A1", "A2", "A3", "A4", "B3", "H3"],
    "regular-surjective": ["A1", "A2", "A3", "A4", "B3", "H3"],
    "carter": ["A1", "A2", "A3", "A4", "A5", "B3", "D4", "H3"],
    "meet": ["A3", "B2"],
    "oracle": ["A1", "A2", "A3", "A4", "B3"],
}


def _add_group_args(p, required=True):
    p.add_argument("--type", dest="kind", required=required,
                   help="A, B, D, E, F, G, H, I2 (or E6, H3, I2(5), ...)")
    p.add_argument("--rank", type=int)
    p.add_argument("--m", type=int, help="dihedral order for I2")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order")


def _add_element_args(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--perm", help="one-line permutation (type A), e.g. 3412")
    g.add_argument("--word", help="generator word, 1-based, e.g. '1,2,1'; 'e' for identity")
    g.add_argument("--index", type=int, help="canonical element index")


def _system(args):
    datum = CoxeterDatum.parse(args.kind, args.rank, args.m)
    return build_system(datum, cap=args.cap)


def _element(W, args):
    if args.perm is not None:
        return typea.to_element(W, typea.Permutation.parse(args.perm))
    if args.word is not None:
        text = args.word.strip()
        if text in ("", "e"):
            return W.e
        letters = [int(v) - 1 for v in text.replace(",", " ").split()]
        if any(not 0 <= s < W.rank for s in letters):
            raise BruhatNBCError(f"generator index out of range 1..{W.rank}")
        return W.element(letters)
    if not 0 <= args.index < len(W.elements):
        raise BruhatNBCError(f"index out of range 0..{len(W.elements) - 1}")
    return W.elements[args.index]


def _words(W, x, strategy, seed, samples=20):
    if strategy == "canonical":
        return [coxeter.reduced_word(W, x)]
    if strategy == "all":
        return coxeter.enumerate_reduced_words(W, x)
    rng = random.Random(seed)
    return [coxeter.sample_reduced_word(W, x, rng) for _ in range(samples)]


# -- subcommands --------------------------------------------------------------


def cmd_scan(args) -> int:
    W = _system(args)
    out = open(args.out, "w") if args.out else sys.stdout
    bad = 0
    try:
        for rec in scan_group(W, args.jobs, args.region_limit, args.cap):
            bad += not record_consistent(rec)
            out.write(json.dumps(rec.as_dict(args.timing)) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    if bad:
        print(f"{bad} records violate a theorem-level equivalence", file=sys.stderr)
        return 1
    return 0


def element_report(W, x, words=None, rhombi=False, with_phi=False) -> dict:
    arr = arr_mod.inversion_arrangement(W, x)
    fam = arr_mod.nbc_sets(arr)
    iv = bruhat.ideal(W, x)
    graph = bruhat.bruhat_graph(W, x, iv)
    chk = arr_mod.phi_check(arr, fam, iv)
    rep = {
        "group": W.name,
        "element": W.index[x],
        "form": element_label(W, x),
        "word": [s + 1 for s in arr.word],
        "length": x.length,
        "abs_length": coxeter.absolute_length_bfs(W, x),
        "abs_length_carter": coxeter.absolute_length_carter(W, x),
        "interval_size": len(iv),
        "nbc_count": len(fam),
        "region_count": arr_mod.region_count_charpoly(arr) if arr.k <= arr_mod.MAX_HYPERPLANES else None,
        "star": chk.surjective,
        "phi_injective": chk.injective,
        "distance_cond": bruhat.distance_condition(W, x),
        "regular_bg": bruhat.is_regular_bg(W, x, iv),
        "edges": len(graph.edges),
        "non_covering_edges": len(graph.non_covering_edges()),
    }
    if W.datum.kind == "A":
        p = typea.to_permutation(W, x)
        rep["right_hull"] = typea.has_right_hull_property(p)
        rep["avoids_patterns"] = typea.avoids_forbidden_patterns(p)
    if rhombi:
        rep["broken_rhombi"] = [[element_label(W, e) for e in (r.x, r.y, r.z)]
                                for r in bruhat.broken_rhombi(W, x, graph)]
    if with_phi:
        rep["nbc"] = nbc_json(arr, fam, with_phi=True)
    if words is not None:
        rep["nbc_by_word"] = [
            {"word": [s + 1 for s in wd],
             "nbc_count": len(arr_mod.nbc_sets(arr_mod.inversion_arrangement(W, x, wd)))}
            for wd in words]
    return rep


def cmd_element(args) -> int:
    W = _system(args)
    x = _element(W, args)
    words = None if args.word_strategy == "canonical" else _words(W, x, args.word_strategy, args.seed)
    rep = element_report(W, x, words, args.rhombi, args.phi)
    if args.json:
        print(json.dumps(rep, indent=2))
        return 0
    for key in ("group", "form", "word", "length", "abs_length", "interval_size", "nbc_count",
                "region_count", "star", "distance_cond", "regular_bg", "right_hull", "avoids_patterns"):
        if key in rep:
            print(f"{key:>16}: {rep[key]}")
    if args.rhombi:
        print(f"{'broken_rhombi':>16}: {len(rep['broken_rhombi'])}")
        for r in rep["broken_rhombi"]:
            print("    (" + ", ".join(r) + ")")
    if args.phi:
        print(f"phi table (word {rep['nbc']['word']}):")
        for row in rep["nbc"]["phi"]:
            print(f"    {str(row['nbc']):<20} -> {row['image']}")
    if words is not None:
        counts = {r["nbc_count"] for r in rep["nbc_by_word"]}
        print(f"{'nbc over words':>16}: {len(words)} words, counts {sorted(counts)}")
    print(json.dumps(rep))
    return 0


def cmd_graph(args) -> int:
    W = _system(args)
    x = _element(W, args)
    text = to_dot(bruhat.bruhat_graph(W, x))
    if args.dot and args.dot != "-":
        Path(args.dot).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _run_suite(name, args) -> list[verify.SuiteResult]:
    if name == "worked-example":
        return [verify.suite_worked_example()]
    if name == "collection":
        return [verify.suite_collection(args.n or 6)]
    if name == "census":
        Ws = [_system(args)] if args.kind else [build_system("A3")]
        results = [verify.suite_census(W) for W in Ws]
        for r in results:
            print(f"     census {r.group}: (*) holds for {r.extra['star']}/{r.checked}; "
                  f"fails at {r.extra['failures']}")
        return results
    fn = verify.GROUP_SUITES[name]
    Ws = [_system(args)] if args.kind else [build_system(g) for g in DEFAULT_GROUPS[name]]
    out = []
    for W in Ws:
        if name == "oracle":
            strategy = args.word_strategy
            if not args.kind and W.name == "A3":
                strategy = "all"
            out.append(fn(W, strategy, args.seed))
        else:
            out.append(fn(W))
    return out


def cmd_verify(args) -> int:
    suites = args.suite or ["all"]
    if "all" in suites:
        suites = list(verify.SUITES)
    failed = 0
    for name in suites:
        if name not in verify.SUITES:
            print(f"unknown suite {name!r}; choose from {', '.join(verify.SUITES)}", file=sys.stderr)
            return 2
        for res in _run_suite(name, args):
            print(res.line())
            for v in res.violations[:10]:
                print(f"     {v}")
            failed += not res.ok
    print(f"{'FAILED' if failed else 'OK'}: {failed} failing suite(s)")
    return 1 if failed else 0


def cmd_report(args) -> int:
    from .plotting import plot_bruhat_graph, plot_census

    W = _system(args)
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    records = list(scan_group(W, args.jobs, args.region_limit, args.cap))
    stem = W.name.replace("(", "").replace(")", "")
    rows = [r.as_dict() for r in records]
    with open(outdir / f"scan_{stem}.csv", "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        for row in rows:
            writer.writerow({k: (" ".join(map(str, v)) if isinstance(v, list) else v) for k, v in row.items()})
    with open(outdir / f"scan_{stem}.jsonl", "w") as fh:
        for row in rows:
            fh.write(json.dumps(row) + "\n")
    written = [outdir / f"scan_{stem}.csv", outdir / f"scan_{stem}.jsonl"]
    star = sum(r.star for r in records)
    written.append(plot_census(records, outdir / f"census_{stem}.png",
                               title=f"{W.name}: (*) holds for {star}/{len(records)}"))
    if args.perm or args.word or args.index is not None:
        x = _element(W, args)
        label = element_label(W, x)
        g = bruhat.bruhat_graph(W, x)
        written.append(plot_bruhat_graph(g, outdir / f"bruhat_graph_{stem}_{label}.png",
                                         title=f"bg({label}) in {W.name}"))
        (outdir / f"bruhat_graph_{stem}_{label}.dot").write_text(to_dot(g))
        written.append(outdir / f"bruhat_graph_{stem}_{label}.dot")
    for p in written:
        print(p)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bruhat-nbc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", help="one JSON record per group element")
    _add_group_args(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--region-limit", type=int, default=DEFAULT_REGION_LIMIT,
                   help="skip the Whitney-sum region count above this many hyperplanes")
    p.add_argument("--timing", action="store_true", help="include per-record seconds")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("element", help="report on one element")
    _add_group_args(p)
    _add_element_args(p)
    p.add_argument("--rhombi", action="store_true", help="list broken rhombi")
    p.add_argument("--phi", action="store_true", help="print the NBC -> [e,w] table")
    p.add_argument("--json", action="store_true", help="JSON only")
    p.add_argument("--word-strategy", choices=("canonical", "all", "sample"), default="canonical")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_element)

    p = sub.add_parser("graph", help="Bruhat graph bg(w) as DOT")
    _add_group_args(p)
    _add_element_args(p)
    p.add_argument("--dot", help="output file (default stdout)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append",
                   help=f"one of: all, {', '.join(verify.SUITES)} (repeatable)")
    _add_group_args(p, required=False)
    p.add_argument("--n", type=int, help="permutation size for the collection suite")
    p.add_argument("--word-strategy", choices=("canonical", "all", "sample"), default="canonical")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="scan tables plus figures into a directory")
    _add_group_args(p)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--region-limit", type=int, default=DEFAULT_REGION_LIMIT)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--perm")
    g.add_argument("--word")
    g.add_argument("--index", type=int)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BruhatNBCError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
