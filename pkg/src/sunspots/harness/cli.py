"""Command line: analyze, verify, extract, generate, constants, recheck.

Exit status: 0 on success with no violations, 1 when violations are found,
2 on usage errors (messages go to stderr).
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Any, Sequence

from ..coloring import PreconditionError, chromatic_number, clique_number, find_triangle, is_liberal, is_non_degenerate
from ..formats import FormatError, read_graphs, serialize_graph6
from ..generators import generate
from ..graph import Graph, GraphError
from ..leveling import TheoremViolation
from ..structures import enumerate_holes, find_4_sunspot, find_t_sun, flapless_violation
from ..witness import ExtractionFailure, extract_witness, theorem_constant
from .campaigns import CHECKERS, recheck_report, verify_campaign
from .config import HarnessConfig
from .corpus import exhaustive_corpus, file_corpus, random_gnp, random_triangle_free
from .enumerate import FAMILIES, CapExceeded
from .report import load_report, save_report

DEFAULT_PREDICATE = {"thm-4.2": "triangle-free-no-6-hole", "thm-4.3": "all", "obs-2.2": "all"}


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, text: str, doc: Any) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


def analyze_graph(G: Graph, ell: int = 5) -> dict[str, Any]:
    k, _ = chromatic_number(G)
    tri = find_triangle(G)
    spot = find_4_sunspot(G)
    sun = find_t_sun(G, ell)
    lengths = Counter(H.length for H in enumerate_holes(G, 4))
    return {
        "graph6": serialize_graph6(G),
        "n": G.n,
        "m": G.m,
        "omega": clique_number(G),
        "chi": k,
        "triangle_free": tri is None,
        "triangle": list(tri) if tri else None,
        "sunspot": {"x": list(spot.x), "y": list(spot.y)} if spot else None,
        "sun_min_t": ell,
        "sun": {"t": sun.t, "cycle": list(sun.cycle), "pendants": list(sun.pendants)} if sun else None,
        "liberal": is_liberal(G),
        "non_degenerate": is_non_degenerate(G),
        "flapless": flapless_violation(G) is None,
        "holes": {"count": sum(lengths.values()), "by_length": {str(t): lengths[t] for t in sorted(lengths)},
                  "longest": max(lengths, default=0)},
    }


def _analysis_text(a: dict[str, Any]) -> str:
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    holes = ", ".join(f"{t}:{c}" for t, c in a["holes"]["by_length"].items()) or "none"
    sun = f"t={a['sun']['t']} on {a['sun']['cycle']}" if a["sun"] else "none"
    spot = f"{a['sunspot']['x']};{a['sunspot']['y']}" if a["sunspot"] else "none"
    return (f"{a['graph6']}\n  n={a['n']} m={a['m']} omega={a['omega']} chi={a['chi']}\n"
            f"  triangle-free={yn(a['triangle_free'])} 4-sunspot={spot} sun(t>={a['sun_min_t']})={sun}\n"
            f"  liberal={yn(a['liberal'])} non-degenerate={yn(a['non_degenerate'])} flapless={yn(a['flapless'])}\n"
            f"  holes={a['holes']['count']} ({holes})")


def _read(source: str) -> list[Graph]:
    try:
        return read_graphs(source)
    except OSError as err:
        raise UsageError(f"cannot read {source}: {err}") from err
    except FormatError as err:
        raise UsageError(f"{source}: {err}") from err


def cmd_analyze(args: argparse.Namespace) -> int:
    out = [analyze_graph(G, args.ell) for G in _read(args.source)]
    _emit(args, "\n".join(_analysis_text(a) for a in out), out)
    return 0


def _corpus(args: argparse.Namespace, config: HarnessConfig):
    if args.file:
        return file_corpus(args.file)
    if args.corpus == "exhaustive":
        pred = args.predicate or DEFAULT_PREDICATE.get(args.lemma, "triangle-free-sunspot-free")
        return exhaustive_corpus(args.nmax, pred, config=config)
    if args.corpus == "random":
        return random_triangle_free(args.n, args.count, args.seed, config=config)
    return random_gnp(args.n, args.p, args.count, args.seed, config=config)


def cmd_verify(args: argparse.Namespace) -> int:
    config = HarnessConfig(jobs=args.jobs, timeout_per_graph=args.timeout_per_graph, seed=args.seed)
    try:
        corpus = _corpus(args, config)
    except (CapExceeded, ValueError) as err:
        raise UsageError(str(err)) from err
    report = verify_campaign(corpus, args.lemma, jobs=args.jobs, timeout=args.timeout_per_graph, seed=args.seed)
    if args.out:
        save_report(report, args.out)
    s = report.summary
    text = (f"{args.lemma}: {s['graphs']} graphs, {s['holds']} hold, {s['violated']} violated, "
            f"{s['not-applicable']} not applicable, {s['skipped']} skipped")
    if args.json:
        sys.stdout.write(report.dumps())
    else:
        print(text)
        for e in report.verdicts:
            if e["status"] == "violated":
                print(f"  violated #{e['index']} {e['graph6']}: {json.dumps(e['detail'], sort_keys=True)}")
    return 1 if report.violations else 0


def cmd_extract(args: argparse.Namespace) -> int:
    results = []
    status = 0
    for G in _read(args.source):
        g6 = serialize_graph6(G)
        try:
            res = extract_witness(G, args.ell, args.tau)
            results.append({"graph6": g6, "status": "witness", **res.to_json()})
        except ExtractionFailure as err:
            results.append({"graph6": g6, "status": "failed", "stage": err.stage, "message": str(err),
                            "trace": err.trace})
        except PreconditionError as err:
            results.append({"graph6": g6, "status": "precondition", "message": str(err)})
        except TheoremViolation as err:
            results.append({"graph6": g6, "status": "theorem-violation", "message": str(err), "bundle": err.bundle})
            status = 1
    lines = []
    for r in results:
        if r["status"] == "witness":
            lines.append(f"{r['graph6']}: {r['kind']} {json.dumps(r['witness'], sort_keys=True)}")
        else:
            lines.append(f"{r['graph6']}: {r['status']}: {r['message']}")
    _emit(args, "\n".join(lines), results)
    return status


def _param(tok: str) -> int | str:
    try:
        return int(tok)
    except ValueError:
        return tok


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        G = generate(args.kind, *[_param(p) for p in args.params])
    except (TypeError, ValueError) as err:
        raise UsageError(f"generate {args.kind}: {err}") from err
    print(serialize_graph6(G))
    return 0


def cmd_constants(args: argparse.Namespace) -> int:
    try:
        k = theorem_constant(args.ell, args.tau)
    except ValueError as err:  # includes ConstantUnavailable
        raise UsageError(str(err)) from err
    _emit(args, f"ell={k.ell} tau={k.tau} c={k.c}", {"ell": k.ell, "tau": k.tau, "c": k.c})
    return 0


def cmd_recheck(args: argparse.Namespace) -> int:
    try:
        report = load_report(args.report)
    except (OSError, ValueError, KeyError) as err:
        raise UsageError(f"cannot load report {args.report}: {err}") from err
    rows = recheck_report(report)
    bad = [r for r in rows if not r[1]]
    _emit(args, f"{len(rows)} violated verdicts rechecked, {len(bad)} not reproduced",
          [{"index": i, "confirmed": ok, "status": s} for i, ok, s in rows])
    return 1 if bad else 0


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes for campaigns")
    p.add_argument("--seed", type=int, default=d(0), help="seed for random corpora")
    p.add_argument("--timeout-per-graph", type=float, default=d(None), metavar="SECONDS",
                   help="per-graph time limit; slow graphs are reported as skipped")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sunspots", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="per-graph structural report")
    p.add_argument("source", help="graph6 or edge-list file, '-' for stdin")
    p.add_argument("--ell", type=int, default=5, help="smallest sun length to look for")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="run a lemma campaign over a corpus")
    p.add_argument("lemma", choices=list(CHECKERS))
    p.add_argument("--corpus", choices=["exhaustive", "random", "gnp"], default="exhaustive")
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--predicate", choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, default=12, help="vertex count for random corpora")
    p.add_argument("--count", type=int, default=50, help="graph count for random corpora")
    p.add_argument("--p", type=float, default=0.3, help="edge probability for gnp")
    p.add_argument("--file", help="read the corpus from a graph file instead")
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extract", parents=[common], help="sun or 4-sunspot witness extraction")
    p.add_argument("source")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--tau", type=int)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("generate", parents=[common], help="emit a named graph as graph6")
    p.add_argument("kind")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("constants", parents=[common], help="theorem constants")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--tau", type=int)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("recheck", parents=[common], help="re-derive the violations in a saved report")
    p.add_argument("report")
    p.set_defaults(func=cmd_recheck)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs < 1:
        print("sunspots: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, GraphError) as err:
        print(f"sunspots: {err}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


cli = main
