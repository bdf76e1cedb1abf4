"""Run every campaign over its default exhaustive corpus and save the reports.

    python3 scripts/run_campaigns.py --nmax 8 --out reports/
"""
from __future__ import annotations

import argparse
import time
from pathlib import Path

from sunspots.harness import CHECKERS, exhaustive_corpus, save_report, verify_campaign
from sunspots.harness.cli import DEFAULT_PREDICATE


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--all-nmax", type=int, default=7, help="order limit for campaigns over all graphs")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="reports")
    ap.add_argument("--only", nargs="*", choices=list(CHECKERS))
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    corpora = {}
    status = 0
    for lemma in args.only or CHECKERS:
        pred = DEFAULT_PREDICATE.get(lemma, "triangle-free-sunspot-free")
        nmax = args.all_nmax if pred == "all" else args.nmax
        if (nmax, pred) not in corpora:
            corpora[nmax, pred] = exhaustive_corpus(nmax, pred)
        start = time.perf_counter()
        report = verify_campaign(corpora[nmax, pred], lemma, jobs=args.jobs)
        save_report(report, out / f"{lemma}.json")
        s = report.summary
        print(f"{lemma:24} {pred:26} n<={nmax}  graphs={s['graphs']:6} holds={s['holds']:6} "
              f"n/a={s['not-applicable']:6} violated={s['violated']} skipped={s['skipped']} "
              f"({time.perf_counter() - start:.1f}s)")
        status |= bool(report.violations)
    return int(status)


if __name__ == "__main__":
    raise SystemExit(main())
