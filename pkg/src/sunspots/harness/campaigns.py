"""Corpus sweeps that check each lemma or theorem instance by instance.

A checker turns one graph into a stream of instance verdicts.  The graph's
verdict is ``violated`` at the first violated instance, ``holds`` if some
instance holds, and ``not-applicable`` otherwise, so vacuous passes stay
visible.  Graphs that run past the per-graph timeout are ``skipped``.
"""
from __future__ import annotations

import signal
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterator

from .. import __version__
from ..coloring import PreconditionError, chi, extract_critical, find_triangle
from ..flare import FlareConstructionError, check_common_neighbor_bounds, construct_full_flare, theorem_hypotheses
from ..formats import parse_graph6, serialize_graph6
from ..generators import t_sunspot
from ..graph import Graph, induced_subgraph, members, neighbors, popcount, second_neighborhood, vset
from ..leveling import (
    HOLDS,
    NOT_APPLICABLE,
    VIOLATED,
    Leveling,
    TheoremViolation,
    Verdict,
    bfs_levelings,
    build_deep_leveling,
    check_flap_endpoint_lemma,
    check_sector_lemmas,
    flap_theorem_pipeline,
    flaps_on_hole,
    holes_in_top,
)
from ..structures import enumerate_holes, find_4_sunspot, find_hole_min_length, find_t_sun, longest_hole_length
from ..witness import claim_violation
from .canon import certificate
from .corpus import Corpus
from .report import SKIPPED, Report

Instances = Iterator[Verdict]


def _na(reason: str) -> Verdict:
    return Verdict(NOT_APPLICABLE, {"reason": reason})


def _base(G: Graph) -> str | None:
    if find_triangle(G) is not None:
        return "graph has a triangle"
    if find_4_sunspot(G) is not None:
        return "graph has a 4-sunspot"
    return None


def _deep_thresholds(G: Graph) -> list[int]:
    k = chi(G)
    return [c for c in range(1, k) if k > 2 * c + 1]


def _levelings(G: Graph, min_r: int) -> list[Leveling]:
    """BFS levelings and their truncations, plus the deep levelings when they exist."""
    levs = list(bfs_levelings(G, min_r))
    if find_triangle(G) is None:
        for c in _deep_thresholds(G):
            try:
                lev, _ = build_deep_leveling(G, c)
            except TheoremViolation:
                continue  # reported by the lem-2.3 campaign
            if lev.r >= min_r:
                levs.append(lev)
    return levs


def _flare_hosts(G: Graph) -> Iterator[tuple[Graph, tuple[int, ...]]]:
    """G itself and each distinct top level of a BFS leveling, as induced subgraphs."""
    yield G, tuple(range(G.n))
    seen = {G.full}
    for lev in bfs_levelings(G, 1):
        if lev.top not in seen and popcount(lev.top) >= 6:
            seen.add(lev.top)
            yield induced_subgraph(G, lev.top)
    if find_triangle(G) is None:
        for c in _deep_thresholds(G):
            try:
                lev, _ = build_deep_leveling(G, c)
            except TheoremViolation:
                continue
            if lev.top not in seen:
                seen.add(lev.top)
                yield induced_subgraph(G, lev.top)


def _obs_critical(G: Graph) -> Instances:
    k = chi(G)
    if k <= 1:
        yield _na("chi <= 1")
        return
    for c in range(1, k):
        try:
            cert = extract_critical(G, c)
        except AssertionError as err:
            yield Verdict(VIOLATED, {"graph6": serialize_graph6(G), "c": c, "problem": str(err)})
            continue
        yield Verdict(HOLDS, {"c": c, "S": members(cert.S)})


def _deep_leveling(G: Graph) -> Instances:
    if find_triangle(G) is not None:
        yield _na("graph has a triangle")
        return
    cs = _deep_thresholds(G)
    if not cs:
        yield _na("chi <= 3, no threshold c with chi > 2c + 1")
        return
    for c in cs:
        try:
            lev, _ = build_deep_leveling(G, c)
        except TheoremViolation as err:
            yield Verdict(VIOLATED, err.bundle)
            continue
        yield Verdict(HOLDS, {"c": c, "levels": lev.as_lists()})


def _flap_theorem(G: Graph) -> Instances:
    why = _base(G)
    if why is not None:
        yield _na(why)
        return
    cs = _deep_thresholds(G)
    if not cs:
        yield _na("chi <= 3, no threshold c with chi > 2c + 1")
        return
    for c in cs:
        try:
            res = flap_theorem_pipeline(G, c)
        except TheoremViolation as err:
            yield Verdict(VIOLATED, err.bundle)
            continue
        yield Verdict(HOLDS, {"c": c, "L": members(res.L)})


def _sectors(which: str) -> Callable[[Graph], Instances]:
    def run(G: Graph) -> Instances:
        why = _base(G)
        if why is not None:
            yield _na(why)
            return
        min_r = 2 if which == "lem-2.4" else 3
        found = False
        for lev in _levelings(G, min_r):
            for H in holes_in_top(G, lev):
                found = True
                xs = lev.levels[-2] if which == "lem-2.4" else lev.top & ~H.mask
                for x in members(xs):
                    v = check_sector_lemmas(G, lev, H, x)
                    if v.status == NOT_APPLICABLE or v.detail.get("lemma") == which:
                        yield v
        if not found:
            yield _na(f"no hole of length >= 6 in the top level of any leveling with r >= {min_r}")
    return run


def _flap_endpoints(G: Graph) -> Instances:
    why = _base(G)
    if why is not None:
        yield _na(why)
        return
    found = False
    for lev in _levelings(G, 3):
        for H in holes_in_top(G, lev):
            for flap in flaps_on_hole(G, H, lev.top | lev.levels[-2]):
                found = True
                yield check_flap_endpoint_lemma(G, lev, H, flap)
    if not found:
        yield _na("no flap with ends in the top two levels of a leveling with r >= 3")


def _common_neighbours(G: Graph) -> Instances:
    found = False
    for host, labels in _flare_hosts(G):
        for H in enumerate_holes(host, 6):
            found = True
            v = check_common_neighbor_bounds(host, H, None)
            if v.status == VIOLATED:
                v = Verdict(VIOLATED, {**v.detail, "host": list(labels)})
            yield v
    if not found:
        yield _na("no hole of length >= 6")


def _greedy_flare(G: Graph) -> Instances:
    found = False
    for host, labels in _flare_hosts(G):
        for H in enumerate_holes(host, 6):
            found = True
            why = theorem_hypotheses(host, H)
            if why is not None:
                yield _na(why)
                continue
            ds = [d for d in range(1, H.length // 2 + 1) if host.min_degree() >= 4 * d - 1]
            if not ds:
                yield _na(f"minimum degree {host.min_degree()} < 3")
                continue
            for d in ds:
                try:
                    flare = construct_full_flare(host, H, d)
                except TheoremViolation as err:
                    yield Verdict(VIOLATED, {**err.bundle, "host": list(labels)})
                    continue
                yield Verdict(HOLDS, {"d": d, "flare": flare.to_json()})
    if not found:
        yield _na("no hole of length >= 6")


def _second_neighbourhoods(G: Graph) -> Instances:
    if find_triangle(G) is not None:
        yield _na("graph has a triangle")
        return
    if next(enumerate_holes(G, 6, 6), None) is not None:
        yield _na("graph has a 6-hole")
        return
    for v in range(G.n):
        k = chi(G, second_neighborhood(G, v))
        if k > 2:
            yield Verdict(VIOLATED, {"graph6": serialize_graph6(G), "v": v, "chi_N2": k})
        else:
            yield Verdict(HOLDS, {"v": v, "chi_N2": k})


def _local_bound(G: Graph) -> Instances:
    kappa = 1
    for v in range(G.n):
        kappa = max(kappa, chi(G, neighbors(G, v)), chi(G, second_neighborhood(G, v)))
    ell = max(4, longest_hole_length(G))
    k = chi(G)
    bound = (2 * ell - 2) * kappa
    detail = {"chi": k, "kappa": kappa, "ell": ell, "bound": bound}
    if k > bound:
        yield Verdict(VIOLATED, {"graph6": serialize_graph6(G), **detail})
    else:
        yield Verdict(HOLDS, detail)


def _pendant_claim(G: Graph, ell: int = 6) -> Instances:
    H0 = find_hole_min_length(G, ell)
    if H0 is None:
        yield _na(f"no hole of length >= {ell}")
        return
    for H in enumerate_holes(G, H0.length, H0.length):
        try:
            flare = construct_full_flare(G, H, ell)
        except FlareConstructionError as err:
            yield _na(f"no greedy full {ell}-safe flare: {err}")
            continue
        except TheoremViolation as err:
            yield Verdict(VIOLATED, err.bundle)
            continue
        bad = claim_violation(G, flare)
        if bad is not None:
            yield Verdict(VIOLATED, {"graph6": serialize_graph6(G), "flare": flare.to_json(), "pair": list(bad)})
        else:
            yield Verdict(HOLDS, {"hole": list(H.cyc), "flare": flare.to_json()})


def _sunspot_in_sun(G: Graph) -> Instances:
    w = find_t_sun(G, 4)
    if w is None:
        yield _na("no t-sun")
        return
    keep = vset(w.cycle + w.pendants[:-1])
    sub, _ = induced_subgraph(G, keep)
    ok = certificate(sub) == certificate(t_sunspot(w.t))
    if ok and w.t == 4:
        ok = find_4_sunspot(G) is not None
    detail = {"t": w.t, "cycle": list(w.cycle), "pendants": list(w.pendants)}
    if ok:
        yield Verdict(HOLDS, detail)
    else:
        yield Verdict(VIOLATED, {"graph6": serialize_graph6(G), **detail})


CHECKERS: dict[str, Callable[[Graph], Instances]] = {
    "obs-2.2": _obs_critical,
    "lem-2.3": _deep_leveling,
    "lem-2.4": _sectors("lem-2.4"),
    "lem-2.5": _sectors("lem-2.5"),
    "lem-2.6": _flap_endpoints,
    "thm-2.1": _flap_theorem,
    "lem-3.2": _common_neighbours,
    "thm-3.1": _greedy_flare,
    "thm-4.2": _second_neighbourhoods,
    "thm-4.3": _local_bound,
    "claim-4.1": _pendant_claim,
    "implication-sunspot-sun": _sunspot_in_sun,
}


def _require_known(lemma_id: str) -> None:
    if lemma_id not in CHECKERS:
        raise ValueError(f"unknown lemma id {lemma_id!r}; choose from {', '.join(CHECKERS)}")


def check_graph(lemma_id: str, G: Graph) -> Verdict:
    """Fold the instance verdicts of one graph into a single verdict."""
    _require_known(lemma_id)
    holds = 0
    na = 0
    first_na: dict[str, Any] | None = None
    for v in CHECKERS[lemma_id](G):
        if v.status == VIOLATED:
            return Verdict(VIOLATED, {**v.detail, "graph6": serialize_graph6(G)})
        if v.status == HOLDS:
            holds += 1
        else:
            na += 1
            if first_na is None:
                first_na = v.detail
    if holds:
        return Verdict(HOLDS, {"instances": holds, "not_applicable_instances": na})
    return Verdict(NOT_APPLICABLE, {"reason": (first_na or {}).get("reason", "no instances")})


class _Timeout(Exception):
    pass


def _alarm(signum, frame):
    raise _Timeout


def _check_entry(args: tuple[str, str, float | None]) -> dict[str, Any]:
    lemma_id, g6, timeout = args
    G = parse_graph6(g6)
    use_alarm = bool(timeout) and hasattr(signal, "setitimer")
    if use_alarm:
        old = signal.signal(signal.SIGALRM, _alarm)
        signal.setitimer(signal.ITIMER_REAL, timeout)
    try:
        v = check_graph(lemma_id, G)
        entry = {"status": v.status, "detail": v.detail}
    except _Timeout:
        entry = {"status": SKIPPED, "detail": {"reason": f"timeout after {timeout} s"}}
    except PreconditionError as err:
        entry = {"status": NOT_APPLICABLE, "detail": {"reason": str(err)}}
    finally:
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, old)
    return {"graph6": g6, "n": G.n, **entry}


def verify_campaign(corpus: Corpus, lemma_id: str, jobs: int = 1, timeout: float | None = None,
                    seed: int | None = None) -> Report:
    """Check ``lemma_id`` on every corpus graph; verdict order follows the corpus."""
    _require_known(lemma_id)
    start = time.perf_counter()
    tasks = [(lemma_id, serialize_graph6(G), timeout) for G in corpus]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_check_entry, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        entries = [_check_entry(t) for t in tasks]
    for i, e in enumerate(entries):
        e["index"] = i
    return Report(campaign=lemma_id, corpus=dict(corpus.source), seed=seed, tool_version=__version__,
                  verdicts=entries, wall_seconds=time.perf_counter() - start)


def recheck_report(report: Report) -> list[tuple[int, bool, str]]:
    """Re-derive every violated verdict from its graph6 alone: ``(index, confirmed, note)``."""
    _require_known(report.campaign)
    out = []
    for e in report.verdicts:
        if e["status"] != VIOLATED:
            continue
        G = parse_graph6(e["graph6"])
        v = check_graph(report.campaign, G)
        out.append((e["index"], v.status == VIOLATED, v.status))
    return out
