"""Levelings, the deep-leveling construction, and the flap-theorem pipeline.

A leveling is a tuple of vertex bitmasks ``(L_0, ..., L_r)``.  Verdicts from
the lemma checkers are ``holds``, ``violated`` or ``not-applicable``; the last
one keeps vacuous passes visible in reports.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Sequence

from .coloring import (
    CriticalCertificate,
    PreconditionError,
    chi,
    critical_certificate_problem,
    extract_critical,
    find_triangle,
    is_k_colorable,
    is_liberal,
)
from .formats import serialize_graph6
from .graph import Graph, bfs_layers, bits, components, induced_subgraph, lowest, members, neighborhood_of_set
from .structures import Hole, enumerate_holes, find_4_sunspot, flapless_violation, x_sectors

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Verdict:
    status: str
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != VIOLATED


class TheoremViolation(AssertionError):
    """A construction guaranteed by a proof failed; ``bundle`` holds the evidence."""

    def __init__(self, message: str, bundle: dict[str, Any]):
        super().__init__(message)
        self.bundle = bundle


@dataclass(frozen=True)
class Leveling:
    levels: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.levels) - 1

    @property
    def top(self) -> int:
        return self.levels[-1]

    def level_of(self, v: int) -> int | None:
        for i, L in enumerate(self.levels):
            if L >> v & 1:
                return i
        return None

    def as_lists(self) -> list[list[int]]:
        return [members(L) for L in self.levels]


def leveling_violation(G: Graph, levels: Sequence[int]) -> str | None:
    """Name of the first leveling axiom that fails, or None."""
    seen = 0
    for i, L in enumerate(levels):
        if not L:
            return f"level {i} is empty"
        if L & seen:
            return f"level {i} meets an earlier level"
        seen |= L
    for i in range(1, len(levels)):
        for v in bits(levels[i]):
            if not G.rows[v] & levels[i - 1]:
                return f"vertex {v} in L_{i} has no neighbour in L_{i - 1}"
    for i in range(len(levels)):
        reach = neighborhood_of_set(G, levels[i])
        for j in range(i + 2, len(levels)):
            if reach & levels[j]:
                return f"edge between L_{i} and L_{j}"
    return None


def validate_leveling(G: Graph, levels: Sequence[int] | Leveling) -> bool:
    if isinstance(levels, Leveling):
        levels = levels.levels
    return leveling_violation(G, levels) is None


def bfs_leveling(G: Graph, root: int, within: int | None = None) -> Leveling:
    return Leveling(tuple(bfs_layers(G, root, within)))


def bfs_levelings(G: Graph, min_r: int = 0) -> Iterator[Leveling]:
    """BFS levelings from every root, plus every truncation with depth >= min_r."""
    for root in range(G.n):
        layers = bfs_layers(G, root)
        for r in range(max(min_r, 0), len(layers)):
            yield Leveling(tuple(layers[: r + 1]))


def _max_chi_component(G: Graph, within: int | None = None) -> int:
    # ties broken by least minimum label, which is component order
    best, best_chi = 0, -1
    for comp in components(G, within):
        k = chi(G, comp)
        if k > best_chi:
            best, best_chi = comp, k
    return best


def _require_triangle_free(G: Graph) -> None:
    tri = find_triangle(G)
    if tri is not None:
        raise PreconditionError(f"graph has a triangle {tri}", witness=tri)


def build_deep_leveling(G: Graph, c: int) -> tuple[Leveling, CriticalCertificate]:
    """An r-leveling, r >= 3, whose top level is vertex-critical with chi = c + 1.

    Follows the constructive argument step by step; every free choice takes
    the least label.
    """
    if c < 1:
        raise PreconditionError(f"threshold c must be >= 1, got {c}")
    _require_triangle_free(G)
    if is_k_colorable(G, 2 * c + 1) is not None:
        raise PreconditionError(f"need chi > {2 * c + 1}, got chi = {chi(G)}")

    K = _max_chi_component(G)
    x0 = lowest(K)
    closed = G.rows[x0] & K | (1 << x0)
    K1 = _max_chi_component(G, K & ~closed)
    x1 = next(x for x in bits(G.rows[x0] & K) if G.rows[x] & K1)
    M = bfs_layers(G, x1, K1 | (1 << x1))[1:]  # M[r - 1] is M_r
    r1 = next(r for r in range(2, len(M) + 1) if chi(G, M[r - 1]) > c)
    cert = extract_critical(G, c, M[r1 - 1])
    levels = (1 << x0, 1 << x1, *M[: r1 - 1], cert.S)
    lev = Leveling(levels)

    problem = leveling_violation(G, levels)
    if problem is None and lev.r < 3:
        problem = f"depth {lev.r} < 3"
    if problem is None:
        problem = critical_certificate_problem(G, cert)
    if problem is not None:
        raise TheoremViolation(f"deep leveling postcondition failed: {problem}",
                               {"graph6": serialize_graph6(G), "c": c, "levels": lev.as_lists()})
    return lev, cert


@dataclass(frozen=True)
class FlapPipelineResult:
    L: int
    leveling: Leveling
    certificate: CriticalCertificate


def flap_theorem_pipeline(G: Graph, c: int) -> FlapPipelineResult:
    """A non-degenerate, liberal, flapless induced subgraph with chi = c + 1.

    Hypotheses (triangle-free, 4-sunspot-free, chi > 2c + 1) are checked first;
    each failure raises ``PreconditionError`` carrying its witness.  The
    result is re-verified, flaplessness exhaustively, and any failure raises
    ``TheoremViolation``.
    """
    _require_triangle_free(G)
    spot = find_4_sunspot(G)
    if spot is not None:
        raise PreconditionError(f"graph has a 4-sunspot {spot.x};{spot.y}", witness=spot)
    lev, cert = build_deep_leveling(G, c)
    L = lev.top
    found = flapless_violation(G, L)
    if found is not None:
        H, flap = found
        raise TheoremViolation("top level is not flapless",
                               {"graph6": serialize_graph6(G), "c": c, "L": members(L),
                                "hole": list(H.cyc), "flap": list(flap.quad)})
    return FlapPipelineResult(L, lev, cert)


# -- lemma checkers ---------------------------------------------------------

def _base_hypotheses(G: Graph) -> str | None:
    if find_triangle(G) is not None:
        return "graph has a triangle"
    if find_4_sunspot(G) is not None:
        return "graph has a 4-sunspot"
    return None


def _hole_in_top(lev: Leveling, H: Hole) -> bool:
    return H.length >= 6 and H.mask & ~lev.top == 0


def check_sector_lemmas(G: Graph, lev: Leveling, H: Hole, x: int) -> Verdict:
    """No x-sector of length <= 2, for x one level below the hole or beside it on top.

    x in L_{r-1} needs r >= 2; x in L_r minus H needs r >= 3 and a liberal top.
    """
    why = _base_hypotheses(G)
    if why is None and not validate_leveling(G, lev):
        why = "not a leveling"
    if why is None and not (_hole_in_top(lev, H) and H.verify(G)):
        why = "H is not a hole of length >= 6 inside the top level"
    if why is not None:
        return Verdict(NOT_APPLICABLE, {"reason": why})
    r = lev.r
    if r >= 2 and lev.levels[r - 1] >> x & 1:
        lemma = "lem-2.4"
    elif r >= 3 and lev.top >> x & 1 and x not in H.cyc and is_liberal(induced_subgraph(G, lev.top)[0]):
        lemma = "lem-2.5"
    else:
        return Verdict(NOT_APPLICABLE, {"reason": "x placement or depth outside the lemma"})
    short = [P.seq for P in x_sectors(G, H, x) if P.length <= 2]
    if short:
        return Verdict(VIOLATED, {"lemma": lemma, "graph6": serialize_graph6(G), "levels": lev.as_lists(),
                                  "hole": list(H.cyc), "x": x, "sectors": [list(s) for s in short]})
    return Verdict(HOLDS, {"lemma": lemma})


def check_flap_endpoint_lemma(G: Graph, lev: Leveling, H: Hole, flap: Sequence[int]) -> Verdict:
    """For a flap x1 - h1 - h2 - x2 with x1, x2 in the top two levels: x1, x2 lie in L_r minus H."""
    why = _base_hypotheses(G)
    if why is None and (lev.r < 3 or not validate_leveling(G, lev)):
        why = "need a leveling with r >= 3"
    if why is None and not (_hole_in_top(lev, H) and H.verify(G)):
        why = "H is not a hole of length >= 6 inside the top level"
    if why is None and not is_liberal(induced_subgraph(G, lev.top)[0]):
        why = "top level is not liberal"
    x1, h1, h2, x2 = flap
    if why is None:
        top2 = lev.top | lev.levels[-2]
        if not (Hole(tuple(flap)).verify(G) and h1 in H.cyc and h2 in H.cyc and G.adj(h1, h2)
                and top2 >> x1 & 1 and top2 >> x2 & 1):
            why = "not a flap of H with ends in the top two levels"
    if why is not None:
        return Verdict(NOT_APPLICABLE, {"reason": why})
    outside = lev.top & ~H.mask
    if outside >> x1 & 1 and outside >> x2 & 1:
        return Verdict(HOLDS, {"lemma": "lem-2.6"})
    return Verdict(VIOLATED, {"lemma": "lem-2.6", "graph6": serialize_graph6(G), "levels": lev.as_lists(),
                              "hole": list(H.cyc), "flap": list(flap)})


def flaps_on_hole(G: Graph, H: Hole, ends: int) -> Iterator[tuple[int, int, int, int]]:
    """All 4-holes x1 - h1 - h2 - x2 with h1h2 an edge of H and x1, x2 in ``ends``."""
    rows = G.rows
    for h1, h2 in H.edges():
        for a, b in ((h1, h2), (h2, h1)):
            for x1 in bits(rows[a] & ~rows[b] & ends & ~(1 << b)):
                for x2 in bits(rows[b] & rows[x1] & ~rows[a] & ends & ~(1 << a)):
                    yield (x1, a, b, x2)


def holes_in_top(G: Graph, lev: Leveling) -> Iterator[Hole]:
    return enumerate_holes(G, 6, within=lev.top)
