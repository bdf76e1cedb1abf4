"""H-flares: partial private-neighbour assignments along a hole.

``Flare.assign[i]`` is the vertex assigned to ``hole.cyc[i]`` or None.
Distances between hole vertices are measured along the cycle, not in G.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .coloring import find_triangle, is_liberal
from .formats import serialize_graph6
from .graph import Graph, bits, is_anticomplete, members, popcount
from .leveling import HOLDS, NOT_APPLICABLE, VIOLATED, TheoremViolation, Verdict
from .structures import Hole, find_4_sunspot, is_flapless


@dataclass(frozen=True)
class Flare:
    hole: Hole
    assign: tuple[int | None, ...]

    @classmethod
    def empty(cls, H: Hole) -> "Flare":
        return cls(H, (None,) * H.length)

    @property
    def order(self) -> int:
        return sum(x is not None for x in self.assign)

    @property
    def is_full(self) -> bool:
        return self.order == self.hole.length

    def image(self, i: int) -> int:
        """Phi(h) as a bitmask for the hole vertex at position ``i``."""
        x = self.assign[i]
        return 0 if x is None else 1 << x

    def closed(self, i: int) -> int:
        """Phi[h] = Phi(h) + {h} as a bitmask."""
        return self.image(i) | (1 << self.hole.cyc[i])

    def problem(self, G: Graph) -> str | None:
        """First broken flare axiom, or None."""
        if len(self.assign) != self.hole.length:
            return "assignment length differs from hole length"
        hmask = self.hole.mask
        for h, x in zip(self.hole.cyc, self.assign):
            if x is None:
                continue
            if hmask >> x & 1:
                return f"Phi({h}) = {x} lies on the hole"
            if not G.adj(h, x):
                return f"Phi({h}) = {x} is not a neighbour of {h}"
        return None

    def to_json(self) -> dict[str, Any]:
        return {"hole": list(self.hole.cyc),
                "assign": {str(h): x for h, x in zip(self.hole.cyc, self.assign)}}


def cycle_distance(i: int, j: int, length: int) -> int:
    d = abs(i - j) % length
    return min(d, length - d)


def d_safety_violation(G: Graph, flare: Flare, d: int) -> tuple[int, int] | None:
    """First ordered pair (h, h'), distinct and within cycle distance d, where
    Phi(h) and Phi[h'] are not anticomplete."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    L = flare.hole.length
    cyc = flare.hole.cyc
    for i in range(L):
        img = flare.image(i)
        if not img:
            continue
        for j in range(L):
            if j != i and cycle_distance(i, j, L) <= d and not is_anticomplete(G, img, flare.closed(j)):
                return (cyc[i], cyc[j])
    return None


def is_d_safe(G: Graph, flare: Flare, d: int) -> bool:
    return d_safety_violation(G, flare, d) is None


def theorem_hypotheses(G: Graph, H: Hole, d: int | None = None) -> str | None:
    """Reason the flare hypotheses fail, or None (minimum degree checked when ``d`` is given)."""
    if H.length < 6 or not H.verify(G):
        return "H is not a hole of length >= 6"
    if find_triangle(G) is not None:
        return "graph has a triangle"
    if find_4_sunspot(G) is not None:
        return "graph has a 4-sunspot"
    if not is_liberal(G):
        return "graph is not liberal"
    if not is_flapless(G):
        return "graph is not flapless"
    if d is not None and G.min_degree() < 4 * d - 1:
        return f"minimum degree {G.min_degree()} < {4 * d - 1}"
    return None


def check_common_neighbor_bounds(G: Graph, H: Hole, flare: Flare | None = None) -> Verdict:
    """Common neighbours outside H of x in Phi[h] and another hole vertex h'.

    Adjacent h, h' allow none, non-adjacent allow at most one.  With
    ``flare=None`` every x in {h} + (N(h) - H) is checked, which covers every
    flare on H at once.
    """
    why = theorem_hypotheses(G, H)
    if why is None and flare is not None and flare.problem(G) is not None:
        why = f"not a flare: {flare.problem(G)}"
    if why is not None:
        return Verdict(NOT_APPLICABLE, {"reason": why})
    cyc = H.cyc
    hmask = H.mask
    outside = G.full & ~hmask
    checked = 0
    for i, h in enumerate(cyc):
        xs = [h] + (members(G.rows[h] & outside) if flare is None else
                    ([flare.assign[i]] if flare.assign[i] is not None else []))
        for x in xs:
            for j, h2 in enumerate(cyc):
                if j == i:
                    continue
                common = G.rows[x] & G.rows[h2] & outside
                limit = 0 if cycle_distance(i, j, len(cyc)) == 1 else 1
                checked += 1
                if popcount(common) > limit:
                    return Verdict(VIOLATED, {"lemma": "lem-3.2", "graph6": serialize_graph6(G),
                                              "hole": list(cyc), "h": h, "h2": h2, "x": x,
                                              "common": members(common)})
    return Verdict(HOLDS, {"lemma": "lem-3.2", "pairs": checked})


class FlareConstructionError(RuntimeError):
    def __init__(self, message: str, h: int, blocking: int, partial: Flare, hypotheses_met: bool,
                 graph6: str):
        super().__init__(message)
        self.h = h
        self.blocking = blocking
        self.partial = partial
        self.hypotheses_met = hypotheses_met
        self.graph6 = graph6

    def bundle(self) -> dict[str, Any]:
        return {"graph6": self.graph6, "h": self.h, "U": members(self.blocking),
                "flare": self.partial.to_json(), "hypotheses_met": self.hypotheses_met}


@dataclass(frozen=True)
class FlareStep:
    h: int
    D: int
    U: int
    x: int
    order: int


def construct_full_flare(G: Graph, H: Hole, d: int, trace: list[FlareStep] | None = None) -> Flare:
    """Greedy full d-safe flare: assign each hole vertex, in cycle order, its least
    neighbour outside H that is anticomplete to the closed images of the hole
    vertices within distance d.

    Raises ``FlareConstructionError`` when some vertex has no eligible
    neighbour.  If the theorem's hypotheses hold that cannot happen, and the
    error is re-raised as ``TheoremViolation``.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if H.length < 6 or not H.verify(G):
        raise ValueError(f"{H.cyc} is not a hole of length >= 6")
    cyc = H.cyc
    L = len(cyc)
    assign: list[int | None] = [None] * L
    outside = G.full & ~H.mask
    for i, h in enumerate(cyc):
        flare = Flare(H, tuple(assign))
        near = [j for j in range(L) if j != i and cycle_distance(i, j, L) <= d]
        D = 0
        U = 0
        for j in near:
            D |= 1 << cyc[j]
            U |= flare.closed(j)
        eligible = [x for x in bits(G.rows[h] & outside) if is_anticomplete(G, 1 << x, U)]
        if not eligible:
            why = theorem_hypotheses(G, H, d)
            err = FlareConstructionError(
                f"no neighbour of {h} outside H is anticomplete to U = {members(U)}",
                h, U, flare, why is None, serialize_graph6(G))
            if why is None:
                raise TheoremViolation(str(err), err.bundle()) from err
            raise err
        assign[i] = eligible[0]
        if trace is not None:
            trace.append(FlareStep(h, D, U, eligible[0], flare.order + 1))
    result = Flare(H, tuple(assign))
    assert result.problem(G) is None and result.is_full
    bad = d_safety_violation(G, result, d)
    if bad is not None:
        raise TheoremViolation(f"greedy flare is not {d}-safe at {bad}",
                               {"graph6": serialize_graph6(G), "flare": result.to_json(), "d": d})
    return result
