"""Theorem constants and end-to-end sun/sunspot witness extraction."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .coloring import PreconditionError, find_triangle
from .flare import Flare, FlareConstructionError, construct_full_flare
from .formats import serialize_graph6
from .graph import Graph, induced_subgraph, is_anticomplete, members
from .leveling import TheoremViolation, flap_theorem_pipeline
from .structures import SunspotWitness, SunWitness, find_4_sunspot, find_hole_min_length

# long-hole threshold for ell = 6 (the only value with an explicit constant)
TAU_6 = 20


class ConstantUnavailable(ValueError):
    pass


@dataclass(frozen=True)
class TheoremConstants:
    ell: int
    tau: int
    c: int

    @property
    def pipeline_threshold(self) -> int:
        """The chi + 1 target handed to the flap pipeline: max(tau, 4 ell - 1)."""
        return max(self.tau, 4 * self.ell - 1)


def theorem_constant(ell: int, tau: int | None = None) -> TheoremConstants:
    """c(ell) = 2 max(tau, 4 ell - 1) + 1, with tau defaulting to 20 for ell = 6."""
    if ell < 6:
        raise ValueError(f"ell must be >= 6, got {ell}")
    if tau is None:
        if ell != 6:
            raise ConstantUnavailable(f"no explicit long-hole constant for ell = {ell}; pass tau")
        tau = TAU_6
    if tau < 1:
        raise ValueError(f"tau must be positive, got {tau}")
    return TheoremConstants(ell, tau, 2 * max(tau, 4 * ell - 1) + 1)


class ExtractionFailure(RuntimeError):
    def __init__(self, stage: int, message: str, trace: dict[str, Any]):
        super().__init__(f"no witness found at stage {stage}: {message}")
        self.stage = stage
        self.trace = trace


@dataclass(frozen=True)
class ExtractionResult:
    witness: SunWitness | SunspotWitness
    trace: dict[str, Any] = field(default_factory=dict)

    @property
    def kind(self) -> str:
        return "sun" if isinstance(self.witness, SunWitness) else "sunspot"

    def to_json(self) -> dict[str, Any]:
        w = self.witness
        if isinstance(w, SunWitness):
            wj: dict[str, Any] = {"t": w.t, "cycle": list(w.cycle), "pendants": list(w.pendants)}
        else:
            wj = {"x": list(w.x), "y": list(w.y)}
        return {"kind": self.kind, "witness": wj, "trace": self.trace}


def claim_violation(G: Graph, flare: Flare) -> tuple[int, int] | None:
    """First pair (h, h') of distinct hole vertices with x_h not anticomplete to {h', x_h'}."""
    cyc = flare.hole.cyc
    for i in range(len(cyc)):
        for j in range(len(cyc)):
            if i != j and not is_anticomplete(G, flare.image(i), flare.closed(j)):
                return (cyc[i], cyc[j])
    return None


def extract_from_flapless(G: Graph, L: int, ell: int, trace: dict[str, Any] | None = None) -> SunWitness:
    """Stages 2-5 on ``G[L]``: shortest hole of length >= ell, full ell-safe flare,
    pairwise anticompleteness of the pendants, and the sun in original labels."""
    trace = {} if trace is None else trace
    sub, labels = induced_subgraph(G, L)
    trace["L_graph6"] = serialize_graph6(sub)
    H = find_hole_min_length(sub, ell)
    if H is None:
        raise ExtractionFailure(2, f"no hole of length >= {ell} in L", trace)
    trace["hole"] = [labels[v] for v in H.cyc]
    try:
        flare = construct_full_flare(sub, H, ell)
    except FlareConstructionError as err:
        raise ExtractionFailure(3, str(err), trace) from err
    trace["flare"] = {str(labels[h]): labels[x] for h, x in zip(H.cyc, flare.assign)}
    bad = claim_violation(sub, flare)
    if bad is not None:
        raise TheoremViolation(
            "pendants of a full safe flare on a shortest long hole are not anticomplete",
            {"graph6": serialize_graph6(G), "L": members(L), "hole": trace["hole"],
             "flare": trace["flare"], "pair": [labels[bad[0]], labels[bad[1]]]})
    witness = SunWitness(tuple(labels[v] for v in H.cyc), tuple(labels[x] for x in flare.assign))
    if not witness.verify(G):
        raise ExtractionFailure(5, "assembled sun does not verify in the original graph", trace)
    return witness


def extract_witness(G: Graph, ell: int, tau: int | None = None) -> ExtractionResult:
    """Sun of length >= ell or a 4-sunspot in a triangle-free graph.

    Guaranteed when chi(G) > c(ell, tau); below that, failures raise
    ``ExtractionFailure`` naming the stage.
    """
    tri = find_triangle(G)
    if tri is not None:
        raise PreconditionError(f"graph has a triangle {tri}", witness=tri)
    spot = find_4_sunspot(G)
    if spot is not None:
        return ExtractionResult(spot, {"stage": 0, "reason": "4-sunspot detector fired"})
    consts = theorem_constant(ell, tau)
    trace: dict[str, Any] = {"ell": ell, "tau": consts.tau, "c": consts.c}
    try:
        result = flap_theorem_pipeline(G, consts.pipeline_threshold)
    except PreconditionError as err:
        raise ExtractionFailure(1, str(err), trace) from err
    trace["leveling"] = result.leveling.as_lists()
    trace["L"] = members(result.L)
    return ExtractionResult(extract_from_flapless(G, result.L, ell, trace), trace)
