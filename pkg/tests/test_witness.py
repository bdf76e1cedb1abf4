import pytest

from sunspots.coloring import PreconditionError
from sunspots.flare import Flare
from sunspots.generators import complete, groetzsch, pad, petersen, t_sun, t_sunspot
from sunspots.graph import build_graph, disjoint_union, vset
from sunspots.structures import Hole, SunspotWitness, SunWitness
from sunspots.witness import (
    ConstantUnavailable,
    ExtractionFailure,
    claim_violation,
    extract_from_flapless,
    extract_witness,
    theorem_constant,
)


def test_constants():
    k = theorem_constant(6)
    assert (k.tau, k.c) == (20, 47)
    assert k.pipeline_threshold == 23
    assert theorem_constant(7, 100).c == 201
    assert theorem_constant(6, 30).c == 61
    with pytest.raises(ConstantUnavailable):
        theorem_constant(7)
    with pytest.raises(ValueError):
        theorem_constant(5)


@pytest.mark.parametrize("t", range(6, 11))
def test_stages_two_to_five_return_the_sun(t):
    G = t_sun(t)
    trace = {}
    w = extract_from_flapless(G, G.full, 6, trace)
    assert w == SunWitness(tuple(range(t)), tuple(range(t, 2 * t)))
    assert trace["hole"] == list(range(t))


def test_stages_on_padded_sun():
    G = pad(t_sun(8), 3)
    w = extract_from_flapless(G, vset(range(16)), 6)
    assert w.t == 8 and w.verify(G)


def test_stage_failures_name_the_stage():
    with pytest.raises(ExtractionFailure) as info:
        extract_from_flapless(petersen(), petersen().full, 7)
    assert info.value.stage == 2
    with pytest.raises(ExtractionFailure) as info:
        extract_from_flapless(petersen(), petersen().full, 6)
    assert info.value.stage == 3


def test_sunspot_branch():
    res = extract_witness(t_sunspot(4), 6)
    assert res.kind == "sunspot"
    assert res.witness == SunspotWitness((0, 1, 2, 3), (4, 5, 6))
    assert extract_witness(groetzsch(), 6).kind == "sunspot"


def test_low_chi_fails_at_stage_one():
    with pytest.raises(ExtractionFailure) as info:
        extract_witness(petersen(), 6)
    assert info.value.stage == 1


def test_triangle_is_a_precondition_error():
    with pytest.raises(PreconditionError):
        extract_witness(disjoint_union(complete(3), t_sun(6)), 6)


def test_claim_checker():
    G = t_sun(6)
    H = Hole(tuple(range(6)))
    assert claim_violation(G, Flare(H, tuple(range(6, 12)))) is None
    # pendant 6 also touching hole vertex 2 breaks anticompleteness
    G2 = build_graph(12, G.edges() + [(6, 2)])
    bad = claim_violation(G2, Flare(H, tuple(range(6, 12))))
    assert bad == (0, 2)


def test_result_json():
    res = extract_witness(t_sunspot(4), 6)
    doc = res.to_json()
    assert doc["kind"] == "sunspot" and doc["witness"] == {"x": [0, 1, 2, 3], "y": [4, 5, 6]}
