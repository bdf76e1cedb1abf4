import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import graphs
from sunspots.flare import (
    Flare,
    FlareConstructionError,
    FlareStep,
    check_common_neighbor_bounds,
    construct_full_flare,
    cycle_distance,
    d_safety_violation,
    is_d_safe,
    theorem_hypotheses,
)
from sunspots.formats import serialize_graph6
from sunspots.generators import cycle, petersen, t_sun
from sunspots.graph import Graph, build_graph
from sunspots.leveling import HOLDS, NOT_APPLICABLE, TheoremViolation
from sunspots.structures import Hole, enumerate_holes


def brute_safe(G: Graph, F: Flare, d: int) -> bool:
    cyc = F.hole.cyc
    L = len(cyc)
    for i in range(L):
        for j in range(L):
            if i == j or min(abs(i - j), L - abs(i - j)) > d:
                continue
            x = F.assign[i]
            if x is None:
                continue
            closed = {cyc[j]} | ({F.assign[j]} if F.assign[j] is not None else set())
            if x in closed or any(G.adj(x, y) for y in closed):
                return False
    return True


def test_cycle_distance():
    assert cycle_distance(0, 7, 8) == 1
    assert cycle_distance(1, 5, 8) == 4
    assert cycle_distance(3, 3, 8) == 0


@pytest.mark.parametrize("t", range(6, 13))
def test_sun_pendant_flare(t):
    G = t_sun(t)
    H = Hole(tuple(range(t)))
    for d in range(1, t // 2 + 1):
        trace: list[FlareStep] = []
        F = construct_full_flare(G, H, d, trace)
        assert F.assign == tuple(range(t, 2 * t))
        assert F.is_full and F.problem(G) is None and is_d_safe(G, F, d) and brute_safe(G, F, d)
        assert [s.order for s in trace] == list(range(1, t + 1))
        for s in trace:
            assert bin(s.D).count("1") <= 2 * d and bin(s.U).count("1") <= 4 * d


def test_bare_cycle_fails_at_first_vertex():
    G = cycle(8)
    with pytest.raises(FlareConstructionError) as info:
        construct_full_flare(G, Hole(tuple(range(8))), 1)
    err = info.value
    assert err.h == 0 and not err.hypotheses_met and err.partial.order == 0
    assert err.bundle()["graph6"] == err.graph6 == serialize_graph6(G)


def test_construct_rejects_bad_input():
    with pytest.raises(ValueError):
        construct_full_flare(cycle(5), Hole(tuple(range(5))), 1)
    with pytest.raises(ValueError):
        construct_full_flare(t_sun(6), Hole(tuple(range(6))), 0)


def test_petersen_greedy_flare_is_guaranteed():
    G = petersen()
    H = next(enumerate_holes(G, 6))
    assert theorem_hypotheses(G, H, 1) is None
    F = construct_full_flare(G, H, 1)
    assert F.is_full and brute_safe(G, F, 1)


def test_common_neighbour_bounds_examples():
    G = petersen()
    H = next(enumerate_holes(G, 6))
    assert check_common_neighbor_bounds(G, H, Flare.empty(H)).status == HOLDS
    assert check_common_neighbor_bounds(G, H).status == HOLDS
    tri = build_graph(9, [(i, (i + 1) % 6) for i in range(6)] + [(6, 7), (7, 8), (6, 8)])
    assert check_common_neighbor_bounds(tri, Hole(tuple(range(6)))).status == NOT_APPLICABLE


@given(graphs(min_n=6, max_n=10, p=0.4), st.data())
def test_d_safety_matches_double_loop(G, data):
    holes = list(enumerate_holes(G, 6))
    if not holes:
        return
    H = data.draw(st.sampled_from(holes))
    assign = []
    for h in H.cyc:
        opts = [None] + [x for x in range(G.n) if G.adj(h, x) and x not in H.cyc]
        assign.append(data.draw(st.sampled_from(opts)))
    F = Flare(H, tuple(assign))
    assert F.problem(G) is None
    for d in range(1, 4):
        assert is_d_safe(G, F, d) == brute_safe(G, F, d)
        assert (d_safety_violation(G, F, d) is None) == brute_safe(G, F, d)


def test_flare_problem_detects_bad_assignments():
    G = t_sun(6)
    H = Hole(tuple(range(6)))
    assert Flare(H, (1,) + (None,) * 5).problem(G) is not None  # on the hole
    assert Flare(H, (7,) + (None,) * 5).problem(G) is not None  # not a neighbour
    assert Flare(H, (None,) * 5).problem(G) is not None
    F = Flare(H, (6,) + (None,) * 5)
    assert F.to_json() == {"hole": [0, 1, 2, 3, 4, 5], "assign": {"0": 6, "1": None, "2": None,
                                                                 "3": None, "4": None, "5": None}}


def test_safety_rejects_d_zero():
    with pytest.raises(ValueError):
        d_safety_violation(t_sun(6), Flare.empty(Hole(tuple(range(6)))), 0)


def test_guaranteed_failure_becomes_theorem_violation(monkeypatch):
    # force a failure while pretending the hypotheses hold
    import sunspots.flare as flare_mod
    monkeypatch.setattr(flare_mod, "theorem_hypotheses", lambda G, H, d=None: None)
    with pytest.raises(TheoremViolation) as info:
        construct_full_flare(cycle(8), Hole(tuple(range(8))), 1)
    assert info.value.bundle["hypotheses_met"] is True
