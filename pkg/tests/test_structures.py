import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import (
    BULL,
    NET,
    SUNSPOT4,
    brute_holes,
    brute_sun_lengths,
    contains_induced,
    graphs,
    induced,
    triangle_free_graphs,
)
from sunspots.generators import bull, cycle, groetzsch, hypercube, net, petersen, t_sun, t_sunspot
from sunspots.graph import Graph, GraphError, build_graph, disjoint_union, vset
from sunspots.structures import (
    Hole,
    InducedPath,
    SunspotWitness,
    SunWitness,
    canonical_cycle,
    enumerate_holes,
    find_4_sunspot,
    find_bull,
    find_flap,
    find_hole_min_length,
    find_net,
    find_t_sun,
    flapless_violation,
    is_flapless,
    longest_hole_length,
    x_sectors,
)


@st.composite
def planted(draw, max_extra: int = 4):
    """A t-sun or t-sunspot with extra vertices and random extra edges."""
    t = draw(st.integers(4, 5))
    base = draw(st.sampled_from([t_sun, t_sunspot]))(t)
    extra = draw(st.integers(0, max_extra))
    n = base.n + extra
    pairs = [(u, v) for u, v in itertools.combinations(range(n), 2) if v >= base.n or not base.adj(u, v)]
    keep = draw(st.lists(st.sampled_from(pairs), max_size=6)) if pairs else []
    perm = draw(st.permutations(list(range(n))))
    edges = [(perm[u], perm[v]) for u, v in base.edges() + keep]
    return build_graph(n, edges)


# -- holes -------------------------------------------------------------------

@given(graphs(max_n=8))
def test_holes_match_subset_oracle(G):
    got = list(enumerate_holes(G))
    assert {frozenset(H.cyc) for H in got} == brute_holes(G)
    assert len(got) == len({frozenset(H.cyc) for H in got})
    assert got == sorted(got, key=lambda H: H.cyc)
    for H in got:
        assert H.verify(G) and canonical_cycle(H.cyc) == H.cyc


@given(graphs(max_n=8), st.integers(4, 8), st.integers(4, 8))
def test_hole_length_window(G, lo, hi):
    want = {S for S in brute_holes(G) if lo <= len(S) <= hi}
    assert {frozenset(H.cyc) for H in enumerate_holes(G, lo, hi)} == want


def test_hole_counts():
    assert len(list(enumerate_holes(hypercube(3), 4, 6))) == 10
    assert len(list(enumerate_holes(petersen()))) == 22
    assert longest_hole_length(petersen()) == 6  # 12 five-holes, 10 six-holes
    assert longest_hole_length(build_graph(3, [(0, 1), (1, 2), (0, 2)])) == 0
    with pytest.raises(ValueError):
        list(enumerate_holes(cycle(5), 3))


@given(graphs(max_n=8), st.integers(4, 8))
def test_shortest_long_hole(G, ell):
    lengths = [len(S) for S in brute_holes(G) if len(S) >= ell]
    H = find_hole_min_length(G, ell)
    if not lengths:
        assert H is None
    else:
        assert H.length == min(lengths) and H.verify(G)


def test_hole_min_length_rejects_small_ell():
    with pytest.raises(ValueError):
        find_hole_min_length(cycle(6), 3)


def test_hole_helpers():
    H = Hole((0, 1, 2, 3, 4, 5))
    assert H.distance(0, 4) == 2 and H.distance(1, 4) == 3
    assert not Hole((0, 1, 2)).verify(cycle(3))
    assert canonical_cycle((3, 2, 1, 0, 5, 4)) == (0, 1, 2, 3, 4, 5)
    assert InducedPath((0, 1, 2)).verify(cycle(6))
    assert not InducedPath((0, 1, 2)).verify(cycle(3))


# -- sectors and flaps -------------------------------------------------------

def brute_sectors(G: Graph, H: Hole, x: int) -> set[tuple[int, ...]]:
    c, k = H.cyc, H.length
    out = set()
    for i in range(k):
        for length in range(1, k):
            seq = tuple(c[(i + s) % k] for s in range(length + 1))
            if G.adj(x, seq[0]) and G.adj(x, seq[-1]) and not any(G.adj(x, v) for v in seq[1:-1]):
                out.add(min(seq, seq[::-1]))
    return out


@given(graphs(min_n=5, max_n=8))
def test_sectors_match_definition(G):
    for H in enumerate_holes(G):
        for x in range(G.n):
            if x in H.cyc:
                continue
            got = {min(P.seq, P.seq[::-1]) for P in x_sectors(G, H, x)}
            assert got == brute_sectors(G, H, x)


def test_sector_of_hole_vertex_rejected():
    with pytest.raises(GraphError):
        x_sectors(cycle(6), Hole(tuple(range(6))), 0)


def brute_has_flap(G: Graph) -> bool:
    quads = {S for S in brute_holes(G) if len(S) == 4}
    for S in brute_holes(G):
        if len(S) < 6:
            continue
        for Q in quads:
            if any(G.adj(a, b) for a, b in itertools.combinations(S & Q, 2)):
                return True
    return False


@given(graphs(min_n=6, max_n=8))
def test_flapless_matches_oracle(G):
    found = flapless_violation(G)
    assert (found is None) == (not brute_has_flap(G))
    if found is not None:
        H, flap = found
        assert H.length >= 6 and flap.verify(G, H)


def test_flap_examples():
    # a 6-hole with a 4-hole glued on the edge 0-1
    G = build_graph(8, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (6, 7), (7, 1)])
    H = Hole(tuple(range(6)))
    flap = find_flap(G, H)
    assert flap is not None and flap.verify(G, H)
    assert not is_flapless(G)
    assert is_flapless(petersen())
    assert not is_flapless(hypercube(3))
    with pytest.raises(GraphError):
        find_flap(cycle(5), Hole((0, 1, 2, 3)))


def test_flapless_within_maps_labels():
    G = build_graph(9, [(i + 1, (i + 1) % 6 + 1) for i in range(6)] + [(1, 7), (7, 8), (8, 2)])
    found = flapless_violation(G, vset(range(1, 9)))
    assert found is not None
    H, flap = found
    assert H.verify(G) and flap.verify(G, H)


# -- suns, sunspots, nets, bulls --------------------------------------------

@pytest.mark.parametrize("t", range(4, 9))
def test_generated_sun_found(t):
    w = find_t_sun(t_sun(t), t, t)
    assert w == SunWitness(tuple(range(t)), tuple(range(t, 2 * t)))
    assert find_t_sun(t_sunspot(t)) is None


def test_find_t_sun_windows():
    G = disjoint_union(t_sun(5), t_sun(7))
    assert find_t_sun(G).t == 5
    assert find_t_sun(G, 6).t == 7
    assert find_t_sun(G, 6, 6) is None
    with pytest.raises(ValueError):
        find_t_sun(G, 3)


@given(planted())
def test_sun_detector_matches_oracle_planted(G):
    want = brute_sun_lengths(G)
    for t in range(4, G.n // 2 + 1):
        w = find_t_sun(G, t, t)
        assert (w is not None) == (t in want)
        if w is not None:
            assert w.verify(G) and w.t == t


@given(triangle_free_graphs(max_n=10))
def test_sun_detector_matches_oracle_random(G):
    assert (find_t_sun(G) is not None) == bool(brute_sun_lengths(G))


@given(st.one_of(planted(), graphs(max_n=9)))
def test_sunspot_net_bull_match_oracle(G):
    w = find_4_sunspot(G)
    assert (w is not None) == contains_induced(G, SUNSPOT4)
    if w:
        assert w.verify(G)
    w = find_net(G)
    assert (w is not None) == contains_induced(G, NET)
    if w:
        assert w.verify(G)
    w = find_bull(G)
    assert (w is not None) == contains_induced(G, BULL)
    if w:
        assert w.verify(G)


def test_named_witnesses():
    assert find_4_sunspot(t_sunspot(4)) == SunspotWitness((0, 1, 2, 3), (4, 5, 6))
    assert find_4_sunspot(t_sun(4)) is not None
    assert find_4_sunspot(petersen()) is None
    assert find_net(net()).triangle == (0, 1, 2)
    assert find_net(bull()) is None
    assert find_bull(bull()) is not None
    assert find_bull(net()) is not None


def test_groetzsch_contains_a_sunspot():
    G = groetzsch()
    w = find_4_sunspot(G)
    assert w == SunspotWitness((0, 1, 2, 6), (9, 5, 8))
    assert w.verify(G)
    assert contains_induced(G, SUNSPOT4)
    assert contains_induced(induced(G, w.x + w.y), SUNSPOT4)


def test_witness_verify_rejects_wrong_tuples():
    G = t_sun(4)
    assert not SunWitness((0, 1, 2, 3), (4, 5, 7, 6)).verify(G)
    assert not SunspotWitness((0, 1, 2, 3), (4, 5, 7)).verify(G)
