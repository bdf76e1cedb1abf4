import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_chi, brute_omega, brute_triangle, graphs, induced, nbrs, triangle_free_graphs
from sunspots.coloring import (
    PreconditionError,
    chi,
    chromatic_number,
    clique_number,
    critical_certificate_problem,
    CriticalCertificate,
    degeneracy_violation,
    extract_critical,
    find_triangle,
    is_k_colorable,
    is_liberal,
    is_non_degenerate,
    is_triangle_free,
    liberal_violation,
)
from sunspots.generators import (
    complete,
    complete_bipartite,
    cycle,
    groetzsch,
    hypercube,
    mycielskian,
    path,
    petersen,
    shift_graph,
)
from sunspots.graph import build_graph, empty_graph, members, vset


@pytest.mark.parametrize("G,k", [
    (empty_graph(0), 0),
    (empty_graph(3), 1),
    (path(2), 2),
    (cycle(5), 3),
    (cycle(6), 2),
    (complete(5), 5),
    (petersen(), 3),
    (groetzsch(), 4),
    (mycielskian(groetzsch()), 5),
    (hypercube(3), 2),
])
def test_known_chromatic_numbers(G, k):
    got, col = chromatic_number(G)
    assert got == k
    assert col.is_proper(G) and col.k == k


@given(graphs(max_n=7))
def test_chi_matches_brute_force(G):
    k, col = chromatic_number(G)
    assert k == brute_chi(G)
    assert col.is_proper(G)
    assert is_k_colorable(G, k) is not None
    if k:
        assert is_k_colorable(G, k - 1) is None


@given(graphs(max_n=8))
def test_clique_and_triangle(G):
    assert clique_number(G) == brute_omega(G)
    assert find_triangle(G) == brute_triangle(G)
    assert is_triangle_free(G) == (brute_triangle(G) is None)


def test_is_k_colorable_rejects_negative():
    with pytest.raises(ValueError):
        is_k_colorable(cycle(4), -1)


def test_degeneracy_and_liberality_examples():
    assert is_non_degenerate(cycle(5))
    assert is_non_degenerate(path(3))
    paw = build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])  # chi 3, vertex 3 has degree 1
    assert degeneracy_violation(paw) == 3
    # endpoints of P3 are twins: N(0) = N(2)
    assert liberal_violation(path(3)) == (0, 2)
    assert is_liberal(cycle(5))
    assert not is_liberal(cycle(4))
    assert is_liberal(petersen())


@given(graphs(max_n=7))
def test_liberal_matches_definition(G):
    bad = [(x, y) for x in range(G.n) for y in range(x + 1, G.n)
           if not G.adj(x, y) and (nbrs(G, x) <= nbrs(G, y) or nbrs(G, y) <= nbrs(G, x))]
    assert (liberal_violation(G) is None) == (not bad)
    if bad:
        assert liberal_violation(G) == bad[0]


@given(graphs(max_n=7))
def test_non_degenerate_matches_definition(G):
    k = brute_chi(G)
    assert is_non_degenerate(G) == all(len(nbrs(G, v)) >= k - 1 for v in range(G.n))


@given(graphs(min_n=1, max_n=7), st.integers(1, 4))
def test_extract_critical_is_vertex_critical(G, c):
    if brute_chi(G) <= c:
        with pytest.raises(PreconditionError):
            extract_critical(G, c)
        return
    cert = extract_critical(G, c)
    S = members(cert.S)
    assert brute_chi(G, S) == c + 1
    for v in S:
        assert brute_chi(G, [u for u in S if u != v]) <= c
    H = induced(G, S)
    assert is_non_degenerate(H) and is_liberal(H)
    assert critical_certificate_problem(G, cert) is None


def test_extract_critical_on_groetzsch_is_whole_graph():
    # the Groetzsch graph is 4-vertex-critical
    G = groetzsch()
    assert extract_critical(G, 3).S == G.full


def test_certificate_checker_rejects_non_critical():
    G = complete_bipartite(2, 3)
    assert critical_certificate_problem(G, CriticalCertificate(G.full, 1)) is not None
    assert critical_certificate_problem(G, CriticalCertificate(vset([0, 2]), 1)) is None


@given(triangle_free_graphs(max_n=6))
def test_mycielskian_raises_chi_by_one(G):
    M = mycielskian(G)
    assert is_triangle_free(M)
    assert chi(M) == chi(G) + 1


def test_shift_graph_chromatic_numbers():
    assert chi(shift_graph(4)) == 2
    assert chi(shift_graph(8)) == 3
