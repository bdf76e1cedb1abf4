import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import edge_set, graphs, uf_components
from sunspots.graph import (
    INF,
    Graph,
    GraphError,
    add_vertex,
    bfs_layers,
    bfs_levels,
    bits,
    build_graph,
    components,
    cut_vertices,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_anticomplete,
    is_connected,
    members,
    neighbors,
    relabel,
    second_neighborhood,
    vset,
)
from sunspots.generators import cycle, path, petersen


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def test_build_rejects_bad_edges():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        build_graph(-1, [])


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0))


def test_bitmask_helpers():
    assert members(0b10110) == [1, 2, 4]
    assert vset([4, 1, 2]) == 0b10110
    assert list(bits(0)) == []


def test_neighbors_restricted():
    G = cycle(5)
    assert members(neighbors(G, 0)) == [1, 4]
    assert members(neighbors(G, 0, vset([1, 2]))) == [1]
    with pytest.raises(GraphError):
        neighbors(G, 7)


def test_bfs_on_path_and_disconnected():
    G = disjoint_union(path(4), path(2))
    assert bfs_levels(G, 0) == [0, 1, 2, 3, INF, INF]
    assert bfs_levels(G, 0, vset([0, 1, 3])) == [0, 1, INF, INF, INF, INF]
    assert [members(L) for L in bfs_layers(G, 1)] == [[1], [0, 2], [3]]


def test_second_neighborhood_petersen():
    G = petersen()
    for v in range(10):
        assert bin(second_neighborhood(G, v)).count("1") == 6


@given(graphs(max_n=9))
def test_bfs_matches_networkx(G):
    H = to_nx(G)
    for root in range(G.n):
        ref = nx.single_source_shortest_path_length(H, root)
        got = bfs_levels(G, root)
        assert {v: d for v, d in enumerate(got) if d != INF} == ref


@given(graphs(max_n=10))
def test_components_match_union_find(G):
    assert [set(members(c)) for c in components(G)] == uf_components(G)
    assert is_connected(G) == (len(uf_components(G)) <= 1)


@given(graphs(max_n=8))
def test_cut_vertices_by_deletion(G):
    base = len(uf_components(G))
    for v in range(G.n):
        rest = delete_vertex(G, v)
        # an isolated vertex disappears on deletion without splitting anything
        expected = len(uf_components(rest)) > base - (1 if G.rows[v] == 0 else 0)
        assert bool(cut_vertices(G) >> v & 1) == expected


@given(graphs(max_n=8), st.data())
def test_induced_subgraph_edges(G, data):
    S = data.draw(st.integers(0, G.full))
    H, labels = induced_subgraph(G, S)
    assert list(labels) == members(S)
    want = {frozenset((labels[a], labels[b])) for a, b in H.edges()}
    assert want == {e for e in edge_set(G) if all(S >> v & 1 for v in e)}


@given(graphs(max_n=8), st.data())
def test_relabel_preserves_edges(G, data):
    perm = data.draw(st.permutations(list(range(G.n))))
    H = relabel(G, perm)
    assert edge_set(H) == {frozenset(perm[v] for v in e) for e in edge_set(G)}


@given(graphs(max_n=7), st.data())
def test_add_then_delete_vertex(G, data):
    S = data.draw(st.integers(0, G.full))
    H = add_vertex(G, S)
    assert H.n == G.n + 1 and H.rows[G.n] == S
    assert delete_vertex(H, G.n) == G


def test_anticomplete():
    G = path(4)
    assert is_anticomplete(G, vset([0]), vset([2, 3]))
    assert not is_anticomplete(G, vset([0]), vset([1]))
    assert not is_anticomplete(G, vset([0]), vset([0]))
