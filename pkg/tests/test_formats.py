import io

import networkx as nx
import pytest
from hypothesis import given

from oracles import edge_set, graphs
from sunspots.formats import (
    FormatError,
    parse_edgelist,
    parse_graph6,
    parse_graphs,
    read_graphs,
    serialize_edgelist,
    serialize_graph6,
    write_graph6,
)
from sunspots.generators import complete, petersen
from sunspots.graph import build_graph, empty_graph


def reference_graph6(G) -> str:
    """Encoder written straight from the format description."""
    bitstr = "".join("1" if G.adj(i, j) else "0" for j in range(1, G.n) for i in range(j))
    bitstr += "0" * (-len(bitstr) % 6)
    assert G.n <= 62
    body = "".join(chr(int(bitstr[k:k + 6], 2) + 63) for k in range(0, len(bitstr), 6))
    return chr(G.n + 63) + body


@pytest.mark.parametrize("G,text", [
    (empty_graph(0), "?"),
    (empty_graph(1), "@"),
    (complete(4), "C~"),
    (petersen(), "IheA@GUAo"),
])
def test_known_strings(G, text):
    assert serialize_graph6(G) == text
    assert parse_graph6(text) == G


@given(graphs(max_n=14))
def test_graph6_matches_reference_and_networkx(G):
    s = serialize_graph6(G)
    assert s == reference_graph6(G)
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    assert nx.to_graph6_bytes(H, header=False).decode().strip() == s


@given(graphs(max_n=14))
def test_graph6_round_trip(G):
    assert parse_graph6(serialize_graph6(G)) == G


def test_large_size_field():
    G = build_graph(70, [(0, 69), (5, 6)])
    s = serialize_graph6(G)
    assert s[0] == "~"
    assert parse_graph6(s) == G
    assert parse_graph6(">>graph6<<" + s) == G


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x7f", "A`"])
def test_graph6_errors(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad)


def test_graph6_error_reports_offset():
    with pytest.raises(FormatError, match="byte 1"):
        parse_graph6("C\x20")


@given(graphs(max_n=10))
def test_edgelist_round_trip(G):
    H = parse_edgelist(serialize_edgelist(G))
    assert H.n == G.n and edge_set(H) == edge_set(G)


def test_edgelist_errors():
    with pytest.raises(FormatError):
        parse_edgelist("3 2\n0 1\n")
    with pytest.raises(FormatError):
        parse_edgelist("3 1\n0 5\n")
    with pytest.raises(FormatError):
        parse_edgelist("3 x\n")
    with pytest.raises(FormatError):
        parse_edgelist("3 1\n0 a\n")


def test_parse_graphs_autodetect():
    assert parse_graphs("# comment\n3 2\n0 1\n1 2\n") == [build_graph(3, [(0, 1), (1, 2)])]
    assert parse_graphs("C~\n@\n") == [complete(4), empty_graph(1)]
    assert read_graphs(io.StringIO("C~\n")) == [complete(4)]
    buf = io.StringIO()
    write_graph6([petersen(), complete(4)], buf)
    assert buf.getvalue() == "IheA@GUAo\nC~\n"
