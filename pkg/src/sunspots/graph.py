"""Immutable simple graphs over vertices ``0..n-1`` with bitset rows.

A vertex set is a plain ``int`` bitmask throughout the package: bit ``v`` is
set iff ``v`` is a member.  Python ints grow as needed, so there is no
word-size cap on ``n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

INF = math.inf  # distance label for unreachable vertices


class GraphError(ValueError):
    """Raised on malformed graph input (bad endpoint, self-loop, ...)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> list[int]:
    return list(bits(mask))


def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[v]`` is the neighbourhood bitmask of ``v``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} rows, got {len(self.rows)}")
        full = self.full
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def adj(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int, within: int | None = None) -> int:
        row = self.rows[v]
        return popcount(row if within is None else row & within)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def min_degree(self) -> int:
        return min((popcount(r) for r in self.rows), default=0)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, direction is ignored."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    rows = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def neighbors(G: Graph, x: int, Y: int | None = None) -> int:
    """N_Y(x): the neighbours of ``x`` inside ``Y`` (all of V(G) by default)."""
    if not 0 <= x < G.n:
        raise GraphError(f"vertex {x} out of range")
    return G.rows[x] if Y is None else G.rows[x] & Y


def neighborhood_of_set(G: Graph, S: int) -> int:
    """Union of the neighbourhoods of the members of ``S``."""
    out = 0
    for v in bits(S):
        out |= G.rows[v]
    return out


def bfs_levels(G: Graph, root: int, within: int | None = None) -> list[float]:
    """Distances from ``root`` in ``G[within]``; unreachable vertices get ``INF``.

    Vertices outside ``within`` are also labelled ``INF``.
    """
    if not 0 <= root < G.n:
        raise GraphError(f"vertex {root} out of range")
    allowed = G.full if within is None else within
    dist: list[float] = [INF] * G.n
    if not allowed >> root & 1:
        return dist
    dist[root] = 0
    seen = 1 << root
    frontier = 1 << root
    d = 0
    while frontier:
        d += 1
        nxt = neighborhood_of_set(G, frontier) & allowed & ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


distance = bfs_levels


def bfs_layers(G: Graph, root: int, within: int | None = None) -> list[int]:
    """BFS layers from ``root`` as bitmasks; layer 0 is ``{root}``."""
    allowed = G.full if within is None else within
    layers = [1 << root]
    seen = 1 << root
    while True:
        nxt = neighborhood_of_set(G, layers[-1]) & allowed & ~seen
        if not nxt:
            return layers
        layers.append(nxt)
        seen |= nxt


def second_neighborhood(G: Graph, v: int) -> int:
    """N^2(v): vertices at distance exactly two from ``v``."""
    first = neighbors(G, v)
    return neighborhood_of_set(G, first) & ~first & ~(1 << v)


def component_of(G: Graph, v: int, within: int | None = None) -> int:
    allowed = G.full if within is None else within
    seen = frontier = 1 << v
    while frontier:
        frontier = neighborhood_of_set(G, frontier) & allowed & ~seen
        seen |= frontier
    return seen


def components(G: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]``, ordered by least member."""
    rest = G.full if within is None else within
    out = []
    while rest:
        comp = component_of(G, lowest(rest), rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(G: Graph, within: int | None = None) -> bool:
    allowed = G.full if within is None else within
    return allowed == 0 or component_of(G, lowest(allowed), allowed) == allowed


def is_anticomplete(G: Graph, X: int, Y: int) -> bool:
    """True iff ``X`` and ``Y`` are disjoint and no edge joins them."""
    return not (X & Y) and not (neighborhood_of_set(G, X) & Y)


def induced_subgraph(G: Graph, S: int) -> tuple[Graph, tuple[int, ...]]:
    """``G[S]`` relabelled to ``0..|S|-1`` in ascending order, plus the label map."""
    labels = tuple(bits(S))
    index = {v: i for i, v in enumerate(labels)}
    rows = []
    for v in labels:
        rows.append(vset(index[u] for u in bits(G.rows[v] & S)))
    return Graph(len(labels), tuple(rows)), labels


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    rows = [0] * G.n
    for v in range(G.n):
        rows[perm[v]] = vset(perm[u] for u in bits(G.rows[v]))
    return Graph(G.n, tuple(rows))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for H in graphs:
        rows.extend(r << offset for r in H.rows)
        offset += H.n
    return Graph(offset, tuple(rows))


def add_vertex(G: Graph, nbrs: int) -> Graph:
    """Append vertex ``n`` adjacent to the members of ``nbrs``."""
    v = G.n
    rows = [r | (1 << v) if nbrs >> u & 1 else r for u, r in enumerate(G.rows)]
    rows.append(nbrs)
    return Graph(v + 1, tuple(rows))


def delete_vertex(G: Graph, v: int) -> Graph:
    return induced_subgraph(G, G.full & ~(1 << v))[0]


def cut_vertices(G: Graph) -> int:
    """Articulation points of ``G`` as a bitmask (fine for desk-scale ``n``)."""
    out = 0
    for v in range(G.n):
        rest = G.full & ~(1 << v)
        if len(components(G, rest)) > len(components(G)) - (1 if G.rows[v] == 0 else 0):
            out |= 1 << v
    return out

