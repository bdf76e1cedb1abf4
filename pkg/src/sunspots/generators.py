"""Named graph families with fixed, documented labellings.

* ``cycle(n)``: 0-1-...-(n-1)-0.
* ``t_sun(t)``: cycle 0..t-1, pendant ``t + i`` on cycle vertex ``i``.
* ``t_sunspot(t)``: ``t_sun(t)`` without the pendant of vertex ``t - 1``;
  for t = 4 the tuple (0, 1, 2, 3; 4, 5, 6) is the sunspot.
* ``net``: triangle 0, 1, 2 with pendants 3, 4, 5.  ``bull``: net minus 5.
* ``petersen``: outer 5-cycle 0..4, spokes i-(i+5), inner pentagram.
* ``mycielskian(G)``: originals 0..n-1, shadows n..2n-1, apex 2n.
* ``groetzsch``: ``mycielskian(cycle(5))``.
* ``shift_graph(n)``: pairs (i, j), 1 <= i < j <= n, indexed in lexicographic
  order; (i, j) ~ (j, k).
"""
from __future__ import annotations

import itertools
from typing import Callable

from .graph import Graph, build_graph, disjoint_union, empty_graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _need(n >= 0, f"complete graph needs n >= 0, got {n}")
    return build_graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 0 and b >= 0, "part sizes must be non-negative")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def t_sun(t: int) -> Graph:
    _need(t >= 4, f"t-sun needs t >= 4, got {t}")
    return build_graph(2 * t, [(i, (i + 1) % t) for i in range(t)] + [(i, t + i) for i in range(t)])


def t_sunspot(t: int) -> Graph:
    _need(t >= 4, f"t-sunspot needs t >= 4, got {t}")
    edges = [(i, (i + 1) % t) for i in range(t)] + [(i, t + i) for i in range(t - 1)]
    return build_graph(2 * t - 1, edges)


def net() -> Graph:
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def bull() -> Graph:
    return build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, edges)


def hypercube(d: int) -> Graph:
    _need(d >= 0, "dimension must be non-negative")
    n = 1 << d
    return build_graph(n, [(u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)])


def mycielskian(G: Graph) -> Graph:
    n = G.n
    edges = []
    for u, v in G.edges():
        edges += [(u, v), (n + u, v), (u, n + v)]
    edges += [(n + i, 2 * n) for i in range(n)]
    return build_graph(2 * n + 1, edges)


def groetzsch() -> Graph:
    return mycielskian(cycle(5))


def shift_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, n + 1), 2))


def shift_graph(n: int) -> Graph:
    _need(n >= 2, f"shift graph needs n >= 2, got {n}")
    pairs = shift_pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    edges = [(index[(i, j)], index[(j, k)]) for (i, j) in pairs for k in range(j + 1, n + 1)]
    return build_graph(len(pairs), edges)


def pad(G: Graph, extra: int) -> Graph:
    """``G`` plus ``extra`` isolated vertices."""
    return disjoint_union(G, empty_graph(extra))


GENERATORS: dict[str, Callable[..., Graph]] = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "complete-bipartite": complete_bipartite,
    "star": star,
    "t-sun": t_sun,
    "t-sunspot": t_sunspot,
    "net": net,
    "bull": bull,
    "petersen": petersen,
    "hypercube": hypercube,
    "groetzsch": groetzsch,
    "shift-graph": shift_graph,
}


def generate(kind: str, *params: int) -> Graph:
    """Dispatch by family name; ``mycielskian`` takes a nested kind, e.g. ``("groetzsch",)``."""
    key = kind.replace("_", "-")
    if key == "mycielskian":
        _need(bool(params), "mycielskian needs a base graph kind")
        base, *rest = params
        return mycielskian(generate(str(base), *rest))
    if key not in GENERATORS:
        raise ValueError(f"unknown graph kind {kind!r}; choose from {sorted(GENERATORS) + ['mycielskian']}")
    return GENERATORS[key](*params)
