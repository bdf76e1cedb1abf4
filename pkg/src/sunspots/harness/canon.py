"""Canonical labelling by individualisation and refinement.

Equitable refinement of an ordered partition, then a search tree that
individualises vertices of the first non-singleton cell.  Leaves are compared
by the relabelled adjacency rows; equal leaves yield automorphisms, which
prune siblings lying in the same orbit under the automorphisms fixing the
current prefix.
"""
from __future__ import annotations

from ..graph import Graph, bits, popcount, relabel, vset

Cert = tuple[int, tuple[int, ...]]


def refine(G: Graph, cells: list[list[int]]) -> list[list[int]]:
    rows = G.rows
    while True:
        masks = [vset(c) for c in cells]
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(popcount(rows[v] & m) for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            split = True
            for key in keys:
                out.append([v for v in cell if sig[v] == key])
        cells = out
        if not split:
            return cells


def _leaf(G: Graph, order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(vset(pos[u] for u in bits(G.rows[v])) for v in order)


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(G: Graph) -> tuple[list[int], Cert]:
    """``(perm, cert)`` with ``perm[v]`` the canonical label of ``v``.

    Isomorphic graphs get equal certificates; ``relabel(G, perm)`` is the
    canonical representative.
    """
    n = G.n
    if n == 0:
        return [], (0, ())
    best: list = [None, None]  # certificate rows, order
    autos: list[tuple[int, ...]] = []

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        cells = refine(G, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _leaf(G, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            elif cert == best[0]:
                gamma = [0] * n
                for a, b in zip(best[1], order):
                    gamma[a] = b
                autos.append(tuple(gamma))
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if tried:
                fixing = [g for g in autos if all(g[p] == p for p in prefix)]
                if fixing:
                    roots = _orbit_roots(n, fixing)
                    if any(roots[v] == roots[w] for w in tried):
                        continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:], prefix + [v])

    search([list(range(n))], [])
    order = best[1]
    perm = [0] * n
    for i, v in enumerate(order):
        perm[v] = i
    return perm, (n, best[0])


def certificate(G: Graph) -> Cert:
    return canonical_labeling(G)[1]


def canonical_form(G: Graph) -> Graph:
    perm, _ = canonical_labeling(G)
    return relabel(G, perm)
