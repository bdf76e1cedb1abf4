"""Isomorph-free enumeration of small connected graphs by canonical augmentation.

Each graph on n vertices comes from a parent on n - 1 vertices by adding one
vertex.  A child is kept only when the vertex just added is equivalent to its
canonical deletion vertex: among non-cut vertices of maximum
``(degree, sorted neighbour degrees)``, the one with the largest canonical
label.  Then every isomorphism class arises from exactly one parent class;
repeats from the same parent are dropped with a per-parent certificate set.

All predicates here are hereditary, so they prune the generation tree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from ..graph import Graph, add_vertex, bits, cut_vertices, delete_vertex, popcount, relabel
from ..structures import enumerate_holes, find_4_sunspot
from .canon import Cert, canonical_labeling, certificate
from .config import ENV_NMAX_CAP, HarnessConfig


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Family:
    name: str
    independent_only: bool  # new vertex's neighbourhood must be stable
    accept: Callable[[Graph], bool]


def _no_six_hole(G: Graph) -> bool:
    return next(enumerate_holes(G, 6, 6), None) is None


FAMILIES: dict[str, Family] = {
    "all": Family("all", False, lambda G: True),
    "triangle-free": Family("triangle-free", True, lambda G: True),
    "triangle-free-sunspot-free": Family(
        "triangle-free-sunspot-free", True, lambda G: find_4_sunspot(G) is None),
    "triangle-free-no-6-hole": Family("triangle-free-no-6-hole", True, _no_six_hole),
}


def family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown predicate {name!r}; choose from {sorted(FAMILIES)}") from None


def _stable_subsets(G: Graph) -> Iterator[int]:
    """Non-empty stable sets of G."""
    order = list(range(G.n))

    def rec(i: int, chosen: int, blocked: int) -> Iterator[int]:
        if i == len(order):
            if chosen:
                yield chosen
            return
        v = order[i]
        yield from rec(i + 1, chosen, blocked)
        if not blocked >> v & 1:
            yield from rec(i + 1, chosen | (1 << v), blocked | G.rows[v])

    yield from rec(0, 0, 0)


def _invariant(G: Graph, v: int) -> tuple:
    return (popcount(G.rows[v]), tuple(sorted(popcount(G.rows[u]) for u in bits(G.rows[v]))))


def _children(parent: Graph, parent_cert: Cert, fam: Family) -> Iterator[tuple[Graph, Cert]]:
    subsets = _stable_subsets(parent) if fam.independent_only else range(1, 1 << parent.n)
    seen: set[Cert] = set()
    v = parent.n
    for S in subsets:
        child = add_vertex(parent, S)
        if not fam.accept(child):
            continue
        noncut = child.full & ~cut_vertices(child)
        inv = {u: _invariant(child, u) for u in bits(noncut)}
        top = max(inv.values())
        if inv[v] != top:
            continue
        cands = [u for u in inv if inv[u] == top]
        perm, cert = canonical_labeling(child)
        if cert in seen:
            continue
        w = max(cands, key=lambda u: perm[u])
        if w != v and certificate(delete_vertex(child, w)) != parent_cert:
            continue
        seen.add(cert)
        yield relabel(child, perm), cert


def enumerate_by_order(n_max: int, predicate: str = "all",
                       config: HarnessConfig | None = None) -> Iterator[list[Graph]]:
    """Lists of connected graphs on 1, 2, ..., n_max vertices, one per isomorphism class.

    Arguments are validated eagerly, so a cap violation raises at call time.
    """
    cap = (config or HarnessConfig()).nmax_cap
    if n_max > cap:
        raise CapExceeded(f"n_max={n_max} exceeds the cap {cap} (set {ENV_NMAX_CAP} to raise it)")
    return _levels(n_max, family(predicate))


def _levels(n_max: int, fam: Family) -> Iterator[list[Graph]]:
    if n_max < 1:
        return
    k1 = Graph(1, (0,))
    level = [(k1, certificate(k1))] if fam.accept(k1) else []
    yield [g for g, _ in level]
    for _ in range(2, n_max + 1):
        nxt = []
        for parent, cert in level:
            nxt.extend(_children(parent, cert, fam))
        level = nxt
        yield [g for g, _ in level]


def enumerate_graphs(n_max: int, predicate: str = "all", n_min: int = 1,
                     config: HarnessConfig | None = None) -> Iterator[Graph]:
    """Connected graphs with n_min..n_max vertices passing ``predicate``, each class once."""
    levels = enumerate_by_order(n_max, predicate, config)
    return (g for n, graphs in enumerate(levels, start=1) if n >= n_min for g in graphs)
