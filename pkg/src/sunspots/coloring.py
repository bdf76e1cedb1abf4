"""Exact colouring, clique number, and vertex-critical extraction.

Colouring is a DSATUR branch and bound: greedy clique for the lower bound,
greedy DSATUR for the first upper bound, and a symmetry-broken palette in the
search (colour ``c + 1`` may only appear once colour ``c`` is in use).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, bits, induced_subgraph, lowest, members, popcount


class PreconditionError(ValueError):
    """An operation was called outside its stated preconditions."""

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]  # colors[v] in 1..k
    k: int

    def is_proper(self, G: Graph) -> bool:
        if len(self.colors) != G.n:
            return False
        if any(not 1 <= c <= self.k for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in G.edges())


@dataclass(frozen=True)
class CriticalCertificate:
    """``S`` induces a subgraph with chi = c + 1 that drops to <= c on any single deletion."""

    S: int
    c: int


def greedy_clique(G: Graph) -> int:
    best = 1 if G.n else 0
    for start in range(G.n):
        size, cand = 1, G.rows[start]
        while cand:
            v = max(bits(cand), key=lambda u: popcount(G.rows[u] & cand))
            size += 1
            cand &= G.rows[v]
        best = max(best, size)
    return best


def dsatur_greedy(G: Graph) -> Coloring:
    colors = [0] * G.n
    sat = [0] * G.n
    uncolored = G.full
    while uncolored:
        v = max(bits(uncolored), key=lambda u: (popcount(sat[u]), popcount(G.rows[u] & uncolored), -u))
        c = 1
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        uncolored &= ~(1 << v)
        for u in bits(G.rows[v]):
            sat[u] |= 1 << c
    return Coloring(tuple(colors), max(colors, default=0))


def _branch_and_bound(G: Graph, limit: int, target: int) -> Coloring | None:
    """Search for a colouring with fewer than ``limit`` colours.

    Improves greedily and stops as soon as a colouring with at most ``target``
    colours is found.  Returns the best colouring found, or None.
    """
    n = G.n
    rows = G.rows
    colors = [0] * n
    # count[v][c]: neighbours of v currently coloured c
    count = [[0] * (limit + 1) for _ in range(n)]
    sat = [0] * n
    best: list[Coloring | None] = [None]
    bound = [limit]

    def pick(uncolored: int) -> int:
        best_v, best_key = -1, (-1, -1)
        for v in bits(uncolored):
            key = (popcount(sat[v]), popcount(rows[v] & uncolored))
            if key > best_key:
                best_v, best_key = v, key
        return best_v

    def rec(uncolored: int, used: int) -> bool:
        if not uncolored:
            bound[0] = used
            best[0] = Coloring(tuple(colors), used)
            return used <= target
        v = pick(uncolored)
        rest = uncolored & ~(1 << v)
        c = 0
        while c < used + 1 and c + 1 < bound[0]:
            c += 1
            if sat[v] >> c & 1:
                continue
            colors[v] = c
            nbrs = rows[v]
            for u in bits(nbrs):
                cu = count[u]
                if cu[c] == 0:
                    sat[u] |= 1 << c
                cu[c] += 1
            done = rec(rest, max(used, c))
            for u in bits(nbrs):
                cu = count[u]
                cu[c] -= 1
                if cu[c] == 0:
                    sat[u] &= ~(1 << c)
            colors[v] = 0
            if done:
                return True
        return False

    rec(G.full, 0)
    return best[0]


@lru_cache(maxsize=1 << 16)
def chromatic_number(G: Graph) -> tuple[int, Coloring]:
    """Exact chi(G) with a witness colouring; chi of the null graph is 0."""
    if G.n == 0:
        return 0, Coloring((), 0)
    upper = dsatur_greedy(G)
    lower = greedy_clique(G)
    if upper.k == lower:
        return upper.k, upper
    found = _branch_and_bound(G, upper.k, lower)
    result = found if found is not None else upper
    assert result.is_proper(G)
    return result.k, result


@lru_cache(maxsize=1 << 16)
def is_k_colorable(G: Graph, k: int) -> Coloring | None:
    """A proper colouring with at most ``k`` colours, or None if none exists."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if G.n == 0:
        return Coloring((), 0)
    if k == 0:
        return None
    greedy = dsatur_greedy(G)
    if greedy.k <= k:
        return greedy
    if greedy_clique(G) > k:
        return None
    found = _branch_and_bound(G, k + 1, k)
    if found is not None:
        assert found.is_proper(G) and found.k <= k
    return found


def chi(G: Graph, S: int | None = None) -> int:
    """chi of ``G[S]`` (of ``G`` when ``S`` is None)."""
    H = G if S is None else induced_subgraph(G, S)[0]
    return chromatic_number(H)[0]


def clique_number(G: Graph) -> int:
    rows = G.rows
    best = [0]

    def expand(size: int, cand: int) -> None:
        while cand:
            if size + popcount(cand) <= best[0]:
                return
            v = lowest(cand)
            nxt = cand & rows[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best[0]:
                best[0] = size + 1
            cand &= ~(1 << v)

    expand(0, G.full)
    return best[0]


@lru_cache(maxsize=1 << 16)
def find_triangle(G: Graph) -> tuple[int, int, int] | None:
    """Lexicographically least triangle (u < v < w), or None."""
    for u in range(G.n):
        for v in bits(G.rows[u] >> (u + 1) << (u + 1)):
            common = G.rows[u] & G.rows[v] & ~((1 << (v + 1)) - 1)
            if common:
                return (u, v, lowest(common))
    return None


def is_triangle_free(G: Graph) -> bool:
    return find_triangle(G) is None


def degeneracy_violation(G: Graph) -> int | None:
    """Least vertex of degree below chi(G) - 1, or None when non-degenerate."""
    need = chi(G) - 1
    for v in range(G.n):
        if G.degree(v) < need:
            return v
    return None


def is_non_degenerate(G: Graph) -> bool:
    return degeneracy_violation(G) is None


def liberal_violation(G: Graph) -> tuple[int, int] | None:
    """First non-adjacent pair (x, y) where one neighbourhood contains the other."""
    rows = G.rows
    for x in range(G.n):
        for y in range(x + 1, G.n):
            if rows[x] >> y & 1:
                continue
            if not rows[x] & ~rows[y] or not rows[y] & ~rows[x]:
                return (x, y)
    return None


def is_liberal(G: Graph) -> bool:
    return liberal_violation(G) is None


def extract_critical(G: Graph, c: int, within: int | None = None) -> CriticalCertificate:
    """Vertex-minimal ``S`` (inside ``within``) with chi(G[S]) > c.

    Deletes vertices in ascending label order.  A single pass equals the
    restart-after-each-deletion scan: chi is monotone under deletion, so a
    vertex that could not be removed earlier cannot be removed later either.
    """
    S = G.full if within is None else within
    if is_k_colorable(induced_subgraph(G, S)[0], c) is not None:
        raise PreconditionError(f"extract_critical needs chi > {c}, got chi = {chi(G, S)}")
    for v in members(S):
        T = S & ~(1 << v)
        if is_k_colorable(induced_subgraph(G, T)[0], c) is None:
            S = T
    cert = CriticalCertificate(S, c)
    problem = critical_certificate_problem(G, cert)
    if problem is not None:
        raise AssertionError(f"vertex-critical extraction produced a bad certificate: {problem}")
    return cert


def critical_certificate_problem(G: Graph, cert: CriticalCertificate) -> str | None:
    """Re-verify a certificate from scratch; returns a description of the first failure."""
    H, labels = induced_subgraph(G, cert.S)
    k = chi(H)
    if k != cert.c + 1:
        return f"chi(G[S]) = {k}, expected {cert.c + 1}"
    for i, v in enumerate(labels):
        if chi(induced_subgraph(H, H.full & ~(1 << i))[0]) > cert.c:
            return f"deleting {v} keeps chi above {cert.c}"
    bad = degeneracy_violation(H)
    if bad is not None:
        return f"vertex {labels[bad]} breaks non-degeneracy"
    pair = liberal_violation(H)
    if pair is not None:
        return f"pair {labels[pair[0]]},{labels[pair[1]]} breaks liberality"
    return None
