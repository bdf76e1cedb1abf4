"""Detectors and certificates for induced structures.

Holes are enumerated by an induced-path DFS anchored at the least vertex of
the cycle; the second vertex is required to be smaller than the closing vertex,
so every hole is emitted exactly once, already in its canonical
(lexicographically least) rotation and reflection.  Because no emitted tuple is
a prefix of another, DFS order with ascending branching is lexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .graph import Graph, GraphError, bits, lowest, popcount, vset


@dataclass(frozen=True)
class InducedPath:
    seq: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.seq) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.seq[0], self.seq[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.seq[1:-1]

    def verify(self, G: Graph) -> bool:
        s = self.seq
        if not s or len(set(s)) != len(s):
            return False
        for i in range(len(s)):
            for j in range(i + 1, len(s)):
                if G.adj(s[i], s[j]) != (j == i + 1):
                    return False
        return True


@dataclass(frozen=True)
class Hole:
    cyc: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.cyc)

    @property
    def mask(self) -> int:
        return vset(self.cyc)

    def edges(self) -> list[tuple[int, int]]:
        c = self.cyc
        return [(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]

    def index(self, v: int) -> int:
        return self.cyc.index(v)

    def distance(self, u: int, v: int) -> int:
        """Distance between two hole vertices measured along the cycle."""
        d = abs(self.index(u) - self.index(v))
        return min(d, len(self.cyc) - d)

    def verify(self, G: Graph) -> bool:
        c = self.cyc
        k = len(c)
        if k < 4 or len(set(c)) != k:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if G.adj(c[i], c[j]) != consecutive:
                    return False
        return True


def canonical_cycle(cyc: Sequence[int]) -> tuple[int, ...]:
    """Least rotation/reflection of a cyclic sequence."""
    k = len(cyc)
    i = cyc.index(min(cyc))
    fwd = tuple(cyc[(i + j) % k] for j in range(k))
    bwd = tuple(cyc[(i - j) % k] for j in range(k))
    return min(fwd, bwd)


@dataclass(frozen=True)
class SunWitness:
    cycle: tuple[int, ...]
    pendants: tuple[int, ...]  # pendants[i] hangs off cycle[i]

    @property
    def t(self) -> int:
        return len(self.cycle)

    def verify(self, G: Graph) -> bool:
        t = self.t
        if t < 4 or len(self.pendants) != t:
            return False
        expected = {frozenset((self.cycle[i], self.cycle[(i + 1) % t])) for i in range(t)}
        expected |= {frozenset((self.cycle[i], self.pendants[i])) for i in range(t)}
        return _induced_edges_equal(G, self.cycle + self.pendants, expected)


@dataclass(frozen=True)
class SunspotWitness:
    """The tuple (x1, x2, x3, x4; y1, y2, y3)."""

    x: tuple[int, int, int, int]
    y: tuple[int, int, int]

    def verify(self, G: Graph) -> bool:
        x1, x2, x3, x4 = self.x
        y1, y2, y3 = self.y
        expected = {frozenset(e) for e in
                    [(x1, x2), (x2, x3), (x3, x4), (x4, x1), (x1, y1), (x2, y2), (x3, y3)]}
        return _induced_edges_equal(G, self.x + self.y, expected)


@dataclass(frozen=True)
class TrianglePendantWitness:
    """A net (three pendants) or a bull (pendants on the first two triangle vertices)."""

    triangle: tuple[int, int, int]
    pendants: tuple[int, ...]

    def verify(self, G: Graph) -> bool:
        a, b, c = self.triangle
        expected = {frozenset(e) for e in [(a, b), (b, c), (a, c)]}
        expected |= {frozenset((self.triangle[i], p)) for i, p in enumerate(self.pendants)}
        return _induced_edges_equal(G, self.triangle + self.pendants, expected)


@dataclass(frozen=True)
class FlapWitness:
    """A 4-hole x1 - h1 - h2 - x2 - x1 sharing the edge h1h2 (at least) with a hole."""

    quad: tuple[int, int, int, int]
    shared: tuple[tuple[int, int], ...]

    def verify(self, G: Graph, H: Hole) -> bool:
        if not Hole(self.quad).verify(G):
            return False
        hole_edges = {frozenset(e) for e in H.edges()}
        quad_edges = {frozenset(e) for e in Hole(self.quad).edges()}
        shared = {frozenset(e) for e in self.shared}
        return bool(shared) and shared == hole_edges & quad_edges


def _induced_edges_equal(G: Graph, verts: Sequence[int], expected: set[frozenset[int]]) -> bool:
    if len(set(verts)) != len(verts) or any(not 0 <= v < G.n for v in verts):
        return False
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if G.adj(u, v) != (frozenset((u, v)) in expected):
                return False
    return True


# -- holes -----------------------------------------------------------------

def enumerate_holes(G: Graph, lmin: int = 4, lmax: int | None = None,
                    within: int | None = None) -> Iterator[Hole]:
    """Every hole of ``G[within]`` with length in [lmin, lmax], once each, in lex order."""
    if lmin < 4:
        raise ValueError(f"holes have length >= 4, got lmin={lmin}")
    allowed_all = G.full if within is None else within
    if lmax is None:
        lmax = popcount(allowed_all)
    if lmax < lmin:
        return
    rows = G.rows

    for a in bits(allowed_all):
        allowed = allowed_all & ~((1 << (a + 1)) - 1)
        na = rows[a] & allowed
        if popcount(na) < 2:
            continue
        for p2 in bits(na):
            path = [a, p2]
            # vertices unusable as the next path vertex: path members and
            # neighbours of interior vertices (a's neighbours close the cycle)
            excl = (1 << a) | (1 << p2)
            yield from _grow(rows, allowed, na, path, excl, lmin, lmax)


def _grow(rows, allowed, na, path, excl, lmin, lmax):
    u = path[-1]
    k = len(path)
    for v in bits(rows[u] & allowed & ~excl):
        if na >> v & 1:
            # v closes the cycle a .. u v
            if k >= 3 and lmin <= k + 1 <= lmax and v > path[1]:
                yield Hole(tuple(path) + (v,))
        elif k + 1 < lmax:
            path.append(v)
            yield from _grow(rows, allowed, na, path, excl | rows[u] | (1 << v), lmin, lmax)
            path.pop()


def find_hole_min_length(G: Graph, ell: int, within: int | None = None) -> Hole | None:
    """A shortest hole among those of length >= ell (lexicographically least of that length)."""
    if ell < 4:
        raise ValueError(f"minimum hole length must be >= 4, got {ell}")
    total = popcount(G.full if within is None else within)
    for t in range(ell, total + 1):
        for H in enumerate_holes(G, t, t, within):
            return H
    return None


def longest_hole_length(G: Graph) -> int:
    """Length of a longest hole, 0 if the graph has none."""
    best = 0
    for H in enumerate_holes(G, 4):
        best = max(best, H.length)
    return best


# -- sectors and flaps -------------------------------------------------------

def x_sectors(G: Graph, H: Hole, x: int) -> list[InducedPath]:
    """All x-sectors of H, read forward from each neighbour of x on H."""
    if x in H.cyc:
        raise GraphError(f"vertex {x} lies on the hole")
    c = H.cyc
    k = len(c)
    idx = [i for i in range(k) if G.adj(x, c[i])]
    if len(idx) < 2:
        return []
    out = []
    for j, i in enumerate(idx):
        nxt = idx[(j + 1) % len(idx)]
        span = (nxt - i) % k
        out.append(InducedPath(tuple(c[(i + s) % k] for s in range(span + 1))))
    return out


def find_flap(G: Graph, H: Hole) -> FlapWitness | None:
    """An H-flap x1 - h1 - h2 - x2 - x1 (h1h2 an edge of H), first in hole-edge order."""
    if not H.verify(G):
        raise GraphError(f"{H.cyc} is not a hole of the graph")
    hole_edges = {frozenset(e) for e in H.edges()}
    rows = G.rows
    for h1, h2 in H.edges():
        for a, b in ((h1, h2), (h2, h1)):
            for x1 in bits(rows[a] & ~rows[b] & ~(1 << b)):
                for x2 in bits(rows[b] & rows[x1] & ~rows[a] & ~(1 << a)):
                    quad = (x1, a, b, x2)
                    shared = tuple(sorted(
                        tuple(sorted(e)) for e in Hole(quad).edges() if frozenset(e) in hole_edges))
                    return FlapWitness(quad, shared)
    return None


def four_hole_edges(G: Graph) -> set[frozenset[int]]:
    out: set[frozenset[int]] = set()
    for Q in enumerate_holes(G, 4, 4):
        out.update(frozenset(e) for e in Q.edges())
    return out


def flapless_violation(G: Graph, within: int | None = None) -> tuple[Hole, FlapWitness] | None:
    """A hole of length >= 6 together with one of its flaps, or None when flapless.

    A 4-hole sharing an edge with H is exactly an H-flap, so only holes through
    an edge of some 4-hole need a flap search.
    """
    from .graph import induced_subgraph

    if within is not None and within != G.full:
        sub, labels = induced_subgraph(G, within)
        found = flapless_violation(sub)
        if found is None:
            return None
        H, flap = found
        return (Hole(tuple(labels[v] for v in H.cyc)),
                FlapWitness(tuple(labels[v] for v in flap.quad),
                            tuple(tuple(sorted((labels[a], labels[b]))) for a, b in flap.shared)))
    quad_edges = four_hole_edges(G)
    if not quad_edges:
        return None
    for H in enumerate_holes(G, 6):
        if any(frozenset(e) in quad_edges for e in H.edges()):
            flap = find_flap(G, H)
            assert flap is not None
            return H, flap
    return None


@lru_cache(maxsize=1 << 14)
def is_flapless(G: Graph) -> bool:
    return flapless_violation(G) is None


# -- suns, sunspots, nets, bulls ---------------------------------------------

def _pendant_order(G: Graph, cand: int) -> list[int]:
    # degree-one candidates are forced choices, try them first
    return sorted(bits(cand), key=lambda v: (popcount(G.rows[v]) != 1, v))


def _undominated(G: Graph, cand: int, region: int) -> list[int]:
    """Candidates whose neighbourhood inside ``region`` is inclusion-minimal.

    Among equal restricted neighbourhoods only the least label survives.  Any
    completion using a dominated pendant stays valid with the dominating one.
    """
    rows = G.rows
    cs = _pendant_order(G, cand)
    keep = []
    for p in cs:
        np_ = rows[p] & region
        if any((rows[q] & region) & ~np_ == 0 and ((rows[q] & region) != np_ or q < p)
               for q in cs if q != p):
            continue
        keep.append(p)
    return keep


def _suns_of_length(G: Graph, t: int) -> Iterator[SunWitness]:
    """Induced t-suns, growing the cycle as in ``enumerate_holes``.

    The pendant of a cycle vertex is fixed when the vertex becomes interior,
    i.e. when its successor joins.  From then on no later cycle vertex or
    pendant may touch the pendant's neighbourhood, and only undominated
    pendants need to be tried.  The pendants of the anchor, the last vertex
    and the closing vertex are chosen together at closure.
    """
    rows = G.rows
    deg = [popcount(r) for r in rows]

    def close_pendants(cyc: tuple[int, ...], pend: list[int], near_pend: int,
                       used: int) -> list[int] | None:
        cmask = vset(cyc)
        todo = [cyc[0], cyc[-2], cyc[-1]]
        cands = []
        for x in todo:
            others = 0
            for w in cyc:
                if w != x:
                    others |= rows[w]
            cands.append(rows[x] & ~others & ~cmask & ~used & ~near_pend)
        chosen: list[int] = []

        def rec(i: int, blocked: int) -> bool:
            if i == 3:
                return True
            for p in _pendant_order(G, cands[i] & ~blocked):
                chosen.append(p)
                if rec(i + 1, blocked | rows[p] | (1 << p)):
                    return True
                chosen.pop()
            return False

        if not rec(0, 0):
            return None
        pa, pu, pv = chosen
        return [pa] + pend + [pu, pv]

    for a in range(G.n):
        if deg[a] < 3:
            continue
        allowed = G.full & ~((1 << (a + 1)) - 1)
        na = rows[a] & allowed

        def rec(path: list[int], pend: list[int], used: int, near_interior: int,
                near_pend: int) -> Iterator[SunWitness]:
            # pend[i] belongs to path[i + 1]; used: path and pend; near_interior:
            # N of path[1:-1]; near_pend: N of pend
            u = path[-1]
            k = len(path)
            # the anchor must keep a private pendant candidate
            if k > 1 and not rows[a] & ~(near_interior | rows[u] | used | near_pend):
                return
            ninterior = near_interior | rows[u]
            for v in bits(rows[u] & allowed & ~used & ~near_interior & ~near_pend):
                if deg[v] < 3:
                    continue
                if k == 1:
                    yield from rec([a, v], pend, used | (1 << v), 0, 0)
                    continue
                if na >> v & 1:
                    if k + 1 == t and v > path[1]:
                        full = close_pendants(tuple(path) + (v,), pend, near_pend, used)
                        if full is not None:
                            yield SunWitness(tuple(path) + (v,), tuple(full))
                    continue
                if k + 1 >= t:
                    continue
                nused = used | (1 << v)
                # u becomes interior: fix its pendant now
                blocked = nused | near_interior | rows[a] | rows[v] | near_pend
                region = G.full & ~(nused | ninterior | near_pend)
                for p in _undominated(G, rows[u] & ~blocked, region):
                    path.append(v)
                    pend.append(p)
                    yield from rec(path, pend, nused | (1 << p), ninterior, near_pend | rows[p])
                    path.pop()
                    pend.pop()

        yield from rec([a], [], 1 << a, 0, 0)


def find_t_sun(G: Graph, ell: int = 4, t_max: int | None = None) -> SunWitness | None:
    """An induced t-sun with ell <= t (<= t_max), smallest t first."""
    if ell < 4:
        raise ValueError(f"suns have t >= 4, got {ell}")
    top = G.n // 2 if t_max is None else min(t_max, G.n // 2)
    for t in range(ell, top + 1):
        for w in _suns_of_length(G, t):
            assert w.verify(G), w
            return w
    return None


@lru_cache(maxsize=1 << 16)
def find_4_sunspot(G: Graph) -> SunspotWitness | None:
    """Lexicographically least 4-sunspot tuple (x1, x2, x3, x4; y1, y2, y3), or None."""
    rows = G.rows
    for x1 in range(G.n):
        for x2 in bits(rows[x1]):
            for x3 in bits(rows[x2] & ~rows[x1] & ~(1 << x1)):
                for x4 in bits(rows[x3] & rows[x1] & ~rows[x2] & ~(1 << x2)):
                    quad = (1 << x1) | (1 << x2) | (1 << x3) | (1 << x4)
                    c1 = rows[x1] & ~quad & ~rows[x2] & ~rows[x3] & ~rows[x4]
                    c2 = rows[x2] & ~quad & ~rows[x1] & ~rows[x3] & ~rows[x4]
                    c3 = rows[x3] & ~quad & ~rows[x1] & ~rows[x2] & ~rows[x4]
                    for y1 in bits(c1):
                        for y2 in bits(c2 & ~rows[y1]):
                            c3y = c3 & ~rows[y1] & ~rows[y2]
                            if c3y:
                                w = SunspotWitness((x1, x2, x3, x4), (y1, y2, lowest(c3y)))
                                assert w.verify(G)
                                return w
    return None


def is_4_sunspot_free(G: Graph) -> bool:
    return find_4_sunspot(G) is None


def _triangle_pendants(G: Graph, npend: int) -> TrianglePendantWitness | None:
    rows = G.rows
    for a in range(G.n):
        for b in bits(rows[a]):
            for c in bits(rows[a] & rows[b]):
                if npend == 3 and not a < b < c:
                    continue
                tri = (1 << a) | (1 << b) | (1 << c)
                ca = rows[a] & ~tri & ~rows[b] & ~rows[c]
                cb = rows[b] & ~tri & ~rows[a] & ~rows[c]
                for pa in bits(ca):
                    for pb in bits(cb & ~rows[pa]):
                        if npend == 2:
                            if a < b:
                                w = TrianglePendantWitness((a, b, c), (pa, pb))
                                assert w.verify(G)
                                return w
                            continue
                        cc = rows[c] & ~tri & ~rows[a] & ~rows[b] & ~rows[pa] & ~rows[pb]
                        if cc:
                            w = TrianglePendantWitness((a, b, c), (pa, pb, lowest(cc)))
                            assert w.verify(G)
                            return w
    return None


def find_net(G: Graph) -> TrianglePendantWitness | None:
    """Induced net: triangle (a < b < c) with pendants (pa, pb, pc)."""
    return _triangle_pendants(G, 3)


def find_bull(G: Graph) -> TrianglePendantWitness | None:
    """Induced bull: triangle (a, b, c) with pendants on a and b (a < b)."""
    return _triangle_pendants(G, 2)
