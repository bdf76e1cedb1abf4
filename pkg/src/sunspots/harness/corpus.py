"""Graph corpora: exhaustive, seeded random, generated families, and files."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Iterator

from ..formats import read_graphs
from ..generators import generate
from ..graph import Graph, build_graph
from .config import ENV_RANDOM_CAP, HarnessConfig
from .enumerate import enumerate_graphs


@dataclass(frozen=True)
class Corpus:
    source: dict[str, Any]
    graphs: tuple[Graph, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)


def exhaustive_corpus(n_max: int, predicate: str = "all", n_min: int = 1,
                      config: HarnessConfig | None = None) -> Corpus:
    graphs = tuple(enumerate_graphs(n_max, predicate, n_min, config))
    return Corpus({"kind": "exhaustive", "n_max": n_max, "n_min": n_min, "predicate": predicate}, graphs)


def _check_random_cap(n: int, config: HarnessConfig | None) -> None:
    cap = (config or HarnessConfig()).random_cap
    if n > cap:
        raise ValueError(f"n={n} exceeds the random-mode cap {cap} (set {ENV_RANDOM_CAP} to raise it)")


def triangle_free_process(n: int, rng: random.Random, edge_budget: int | None = None) -> Graph:
    """Insert uniformly random non-edges closing no triangle until saturated or at budget.

    Scanning a shuffled list of pairs and skipping blocked ones picks each
    next edge uniformly among the currently allowed pairs.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    rows = [0] * n
    edges = []
    for u, v in pairs:
        if edge_budget is not None and len(edges) >= edge_budget:
            break
        if rows[u] & rows[v]:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        edges.append((u, v))
    return build_graph(n, edges)


def random_triangle_free(n: int, count: int, seed: int, edge_budget: int | None = None,
                         config: HarnessConfig | None = None) -> Corpus:
    _check_random_cap(n, config)
    rng = random.Random(seed)
    graphs = tuple(triangle_free_process(n, rng, edge_budget) for _ in range(count))
    return Corpus({"kind": "random", "model": "triangle-free-process", "n": n, "count": count,
                   "seed": seed, "edge_budget": edge_budget}, graphs)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_gnp(n: int, p: float, count: int, seed: int, config: HarnessConfig | None = None) -> Corpus:
    _check_random_cap(n, config)
    rng = random.Random(seed)
    graphs = tuple(gnp(n, p, rng) for _ in range(count))
    return Corpus({"kind": "random", "model": "gnp", "n": n, "p": p, "count": count, "seed": seed}, graphs)


def generated_corpus(specs: Iterable[tuple]) -> Corpus:
    """Named families, e.g. ``[("t-sun", 6), ("petersen",)]``."""
    specs = [tuple(s) for s in specs]
    graphs = tuple(generate(*s) for s in specs)
    return Corpus({"kind": "generated", "members": [list(s) for s in specs]}, graphs)


def file_corpus(path: str | Path) -> Corpus:
    return Corpus({"kind": "file", "path": str(path)}, tuple(read_graphs(path)))
