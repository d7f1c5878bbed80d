"""Seeded graph generators for tests, benchmarks and experiment scripts."""

from __future__ import annotations

import numpy as np

from .graph import Graph


def gnp_random_graph(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdos-Renyi G(n, p)."""
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n, k=1)
    mask = rng.random(len(iu[0])) < p
    edges = np.column_stack([iu[0][mask], iu[1][mask]])
    return Graph(n, edges)


def random_graph_avg_degree(n: int, avg_degree: float, seed: int | None = None) -> Graph:
    """G(n, p) with p chosen for the requested average degree. Sparse-sampled
    so million-edge graphs are cheap to build."""
    rng = np.random.default_rng(seed)
    target_m = int(round(n * avg_degree / 2))
    # Oversample pairs, then dedup; repeat until enough survive.
    edges = np.zeros((0, 2), dtype=np.int64)
    want = target_m
    while want > 0:
        draw = rng.integers(0, n, size=(int(want * 1.3) + 16, 2), dtype=np.int64)
        draw = draw[draw[:, 0] != draw[:, 1]]
        lo = np.minimum(draw[:, 0], draw[:, 1])
        hi = np.maximum(draw[:, 0], draw[:, 1])
        edges = np.unique(np.vstack([edges, np.column_stack([lo, hi])]), axis=0)
        want = target_m - len(edges)
    if len(edges) > target_m:
        keep = rng.choice(len(edges), size=target_m, replace=False)
        edges = edges[np.sort(keep)]
    return Graph(n, edges)


def powerlaw_cluster_graph(n: int, attach: int, seed: int | None = None) -> Graph:
    """Preferential-attachment graph (Barabasi-Albert style): each new vertex
    attaches to ``attach`` existing ones sampled by degree. Produces the
    skewed degree distributions the batch scheduler is meant to balance."""
    rng = np.random.default_rng(seed)
    if n <= attach:
        raise ValueError("need n > attach")
    edges = []
    targets = list(range(attach))
    repeated: list[int] = list(range(attach))
    for v in range(attach, n):
        chosen = set()
        while len(chosen) < attach:
            chosen.add(int(repeated[rng.integers(0, len(repeated))]) if repeated else
                       int(rng.integers(0, v)))
        for t in chosen:
            edges.append((t, v))
            repeated.append(t)
            repeated.append(v)
        targets.append(v)
    return Graph.from_edges(np.asarray(edges, dtype=np.int64),
                            _declared_n=n)


# -- canonical small graphs used throughout the test-suite -------------------

def complete_graph(k: int) -> Graph:
    iu = np.triu_indices(k, k=1)
    return Graph(k, np.column_stack(iu))


def cycle_graph(k: int) -> Graph:
    edges = [(i, (i + 1) % k) for i in range(k)]
    return Graph.from_edges(edges, _declared_n=k)


def path_graph(k: int) -> Graph:
    return Graph(k, np.asarray([(i, i + 1) for i in range(k - 1)], dtype=np.int64))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: hub 0 connected to 1..leaves."""
    return Graph(leaves + 1, np.asarray([(0, i) for i in range(1, leaves + 1)], dtype=np.int64))


def empty_graph(k: int) -> Graph:
    return Graph(k, np.zeros((0, 2), dtype=np.int64))


def diamond_graph() -> Graph:
    """K4 minus one edge; (0, 1) is the chord."""
    return Graph(4, np.asarray([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], dtype=np.int64))


def paw_graph() -> Graph:
    """Triangle 0-1-2 with tail 2-3."""
    return Graph(4, np.asarray([(0, 1), (0, 2), (1, 2), (2, 3)], dtype=np.int64))


def tailed_triangle_graph() -> Graph:
    return paw_graph()


def two_disjoint_edges_graph() -> Graph:
    return Graph(4, np.asarray([(0, 1), (2, 3)], dtype=np.int64))


def clique_plus_pendant(k: int) -> Graph:
    """K_k plus one pendant vertex attached to vertex 0."""
    iu = np.triu_indices(k, k=1)
    edges = np.vstack([np.column_stack(iu), [[0, k]]])
    return Graph(k + 1, edges)
