"""Macro-level analytics: frequency distributions, graph feature vectors,
and per-edge pattern ranking."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .census import micro_table
from .classes import classes_for
from .frequencies import GraphletFrequencies
from .graph import Graph
from .parallel import ParallelConfig

GFD_SCOPES = ("connected", "all")
RANK_PATTERNS = ("star4", "clique4", "triangle", "cycle4")


@dataclass(frozen=True)
class GfdVector:
    """Graphlet frequency distribution: counts over the chosen class subset
    normalized to sum 1. ``is_zero`` flags the degenerate all-zero total (no
    division is attempted then)."""

    k: int
    scope: str
    class_ids: tuple[str, ...]
    values: tuple[float, ...]
    is_zero: bool = False

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "scope": self.scope,
            "classes": list(self.class_ids),
            "values": list(self.values),
            "is_zero": self.is_zero,
        }


def gfd(freqs: GraphletFrequencies, k: int = 4, scope: str = "connected") -> GfdVector:
    """Normalized frequencies of the size-k classes. ``connected`` restricts
    to the connected classes (the usual plotting convention: six classes at
    k=4); ``all`` includes the disconnected ones."""
    if k not in (3, 4):
        raise ValueError("gfd supports k in {3, 4}")
    if scope not in GFD_SCOPES:
        raise ValueError(f"scope must be one of {GFD_SCOPES}")
    ids = classes_for(k, connected_only=scope == "connected")
    raw = [freqs.counts[c] for c in ids]
    total = sum(raw)
    if total == 0:
        return GfdVector(k=k, scope=scope, class_ids=ids,
                         values=tuple(0.0 for _ in ids), is_zero=True)
    return GfdVector(k=k, scope=scope, class_ids=ids,
                     values=tuple(v / total for v in raw))


def gfd_distance(a: GfdVector, b: GfdVector, metric: str = "euclidean") -> float:
    """Distance between two distributions of the same k and scope."""
    if a.k != b.k or a.scope != b.scope:
        raise ValueError("GFD vectors have mismatched k or scope")
    x = np.asarray(a.values)
    y = np.asarray(b.values)
    if metric == "euclidean":
        return float(np.linalg.norm(x - y))
    if metric == "cosine":
        if a.is_zero or b.is_zero:
            return 0.0 if (a.is_zero and b.is_zero) else 1.0
        sim = float(np.dot(x, y) / (np.linalg.norm(x) * np.linalg.norm(y)))
        return 1.0 - min(sim, 1.0)
    raise ValueError("metric must be 'euclidean' or 'cosine'")


@dataclass
class FeatureMatrix:
    """One 17-dimensional graphlet-count row per input graph, in a fixed
    class order, with per-graph extraction timing. Failed graphs are skipped
    and recorded."""

    class_ids: tuple[str, ...]
    labels: list[str]
    rows: np.ndarray                 # float64, len(labels) x 17
    seconds: list[float]
    skipped: list[tuple[str, str]] = field(default_factory=list)


def feature_matrix(graphs, labels=None, config: ParallelConfig | None = None,
                   log_scale: bool = False, normalize: bool = False,
                   census_fn=None) -> FeatureMatrix:
    """Extract graphlet feature vectors for a collection of graphs.

    ``log_scale`` applies log1p; ``normalize`` rescales each row to unit L1
    mass. Rows are reproducible across runs and worker counts.
    """
    if census_fn is None:
        from .census import graphlet_census
        census_fn = graphlet_census
    graphs = list(graphs)
    if labels is None:
        labels = [f"graph_{i}" for i in range(len(graphs))]
    class_ids = classes_for(2) + classes_for(3) + classes_for(4)

    kept_labels: list[str] = []
    rows: list[list[float]] = []
    seconds: list[float] = []
    skipped: list[tuple[str, str]] = []
    for label, g in zip(labels, graphs):
        t0 = time.perf_counter()
        try:
            freqs = census_fn(g, config) if config is not None else census_fn(g)
        except Exception as exc:  # per-graph failure: record, skip row
            skipped.append((label, f"{type(exc).__name__}: {exc}"))
            continue
        elapsed = time.perf_counter() - t0
        row = [float(freqs.counts[c]) for c in class_ids]
        if log_scale:
            row = [math.log1p(v) for v in row]
        if normalize:
            total = sum(row)
            if total > 0:
                row = [v / total for v in row]
        kept_labels.append(label)
        rows.append(row)
        seconds.append(elapsed)
    matrix = np.asarray(rows, dtype=np.float64).reshape(len(rows), len(class_ids))
    return FeatureMatrix(class_ids=class_ids, labels=kept_labels, rows=matrix,
                         seconds=seconds, skipped=skipped)


@dataclass(frozen=True)
class RankedEdge:
    index: int
    u: int            # original ids
    v: int
    weight: int


def rank_edges(g: Graph, pattern: str, top_k: int | None = None,
               table: np.ndarray | None = None,
               config: ParallelConfig | None = None) -> list[RankedEdge]:
    """Rank edges by how many patterns of the requested kind they sit in.

    star4 uses the exact per-edge 3-star participation, clique4 the per-edge
    4-clique count, triangle the common-neighbor count, cycle4 the per-edge
    4-cycle count. Sort is weight-descending with canonical edge index as the
    tie-break, so output is invariant to input edge order.
    """
    if pattern not in RANK_PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}; choose from {RANK_PATTERNS}")
    if table is None:
        table = micro_table(g, config)
    if pattern == "triangle":
        weights = table[:, 0]
    elif pattern == "clique4":
        weights = table[:, 3]
    elif pattern == "cycle4":
        weights = table[:, 4]
    else:  # star4: N_{S.,S.,0} = C(su,2) + C(sv,2) - same-side star edges
        su = table[:, 1]
        sv = table[:, 2]
        weights = su * (su - 1) // 2 + sv * (sv - 1) // 2 - table[:, 5] - table[:, 6]
    order = np.argsort(-weights, kind="stable")
    if top_k is not None:
        order = order[:top_k]
    orig = g.original_edges()
    return [RankedEdge(index=int(i), u=int(orig[i, 0]), v=int(orig[i, 1]),
                       weight=int(weights[i])) for i in order]


def edge_weights(g: Graph, pattern: str, table: np.ndarray | None = None,
                 config: ParallelConfig | None = None) -> np.ndarray:
    """Per-edge weights aligned with canonical edge order (visualization
    surface; same weight definitions as rank_edges)."""
    ranked = rank_edges(g, pattern, top_k=None, table=table, config=config)
    weights = np.zeros(g.m, dtype=np.int64)
    for r in ranked:
        weights[r.index] = r.weight
    return weights


def vertex_triangle_counts(g: Graph, table: np.ndarray | None = None) -> np.ndarray:
    """Per-vertex triangle participation: each triangle at a vertex is seen
    from its two incident edges, so halve the incident-edge tri sums."""
    if table is None:
        table = micro_table(g)
    per_vertex = np.zeros(g.n, dtype=np.int64)
    tri = table[:, 0]
    np.add.at(per_vertex, g.edges[:, 0], tri)
    np.add.at(per_vertex, g.edges[:, 1], tri)
    return per_vertex // 2
