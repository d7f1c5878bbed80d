"""Immutable undirected simple graphs in compressed adjacency form.

Input edge lists are sanitized on load: direction, weights, self-loops and
duplicates are discarded, and arbitrary (possibly 64-bit, non-contiguous)
vertex ids are remapped to dense ``[0, n)``. The inverse map is kept so all
user-facing per-edge output can use the original ids.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence

import numpy as np

from .errors import EdgeListParseError, GraphSizeError

DEFAULT_COMPLEMENT_CAP = 2000


@dataclass(frozen=True)
class EdgeRef:
    """A canonical undirected edge: position in the edge list plus endpoints."""

    index: int
    u: int
    v: int

    def __post_init__(self):
        if not self.u < self.v:
            raise ValueError(f"EdgeRef endpoints must satisfy u < v, got ({self.u}, {self.v})")


@dataclass(frozen=True)
class ParseOptions:
    """Edge-list parsing knobs.

    comment_prefixes: line prefixes ignored entirely ('%%MatrixMarket' headers
        fall under '%').
    num_vertices: force the vertex count; ids must already be dense in
        [0, num_vertices) and no remapping happens. Lets callers keep isolated
        vertices, which disconnected-graphlet counts depend on.
    use_max_id: treat ids as 0-based contiguous and set n = max(id) + 1
        (identity remap), again keeping isolated vertices.
    """

    comment_prefixes: tuple[str, ...] = ("#", "%")
    num_vertices: int | None = None
    use_max_id: bool = False


class Graph:
    """Undirected simple graph with dense vertex ids.

    Neighbor lists live in a compressed row layout (``indptr``/``indices``),
    strictly sorted within each row. ``edges`` holds each undirected edge
    exactly once as (u, v) with u < v, sorted lexicographically. Instances are
    immutable after construction and safe to share across workers.
    """

    __slots__ = (
        "n", "m", "indptr", "indices", "edge_slot_ids", "edges", "degrees",
        "orig_ids", "_adj_cache", "_edge_cols_cache",
    )

    def __init__(self, n: int, edges: np.ndarray, orig_ids: np.ndarray | None = None):
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if edges.size and (edges.min() < 0 or edges.max() >= n):
            raise ValueError("edge endpoints out of range [0, n)")
        m = len(edges)

        # Canonical form: u < v, rows unique and lexicographically sorted.
        lo = np.minimum(edges[:, 0], edges[:, 1])
        hi = np.maximum(edges[:, 0], edges[:, 1])
        if np.any(lo == hi):
            raise ValueError("self-loops are not allowed in a sanitized Graph")
        canon = np.unique(np.column_stack([lo, hi]), axis=0)
        if len(canon) != m:
            raise ValueError("duplicate edges are not allowed in a sanitized Graph")

        # Symmetric CSR adjacency; edge_slot_ids maps each CSR slot back to
        # the canonical edge index so (u, v) -> edge id lookups are O(log deg).
        both_src = np.concatenate([canon[:, 0], canon[:, 1]])
        both_dst = np.concatenate([canon[:, 1], canon[:, 0]])
        both_eid = np.concatenate([np.arange(m, dtype=np.int64)] * 2)
        order = np.lexsort((both_dst, both_src))
        indices = both_dst[order]
        edge_slot_ids = both_eid[order]
        degrees = np.bincount(both_src, minlength=n).astype(np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])

        if orig_ids is None:
            orig_ids = np.arange(n, dtype=np.int64)
        else:
            orig_ids = np.asarray(orig_ids, dtype=np.int64)
            if len(orig_ids) != n:
                raise ValueError("orig_ids length must equal n")

        for arr in (canon, indices, edge_slot_ids, degrees, indptr, orig_ids):
            arr.setflags(write=False)

        self.n = int(n)
        self.m = int(m)
        self.indptr = indptr
        self.indices = indices
        self.edge_slot_ids = edge_slot_ids
        self.edges = canon
        self.degrees = degrees
        self.orig_ids = orig_ids
        self._adj_cache = None
        self._edge_cols_cache = None

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_edges(pairs: Iterable[Sequence[int]] | np.ndarray,
                   options: ParseOptions | None = None,
                   _declared_n: int | None = None) -> "Graph":
        """Sanitize raw (possibly directed/duplicated/weighted-source) pairs
        into a Graph: drop self-loops, merge duplicates and reciprocal pairs,
        remap ids densely unless an explicit vertex-count convention is set.
        """
        options = options or ParseOptions()
        arr = np.asarray(list(pairs) if not isinstance(pairs, np.ndarray) else pairs,
                         dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        arr = arr.reshape(-1, 2)

        keep = arr[:, 0] != arr[:, 1]
        arr = arr[keep]
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        canon = np.unique(np.column_stack([lo, hi]), axis=0) if len(arr) else arr

        declared = options.num_vertices if options.num_vertices is not None else _declared_n
        if declared is not None:
            n = int(declared)
            if len(canon) and canon.max() >= n:
                raise EdgeListParseError(
                    f"vertex id {int(canon.max())} out of declared range [0, {n})")
            if len(canon) and canon.min() < 0:
                raise EdgeListParseError("negative vertex id")
            return Graph(n, canon)
        if options.use_max_id:
            if len(canon) and canon.min() < 0:
                raise EdgeListParseError("negative vertex id")
            n = int(canon.max()) + 1 if len(canon) else 0
            return Graph(n, canon)

        # Dense remap, ascending original id -> ascending dense id.
        ids = np.unique(canon)
        dense = np.searchsorted(ids, canon)
        return Graph(len(ids), dense, orig_ids=ids)

    @staticmethod
    def from_file(path: str | Path, options: ParseOptions | None = None) -> "Graph":
        with open(path, "r", encoding="utf-8") as fh:
            return load_edge_list(fh, options)

    @staticmethod
    def from_text(text: str, options: ParseOptions | None = None) -> "Graph":
        return load_edge_list(io.StringIO(text), options)

    # -- queries ------------------------------------------------------------

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        pos = int(np.searchsorted(row, v))
        return pos < len(row) and row[pos] == v

    def edge_id(self, u: int, v: int) -> int | None:
        """Canonical edge index of (u, v), or None when absent."""
        row = self.neighbors(u)
        pos = int(np.searchsorted(row, v))
        if pos < len(row) and row[pos] == v:
            return int(self.edge_slot_ids[self.indptr[u] + pos])
        return None

    def edge(self, index: int) -> EdgeRef:
        u, v = self.edges[index]
        return EdgeRef(int(index), int(u), int(v))

    def edge_refs(self) -> list[EdgeRef]:
        return [EdgeRef(i, int(u), int(v)) for i, (u, v) in enumerate(self.edges)]

    def adj_lists(self) -> list[list[int]]:
        """Neighbor lists as plain Python lists, cached. The census kernels
        iterate these; plain ints are much faster to loop over than ndarray
        scalars."""
        if self._adj_cache is None:
            split = np.split(self.indices, self.indptr[1:-1]) if self.n else []
            self._adj_cache = [part.tolist() for part in split]
        return self._adj_cache

    def edge_columns(self) -> tuple[list[int], list[int]]:
        """Edge endpoints as two parallel Python lists (kernel hot path)."""
        if self._edge_cols_cache is None:
            self._edge_cols_cache = (self.edges[:, 0].tolist(), self.edges[:, 1].tolist())
        return self._edge_cols_cache

    def original_edges(self) -> np.ndarray:
        """Canonical edges expressed with original ids (m x 2)."""
        return self.orig_ids[self.edges]

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _tokenize(line: str) -> list[str]:
    return line.replace(",", " ").split()


def load_edge_list(source: IO[str] | Iterable[str], options: ParseOptions | None = None) -> Graph:
    """Parse whitespace- or comma-separated integer pairs into a Graph.

    Comment lines start with '#' or '%' (MatrixMarket banners included); an
    optional third column (e.g. weights) is ignored; direction, self-loops
    and duplicates are discarded. A MatrixMarket coordinate size header
    ("rows cols nnz") right after the banner sets the vertex count, keeping
    isolated vertices. Raises EdgeListParseError with the offending line
    number on malformed input; input with no data lines at all is an error.
    """
    options = options or ParseOptions()
    pairs: list[tuple[int, int]] = []
    is_matrix_market = False
    mm_rows: int | None = None
    saw_data = False

    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("%%MatrixMarket"):
            is_matrix_market = True
            continue
        if line.startswith(options.comment_prefixes):
            continue
        tokens = _tokenize(line)

        if is_matrix_market and not saw_data:
            # Coordinate size header: rows cols nnz. Only the pattern portion
            # below it is read as edges.
            saw_data = True
            if len(tokens) == 3:
                try:
                    rows, cols = int(tokens[0]), int(tokens[1])
                except ValueError:
                    raise EdgeListParseError("malformed MatrixMarket size header", lineno)
                mm_rows = max(rows, cols)
                continue
            # No size header; fall through and treat as a data line.

        saw_data = True
        if len(tokens) < 2:
            raise EdgeListParseError(f"expected at least 2 integer tokens, got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer vertex id in {line!r}", lineno)
        pairs.append((u, v))

    if not saw_data:
        raise EdgeListParseError("no data lines in input (empty or comments only)")

    if mm_rows is not None and options.num_vertices is None and not options.use_max_id:
        # MatrixMarket ids are 1-based and contiguous within [1, rows].
        arr = np.asarray(pairs, dtype=np.int64) if pairs else np.zeros((0, 2), dtype=np.int64)
        if len(arr) and (arr.min() < 1 or arr.max() > mm_rows):
            raise EdgeListParseError(
                f"MatrixMarket ids outside [1, {mm_rows}]")
        g = Graph.from_edges(arr - 1, ParseOptions(), _declared_n=mm_rows)
        # Report the original 1-based ids in output.
        return Graph(g.n, g.edges, orig_ids=np.arange(1, g.n + 1, dtype=np.int64))

    return Graph.from_edges(pairs, options)


def to_edge_list_text(g: Graph) -> str:
    """Canonical output: one "u v" pair per line in original ids, smaller id
    first, lines sorted. Reloading the result reproduces the same Graph."""
    out = g.original_edges()
    lo = np.minimum(out[:, 0], out[:, 1])
    hi = np.maximum(out[:, 0], out[:, 1])
    order = np.lexsort((hi, lo))
    lines = [f"{lo[i]} {hi[i]}" for i in order]
    return "\n".join(lines) + ("\n" if lines else "")


def complement(g: Graph, cap: int = DEFAULT_COMPLEMENT_CAP) -> Graph:
    """Complement graph on the same vertex set: (u, v) adjacent iff it was
    not. Dense output, so n is capped (default 2000)."""
    if g.n > cap:
        raise GraphSizeError(f"complement refused for n={g.n} > cap={cap}")
    adj = np.zeros((g.n, g.n), dtype=bool)
    if g.m:
        adj[g.edges[:, 0], g.edges[:, 1]] = True
    # Upper-triangle pairs not present in g:
    iu = np.triu_indices(g.n, k=1)
    mask = ~adj[iu]
    comp_edges = np.column_stack([iu[0][mask], iu[1][mask]])
    return Graph(g.n, comp_edges, orig_ids=g.orig_ids.copy())


def order_edges_by_degree(g: Graph) -> np.ndarray:
    """Edge processing order: max endpoint degree descending, then min
    endpoint degree descending, remaining ties broken by canonical edge index
    ascending. An optimization hint only; census results are order-invariant."""
    if g.m == 0:
        return np.zeros(0, dtype=np.int64)
    du = g.degrees[g.edges[:, 0]]
    dv = g.degrees[g.edges[:, 1]]
    maxdeg = np.maximum(du, dv)
    mindeg = np.minimum(du, dv)
    # lexsort is stable, so equal (max, min) pairs keep index order.
    return np.lexsort((-mindeg, -maxdeg)).astype(np.int64)


def induced_subgraph(g: Graph, vertices: Iterable[int],
                     excluded_edges: Iterable[int] = ()) -> Graph:
    """Subgraph induced by ``vertices`` (dense ids of ``g``), optionally
    masking some base edges out. Vertex ids are re-densified; original ids
    carry through."""
    verts = np.asarray(sorted(set(int(v) for v in vertices)), dtype=np.int64)
    if len(verts) and (verts.min() < 0 or verts.max() >= g.n):
        raise ValueError("selection vertex out of range")
    excluded = set(int(e) for e in excluded_edges)
    member = np.zeros(g.n, dtype=bool)
    member[verts] = True
    if g.m:
        keep = member[g.edges[:, 0]] & member[g.edges[:, 1]]
        if excluded:
            keep &= ~np.isin(np.arange(g.m), np.fromiter(excluded, dtype=np.int64))
        sub = g.edges[keep]
    else:
        sub = np.zeros((0, 2), dtype=np.int64)
    dense = np.searchsorted(verts, sub)
    return Graph(len(verts), dense, orig_ids=g.orig_ids[verts])
