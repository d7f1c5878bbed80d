"""Mutable induced-subgraph selections with localized incremental updates.

A selection is a vertex subset of a base graph plus an optional mask of
excluded base edges. After every operation the cached counts equal a fresh
census of the induced selection; the update only recomputes the per-edge
contributions of edges whose egonet touches the changed element, then
reapplies the closure identities over the stored contributions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .census import CensusSums, _frequencies_from_sums
from .errors import ConsistencyError
from .frequencies import GraphletFrequencies
from .graph import Graph, induced_subgraph


@dataclass(frozen=True)
class SelectionOp:
    """One selection mutation. action is add_vertex / remove_vertex /
    add_edge / remove_edge; vertex ops use ``vertex``, edge ops ``u``/``v``
    (dense base ids). Edge adds re-admit a previously removed base edge."""

    action: str
    vertex: int | None = None
    u: int | None = None
    v: int | None = None

    VERTEX_ACTIONS = ("add_vertex", "remove_vertex")
    EDGE_ACTIONS = ("add_edge", "remove_edge")


class SelectionState:
    """Single-writer selection over an immutable base graph."""

    def __init__(self, base: Graph, active: Iterable[int] = (),
                 excluded_edges: Iterable[int] = ()):
        self.base = base
        self.active: set[int] = set()
        self.excluded: set[int] = set(int(e) for e in excluded_edges)
        for e in self.excluded:
            if not 0 <= e < base.m:
                raise ValueError(f"excluded edge index {e} out of range")
        # Per selected edge: (tri, star_u, star_v, clique4, cycle4) within
        # the current selection.
        self._edge_local: dict[int, tuple[int, int, int, int, int]] = {}
        self._marks = bytearray(base.n)
        self._freqs: GraphletFrequencies | None = None
        for v in active:
            self.apply_one(SelectionOp("add_vertex", vertex=int(v)))
        if self._freqs is None:
            self._freqs = self._close()

    # -- queries -------------------------------------------------------------

    def frequencies(self) -> GraphletFrequencies:
        if self._freqs is None:
            self._freqs = self._close()
        return self._freqs

    def is_selected_edge(self, eid: int) -> bool:
        u, v = self.base.edges[eid]
        return (int(u) in self.active and int(v) in self.active
                and eid not in self.excluded)

    def induced(self) -> Graph:
        return induced_subgraph(self.base, self.active, self.excluded)

    # -- mutation ------------------------------------------------------------

    def apply(self, ops: Iterable[SelectionOp]) -> GraphletFrequencies:
        for op in ops:
            self.apply_one(op)
        return self.frequencies()

    def apply_one(self, op: SelectionOp) -> GraphletFrequencies:
        base = self.base
        if op.action in SelectionOp.VERTEX_ACTIONS:
            x = op.vertex
            if x is None or not 0 <= x < base.n:
                raise ValueError(f"vertex {x} not in base graph")
            if op.action == "add_vertex":
                if x in self.active:
                    return self.frequencies()  # idempotent
                self.active.add(x)
            else:
                if x not in self.active:
                    return self.frequencies()
                self.active.discard(x)
            region = {x, *base.neighbors(x).tolist()}
        elif op.action in SelectionOp.EDGE_ACTIONS:
            if op.u is None or op.v is None:
                raise ValueError("edge op requires u and v")
            eid = base.edge_id(op.u, op.v)
            if eid is None:
                raise ValueError(f"({op.u}, {op.v}) is not a base-graph edge")
            if op.action == "add_edge":
                if op.u not in self.active or op.v not in self.active:
                    raise ValueError(
                        "add_edge endpoints must be in the active selection")
                if eid not in self.excluded:
                    return self.frequencies()
                self.excluded.discard(eid)
            else:
                if eid in self.excluded:
                    return self.frequencies()
                self.excluded.add(eid)
            region = {op.u, op.v,
                      *base.neighbors(op.u).tolist(),
                      *base.neighbors(op.v).tolist()}
        else:
            raise ValueError(f"unknown selection action {op.action!r}")

        self._refresh_region(region)
        self._freqs = self._close()
        return self._freqs

    # -- internals -----------------------------------------------------------

    def _selected_neighbors(self, x: int) -> list[int]:
        base = self.base
        lo, hi = int(base.indptr[x]), int(base.indptr[x + 1])
        active = self.active
        excluded = self.excluded
        indices = base.indices
        slots = base.edge_slot_ids
        if excluded:
            return [int(indices[p]) for p in range(lo, hi)
                    if int(indices[p]) in active and int(slots[p]) not in excluded]
        return [int(w) for w in indices[lo:hi] if int(w) in active]

    def _refresh_region(self, region: set[int]) -> None:
        """Drop stale contributions and recompute the local counts of every
        selected edge with an endpoint in the changed region."""
        base = self.base
        stale = [eid for eid in self._edge_local if not self.is_selected_edge(eid)]
        for eid in stale:
            del self._edge_local[eid]
        touched: set[int] = set()
        for x in region:
            if x not in self.active:
                continue
            lo, hi = int(base.indptr[x]), int(base.indptr[x + 1])
            for p in range(lo, hi):
                eid = int(base.edge_slot_ids[p])
                if self.is_selected_edge(eid):
                    touched.add(eid)
        for eid in touched:
            u, v = (int(a) for a in base.edges[eid])
            self._edge_local[eid] = self._local_tuple(u, v)

    def _local_tuple(self, u: int, v: int) -> tuple[int, int, int, int, int]:
        """Per-edge census of (u, v) inside the selected subgraph; mirrors the
        base census kernel over selection-filtered adjacency."""
        marks = self._marks
        au = self._selected_neighbors(u)
        av = self._selected_neighbors(v)
        for w in au:
            marks[w] = 1
        marks[v] = 0
        tri: list[int] = []
        sv = 0
        for w in av:
            if marks[w] == 1:
                marks[w] = 2
                tri.append(w)
            elif w != u:
                marks[w] = 3
                sv += 1
        star_u = [w for w in au if marks[w] == 1]

        cl = 0
        for w in tri:
            for r in self._selected_neighbors(w):
                if marks[r] == 2:
                    cl += 1
            marks[w] = 0
        cy = 0
        for w in star_u:
            for r in self._selected_neighbors(w):
                if marks[r] == 3:
                    cy += 1
        for w in au:
            marks[w] = 0
        for w in av:
            marks[w] = 0
        return len(tri), len(star_u), sv, cl, cy

    def _close(self) -> GraphletFrequencies:
        n_sel = len(self.active)
        m_sel = len(self._edge_local)
        sums = CensusSums()
        for t, su, sv, cl, cy in self._edge_local.values():
            i3 = n_sel - 2 - t - su - sv
            sums.tri += t
            sums.star += su + sv
            sums.indep3 += i3
            sums.clique4 += cl
            sums.cycle4 += cy
            sums.n_tt += t * (t - 1) // 2
            sums.n_susv += su * sv
            sums.n_ts += t * (su + sv)
            sums.n_ss_same += su * (su - 1) // 2 + sv * (sv - 1) // 2
            sums.n_ti += t * i3
            sums.n_si += (su + sv) * i3
            sums.n_ii += i3 * (i3 - 1) // 2
            sums.outside += m_sel + 1 - (t + su + 1) - (t + sv + 1)
        return _frequencies_from_sums(sums, n_sel, m_sel)

    def audit(self) -> GraphletFrequencies:
        """Full recount of the induced selection; raises ConsistencyError if
        the cached counts drifted (which would be a bug, not user error)."""
        from .census import graphlet_census

        fresh = graphlet_census(self.induced())
        cached = self.frequencies()
        if fresh != cached:
            raise ConsistencyError(
                "selection cache mismatch: cached counts differ from fresh census")
        return fresh


def selection_census(state: SelectionState, ops: Iterable[SelectionOp]) -> GraphletFrequencies:
    """Apply add/remove operations and return the updated counts of the
    induced active subgraph (equal to a full census of the selection)."""
    return state.apply(ops)
