"""Exact graphlet census via per-edge neighborhood classification.

For every edge (u, v) the kernel splits the neighborhood into the common
triangle set, the two exclusive star sets, and the independent remainder,
then enumerates only the edges among those sets (4-cliques, 4-cycles, and the
same-side/cross counts). Every other 4-node class follows in constant time
from the closure identities applied to the merged per-edge sums.

Marker protocol used by all kernels: 1 = exclusive neighbor of u, 2 = common
neighbor, 3 = exclusive neighbor of v, 0 = everything else. After an edge job
completes, every touched mark is cleared explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import ConsistencyError
from .frequencies import GraphletFrequencies
from .graph import EdgeRef, Graph
from .parallel import ParallelConfig, run_batches
from .serialize import write_csv


# ---------------------------------------------------------------------------
# Per-edge records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EdgeLocalCounts:
    """Sizes of the neighborhood classes of one edge plus its two enumerated
    quad counts. ``indep3`` is the number of vertices independent of the edge,
    so tri + star_u + star_v + 2 + indep3 == n always."""

    tri: int
    star_u: int
    star_v: int
    clique4: int
    cycle4: int
    indep3: int


@dataclass(frozen=True)
class UnrestrictedCounts:
    """Pair counts over the seven classifications of vertex pairs {w, r}
    relative to an edge. The seven class fields always sum to C(n-2, 2).

    ``n_ii_1`` is the count of edges fully outside the edge's egonet when the
    enumerated terms are supplied; otherwise it holds the raw
    m - |N(u)\\{v}| - |N(v)\\{u}| - 1 bound (edges avoiding both endpoints),
    which is the form the global closure consumes.
    """

    n_tt: int
    n_susv: int
    n_ts: int
    n_ss_same: int
    n_ti: int
    n_si: int
    n_ii: int
    n_ii_1: int

    def partition_total(self) -> int:
        return (self.n_tt + self.n_susv + self.n_ts + self.n_ss_same
                + self.n_ti + self.n_si + self.n_ii)


@dataclass(frozen=True)
class MicroCounts:
    """Exact per-edge counts of every 4-node pattern in every role this edge
    can play. The ``*_1`` counts are enumerated (pair connected), the ``*_0``
    ones follow by subtraction from the unrestricted pair counts."""

    edge: EdgeRef
    local: EdgeLocalCounts
    tt1: int   # 4-cliques through the edge
    tt0: int   # chordal cycles with this edge as the chord
    susv1: int  # 4-cycles through the edge
    susv0: int  # 4-paths with this edge in the middle
    ts1: int   # chordal cycles with this edge on the cycle (non-chord)
    ts0: int   # tailed triangles, edge shared by triangle and star
    ss1: int   # tailed triangles with this edge as the tail
    ss0: int   # 3-stars containing the edge
    ti1: int   # tailed triangles, edge in the triangle, tail detached
    ti0: int   # triangle + isolated vertex
    si1: int   # 4-paths with this edge at an end
    si0: int   # 2-star + isolated vertex
    ii1: int   # edge + disjoint edge
    ii0: int   # edge + two isolated vertices


# Raw kernel output order (micro_table columns).
RAW_MICRO_FIELDS = ("tri", "star_u", "star_v", "clique4", "cycle4",
                    "uu1", "vv1", "ts1", "ti1", "si1")


# ---------------------------------------------------------------------------
# Edge kernels
# ---------------------------------------------------------------------------

def edge_neighborhood_census(g: Graph, e: EdgeRef, marks: bytearray):
    """Split N(u) and N(v) into (Tri_e, Star_u, Star_v), encoding membership
    into ``marks`` (1 = Star_u, 2 = Tri_e, 3 = Star_v). ``marks`` must be all
    zero on entry; callers own clearing (see clear_marks)."""
    adj = g.adj_lists()
    u, v = e.u, e.v
    for w in adj[u]:
        marks[w] = 1
    marks[v] = 0
    tri: list[int] = []
    star_v: list[int] = []
    for w in adj[v]:
        if marks[w] == 1:
            marks[w] = 2
            tri.append(w)
        elif w != u:
            marks[w] = 3
            star_v.append(w)
    star_u = [w for w in adj[u] if marks[w] == 1]
    return tri, star_u, star_v


def clique_count(g: Graph, marks: bytearray, tri: list[int]) -> int:
    """Number of edges with both endpoints in Tri_e (4-cliques through the
    edge). Unmarks each Tri_e member after scanning it, so every unordered
    pair is counted exactly once; Tri_e marks are gone afterwards."""
    adj = g.adj_lists()
    count = 0
    for w in tri:
        for r in adj[w]:
            if marks[r] == 2:
                count += 1
        marks[w] = 0
    return count


def cycle_count(g: Graph, marks: bytearray, star_u: list[int]) -> int:
    """Number of edges between Star_u and Star_v (4-cycles through the edge).
    Star_u marks are cleared as a side effect."""
    adj = g.adj_lists()
    count = 0
    for w in star_u:
        for r in adj[w]:
            if marks[r] == 3:
                count += 1
        marks[w] = 0
    return count


def same_side_star_edges(g: Graph, marks: bytearray, star_u: list[int],
                         star_v: list[int]) -> tuple[int, int, int]:
    """Edges within Star_u, within Star_v, and between Tri_e and the stars.
    Requires the full 1/2/3 marking (call before clique_count / cycle_count);
    leaves marks untouched. Same-side pairs are deduplicated by endpoint
    order; each Tri-Star edge is seen exactly once from its star endpoint."""
    adj = g.adj_lists()
    count_uu = count_vv = count_ts = 0
    for w in star_u:
        for r in adj[w]:
            mr = marks[r]
            if mr == 1:
                if w < r:
                    count_uu += 1
            elif mr == 2:
                count_ts += 1
    for w in star_v:
        for r in adj[w]:
            mr = marks[r]
            if mr == 3:
                if w < r:
                    count_vv += 1
            elif mr == 2:
                count_ts += 1
    return count_uu, count_vv, count_ts


def clear_marks(g: Graph, marks: bytearray, e: EdgeRef) -> None:
    """Explicitly clear every mark an edge job can have touched: the union of
    both adjacency lists. Safe regardless of which kernels ran."""
    adj = g.adj_lists()
    for w in adj[e.u]:
        marks[w] = 0
    for w in adj[e.v]:
        marks[w] = 0


def _micro_edge(adj: list[list[int]], marks: bytearray, u: int, v: int):
    """Fused one-sweep kernel computing all enumerated per-edge counts.

    Unlike the composed kernels above it never clears marks mid-scan;
    once-counting uses endpoint order for same-class pairs and a fixed
    scanning side for cross-class pairs. Exterior (independent-endpoint)
    edge counts fall out of degree bookkeeping over the egonet members.
    """
    au = adj[u]
    av = adj[v]
    for w in au:
        marks[w] = 1
    marks[v] = 0
    tri: list[int] = []
    star_v: list[int] = []
    for w in av:
        if marks[w] == 1:
            marks[w] = 2
            tri.append(w)
        elif w != u:
            marks[w] = 3
            star_v.append(w)
    star_u = [w for w in au if marks[w] == 1]
    t, su, sv = len(tri), len(star_u), len(star_v)

    cl = ts = tdeg = 0
    for w in tri:
        aw = adj[w]
        tdeg += len(aw)
        for r in aw:
            mr = marks[r]
            if mr == 2:
                if w < r:
                    cl += 1
            elif mr:
                ts += 1

    cy = uu = sdeg = 0
    for w in star_u:
        aw = adj[w]
        sdeg += len(aw)
        for r in aw:
            mr = marks[r]
            if mr == 3:
                cy += 1
            elif mr == 1 and w < r:
                uu += 1

    vv = 0
    for w in star_v:
        aw = adj[w]
        sdeg += len(aw)
        for r in aw:
            if marks[r] == 3 and w < r:
                vv += 1

    # Every triangle-member edge goes to {u,v}, Tri, Star, or outside.
    ti = tdeg - 2 * t - 2 * cl - ts
    # Every star-member edge goes to its endpoint, Tri, same star, the
    # opposite star, or outside.
    si = sdeg - su - sv - ts - 2 * (uu + vv) - 2 * cy

    for w in au:
        marks[w] = 0
    for w in av:
        marks[w] = 0
    return t, su, sv, cl, cy, uu, vv, ts, ti, si


def _count_edge(adj: list[list[int]], marks: bytearray, u: int, v: int):
    """Lean kernel for the global census: only (tri, star_u, star_v,
    clique4, cycle4) are needed, so the star_v sweep is skipped entirely.

    The endpoints are oriented so u is the lower-degree side: the star sizes
    then satisfy |Star_u| <= |Star_v| (the triangle term is common to both
    degrees), which keeps the cycle sweep on the cheap side of hub edges.
    Every accumulated quantity is orientation-symmetric.
    """
    if len(adj[u]) > len(adj[v]):
        u, v = v, u
    au = adj[u]
    av = adj[v]
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
        for r in adj[w]:
            if marks[r] == 2:
                cl += 1
        marks[w] = 0

    cy = 0
    for w in star_u:
        for r in adj[w]:
            if marks[r] == 3:
                cy += 1

    for w in au:
        marks[w] = 0
    for w in av:
        marks[w] = 0
    return len(tri), len(star_u), sv, cl, cy


# ---------------------------------------------------------------------------
# Unrestricted counts and closures
# ---------------------------------------------------------------------------

def unrestricted_counts(local: EdgeLocalCounts, n: int, m: int,
                        micro: MicroCounts | None = None) -> UnrestrictedCounts:
    """Constant-time pair counts over the seven {w, r} classifications.

    With ``micro`` supplied, ``n_ii_1`` is the exact number of edges fully
    outside the egonet (raw bound minus the enumerated within-egonet edges);
    otherwise it is the raw bound itself.
    """
    t, su, sv, i3 = local.tri, local.star_u, local.star_v, local.indep3
    deg_u = t + su + 1
    deg_v = t + sv + 1
    raw_outside = m - (deg_u - 1) - (deg_v - 1) - 1
    if micro is not None:
        n_ii_1 = (raw_outside
                  - (micro.tt1 + micro.ts1 + micro.ti1)
                  - (micro.ss1 + micro.susv1 + micro.si1))
    else:
        n_ii_1 = raw_outside
    counts = UnrestrictedCounts(
        n_tt=comb(t, 2),
        n_susv=su * sv,
        n_ts=t * (su + sv),
        n_ss_same=comb(su, 2) + comb(sv, 2),
        n_ti=t * i3,
        n_si=(su + sv) * i3,
        n_ii=comb(i3, 2),
        n_ii_1=n_ii_1,
    )
    if counts.partition_total() != comb(n - 2, 2):
        raise ConsistencyError(
            f"pair partition mismatch: {counts.partition_total()} != C({n}-2,2)")
    return counts


def _exact_div(value: int, divisor: int, what: str) -> int:
    q, r = divmod(value, divisor)
    if r:
        raise ConsistencyError(f"{what}: {value} not divisible by {divisor}")
    if q < 0:
        raise ConsistencyError(f"{what}: negative count {q}")
    return q


def _nonneg(value: int, what: str) -> int:
    if value < 0:
        raise ConsistencyError(f"{what}: negative count {value}")
    return value


@dataclass
class CensusSums:
    """Wide-integer accumulators merged across all edge jobs."""

    tri: int = 0          # sum of |Tri_e|
    star: int = 0         # sum of |Star_u| + |Star_v|
    indep3: int = 0       # sum of vertices independent of each edge
    clique4: int = 0      # sum of per-edge 4-clique counts
    cycle4: int = 0       # sum of per-edge 4-cycle counts
    n_tt: int = 0
    n_susv: int = 0
    n_ts: int = 0
    n_ss_same: int = 0
    n_ti: int = 0
    n_si: int = 0
    n_ii: int = 0
    outside: int = 0      # sum of m - (deg(u)-1) - (deg(v)-1) - 1

    FIELDS = ("tri", "star", "indep3", "clique4", "cycle4", "n_tt", "n_susv",
              "n_ts", "n_ss_same", "n_ti", "n_si", "n_ii", "outside")

    def as_tuple(self):
        return tuple(getattr(self, f) for f in self.FIELDS)

    @staticmethod
    def from_tuple(values) -> "CensusSums":
        return CensusSums(**dict(zip(CensusSums.FIELDS, values)))


def close_triads(tri_total: int, star_total: int, indep3_total: int, n: int) -> dict[str, int]:
    """Merge the 3-node per-edge sums into the four global counts. Each
    triangle was seen from its 3 edges and each 2-star from its 2, so the
    divisions must be exact; anything else is a census bug."""
    f31 = _exact_div(tri_total, 3, "triangle closure")
    f32 = _exact_div(star_total, 2, "2-star closure")
    f33 = _nonneg(indep3_total, "3-node-1-edge closure")
    f34 = _nonneg(comb(n, 3) - f31 - f32 - f33, "3-node-independent closure")
    return {"g3_1": f31, "g3_2": f32, "g3_3": f33, "g3_4": f34}


def close_quads(sums: CensusSums, n: int, m: int) -> dict[str, int]:
    """Apply the closure identities in dependency order to obtain all eleven
    4-node counts from the enumerated and unrestricted sums."""
    f41 = _exact_div(sums.clique4, 6, "4-clique closure")
    f42 = _nonneg(sums.n_tt - 6 * f41, "chordal-cycle closure")
    f44 = _exact_div(sums.cycle4, 4, "4-cycle closure")
    f46 = _nonneg(sums.n_susv - 4 * f44, "4-path closure")
    f43 = _exact_div(sums.n_ts - 4 * f42, 2, "tailed-triangle closure")
    f45 = _exact_div(sums.n_ss_same - f43, 3, "3-star closure")
    f47 = _exact_div(sums.n_ti - f43, 3, "triangle-plus-isolated closure")
    f48 = _exact_div(sums.n_si - 2 * f46, 2, "2-star-plus-isolated closure")
    f49 = _exact_div(
        sums.outside - 6 * f41 - 4 * f42 - 2 * f43 - 4 * f44 - 2 * f46,
        2, "two-edge closure")
    f410 = _nonneg(sums.n_ii - 2 * f49, "one-edge closure")
    f411 = _nonneg(
        comb(n, 4) - (f41 + f42 + f43 + f44 + f45 + f46 + f47 + f48 + f49 + f410),
        "independent closure")
    return {
        "g4_1": f41, "g4_2": f42, "g4_3": f43, "g4_4": f44, "g4_5": f45,
        "g4_6": f46, "g4_7": f47, "g4_8": f48, "g4_9": f49, "g4_10": f410,
        "g4_11": f411,
    }


def _frequencies_from_sums(sums: CensusSums, n: int, m: int) -> GraphletFrequencies:
    counts = {"g2_1": m, "g2_2": comb(n, 2) - m}
    counts.update(close_triads(sums.tri, sums.star, sums.indep3, n))
    counts.update(close_quads(sums, n, m))
    freqs = GraphletFrequencies(counts=counts, n=n, m=m)
    freqs.validate()
    return freqs


# ---------------------------------------------------------------------------
# Whole-graph drivers
# ---------------------------------------------------------------------------

def _census_batch(g: Graph, order, lo: int, hi: int, marks: bytearray, acc: list) -> int:
    adj = g.adj_lists()
    eu, ev = g.edge_columns()
    n = g.n
    m = g.m
    s_tri = s_star = s_i3 = s_cl = s_cy = 0
    s_tt = s_susv = s_ts = s_ss = s_ti = s_si = s_ii = s_out = 0
    for j in range(lo, hi):
        idx = order[j]
        u = eu[idx]
        v = ev[idx]
        t, su, sv, cl, cy = _count_edge(adj, marks, u, v)
        i3 = n - 2 - t - su - sv
        s_tri += t
        s_star += su + sv
        s_i3 += i3
        s_cl += cl
        s_cy += cy
        s_tt += t * (t - 1) // 2
        s_susv += su * sv
        s_ts += t * (su + sv)
        s_ss += su * (su - 1) // 2 + sv * (sv - 1) // 2
        s_ti += t * i3
        s_si += (su + sv) * i3
        s_ii += i3 * (i3 - 1) // 2
        s_out += m + 1 - (t + su + 1) - (t + sv + 1)
    for k, val in enumerate((s_tri, s_star, s_i3, s_cl, s_cy, s_tt, s_susv,
                             s_ts, s_ss, s_ti, s_si, s_ii, s_out)):
        acc[k] += val
    return hi - lo


def _micro_batch(g: Graph, order, lo: int, hi: int, marks: bytearray, acc: list) -> int:
    adj = g.adj_lists()
    eu, ev = g.edge_columns()
    for j in range(lo, hi):
        idx = order[j]
        acc.append((idx,) + _micro_edge(adj, marks, eu[idx], ev[idx]))
    return hi - lo


def graphlet_census(g: Graph, config: ParallelConfig | None = None) -> GraphletFrequencies:
    """All 17 global graphlet counts. Results are identical for any worker
    count, batch size, or edge ordering; the reduction is pure integer
    addition."""
    config = config or ParallelConfig(workers=1)
    acc, seen = run_batches(
        g, config, _census_batch,
        make_scratch=lambda graph: bytearray(graph.n),
        make_acc=lambda: [0] * 13,
        merge=_merge_int_lists,
    )
    if seen != g.m:
        raise ConsistencyError(f"processed {seen} edges, expected {g.m}")
    return _frequencies_from_sums(CensusSums.from_tuple(acc), g.n, g.m)


def _merge_int_lists(a: list, b: list) -> list:
    return [x + y for x, y in zip(a, b)]


def _merge_row_lists(a: list, b: list) -> list:
    a.extend(b)
    return a


def micro_table(g: Graph, config: ParallelConfig | None = None) -> np.ndarray:
    """Per-edge enumerated counts for every edge, as an (m, 10) int64 array in
    canonical edge order with columns RAW_MICRO_FIELDS."""
    config = config or ParallelConfig(workers=1)
    rows, seen = run_batches(
        g, config, _micro_batch,
        make_scratch=lambda graph: bytearray(graph.n),
        make_acc=list,
        merge=_merge_row_lists,
    )
    if seen != g.m:
        raise ConsistencyError(f"processed {seen} edges, expected {g.m}")
    table = np.zeros((g.m, len(RAW_MICRO_FIELDS)), dtype=np.int64)
    for row in rows:
        table[row[0]] = row[1:]
    return table


def frequencies_from_micro(g: Graph, table: np.ndarray) -> GraphletFrequencies:
    """Rebuild the global counts from a micro table; dual route to
    graphlet_census used for auditing."""
    n, m = g.n, g.m
    cols = {name: table[:, i].tolist() for i, name in enumerate(RAW_MICRO_FIELDS)}
    t_l, su_l, sv_l = cols["tri"], cols["star_u"], cols["star_v"]
    sums = CensusSums()
    for i in range(m):
        t, su, sv = t_l[i], su_l[i], sv_l[i]
        i3 = n - 2 - t - su - sv
        sums.tri += t
        sums.star += su + sv
        sums.indep3 += i3
        sums.n_tt += t * (t - 1) // 2
        sums.n_susv += su * sv
        sums.n_ts += t * (su + sv)
        sums.n_ss_same += su * (su - 1) // 2 + sv * (sv - 1) // 2
        sums.n_ti += t * i3
        sums.n_si += (su + sv) * i3
        sums.n_ii += i3 * (i3 - 1) // 2
        sums.outside += m + 1 - (t + su + 1) - (t + sv + 1)
    sums.clique4 = sum(cols["clique4"])
    sums.cycle4 = sum(cols["cycle4"])
    return _frequencies_from_sums(sums, n, m)


# ---------------------------------------------------------------------------
# Per-edge micro census (role counts)
# ---------------------------------------------------------------------------

def micro_census(g: Graph, e: EdgeRef, marks: bytearray | None = None) -> MicroCounts:
    """Exact counts of every 4-node pattern in every role of one edge,
    composed from the standalone kernels plus degree bookkeeping for the
    egonet-exterior terms."""
    if marks is None:
        marks = bytearray(g.n)
    tri, star_u, star_v = edge_neighborhood_census(g, e, marks)
    uu1, vv1, ts1 = same_side_star_edges(g, marks, star_u, star_v)
    cl = clique_count(g, marks, tri)       # clears Tri marks
    cy = cycle_count(g, marks, star_u)     # clears Star_u marks
    clear_marks(g, marks, e)

    degs = g.degrees
    t, su, sv = len(tri), len(star_u), len(star_v)
    i3 = g.n - 2 - t - su - sv
    tdeg = int(degs[tri].sum()) if tri else 0
    sdeg = int(degs[star_u].sum()) + int(degs[star_v].sum()) if (star_u or star_v) else 0
    ti1 = tdeg - 2 * t - 2 * cl - ts1
    si1 = sdeg - su - sv - ts1 - 2 * (uu1 + vv1) - 2 * cy

    return _derive_micro(e, g.n, g.m, (t, su, sv, cl, cy, uu1, vv1, ts1, ti1, si1))


def _derive_micro(e: EdgeRef, n: int, m: int, raw) -> MicroCounts:
    t, su, sv, cl, cy, uu1, vv1, ts1, ti1, si1 = (int(x) for x in raw)
    i3 = n - 2 - t - su - sv
    local = EdgeLocalCounts(tri=t, star_u=su, star_v=sv, clique4=cl,
                            cycle4=cy, indep3=i3)
    ss1 = uu1 + vv1
    raw_outside = m + 1 - (t + su + 1) - (t + sv + 1)
    ii1 = raw_outside - (cl + ts1 + ti1) - (ss1 + cy + si1)
    micro = MicroCounts(
        edge=e, local=local,
        tt1=cl, tt0=comb(t, 2) - cl,
        susv1=cy, susv0=su * sv - cy,
        ts1=ts1, ts0=t * (su + sv) - ts1,
        ss1=ss1, ss0=comb(su, 2) + comb(sv, 2) - ss1,
        ti1=ti1, ti0=t * i3 - ti1,
        si1=si1, si0=(su + sv) * i3 - si1,
        ii1=ii1, ii0=comb(i3, 2) - ii1,
    )
    for name in ("tt0", "susv0", "ts0", "ss0", "ti0", "ti1", "si0", "si1",
                 "ii0", "ii1"):
        if getattr(micro, name) < 0:
            raise ConsistencyError(f"negative micro count {name} on edge {e}")
    return micro


def micro_counts_from_table(g: Graph, table: np.ndarray, index: int) -> MicroCounts:
    return _derive_micro(g.edge(index), g.n, g.m, table[index])


MICRO_CSV_HEADER = [
    "src", "dst", "tri", "star_u", "star_v", "clique4", "cycle4",
    "chordal_chord", "cycle_mid_path", "chordal_cycle_edge", "tailed_tail",
    "star3", "tailed_detached", "tri_isolated", "path_end", "star_isolated",
    "pair_edge", "lone_edge", "indep3",
]


def micro_csv(g: Graph, table: np.ndarray) -> str:
    """Per-edge micro output with original (pre-remap) vertex ids."""
    orig = g.original_edges()
    rows = []
    for i in range(g.m):
        mc = micro_counts_from_table(g, table, i)
        rows.append([
            int(orig[i, 0]), int(orig[i, 1]),
            mc.local.tri, mc.local.star_u, mc.local.star_v,
            mc.tt1, mc.susv1, mc.tt0, mc.susv0, mc.ts1, mc.ss1, mc.ss0,
            mc.ti1, mc.ti0, mc.si1, mc.si0, mc.ii1, mc.ii0, mc.local.indep3,
        ])
    return write_csv(MICRO_CSV_HEADER, rows)
