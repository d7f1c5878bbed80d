"""Brute-force ground truth for the census: exhaustive enumeration of all 3-
and 4-vertex subsets with invariant-based classification.

Only meant for desk-scale verification; cost is C(n, 4).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .classes import CLASS_IDS, complement_class
from .errors import ClassificationError, GraphSizeError
from .frequencies import GraphletFrequencies
from .graph import Graph, complement


@dataclass(frozen=True)
class OracleLimits:
    max_n: int = 30
    max_n_triples: int = 200


def classify_induced_3(edge_count: int) -> str:
    if edge_count == 3:
        return "g3_1"
    if edge_count == 2:
        return "g3_2"
    if edge_count == 1:
        return "g3_3"
    if edge_count == 0:
        return "g3_4"
    raise ClassificationError(f"impossible 3-node edge count {edge_count}")


def classify_induced_4(edge_count: int, max_degree: int, triangle_count: int) -> str:
    """Classify a 4-vertex induced subgraph from three invariants. The triple
    (edge count, max degree within, triangle count within) separates all 11
    classes; impossible combinations raise."""
    e, d, t = edge_count, max_degree, triangle_count
    if e == 0:
        if d == 0 and t == 0:
            return "g4_11"
        raise ClassificationError(f"impossible invariants ({e}, {d}, {t})")
    if e == 1:
        if d == 1 and t == 0:
            return "g4_10"
        raise ClassificationError(f"impossible invariants ({e}, {d}, {t})")
    if e == 2:
        if t != 0:
            raise ClassificationError(f"impossible invariants ({e}, {d}, {t})")
        if d == 1:
            return "g4_9"
        if d == 2:
            return "g4_8"
        raise ClassificationError(f"impossible invariants ({e}, {d}, {t})")
    if e == 3:
        if t == 1 and d == 2:
            return "g4_7"
        if t == 0 and d == 3:
            return "g4_5"
        if t == 0 and d == 2:
            return "g4_6"
        raise ClassificationError(f"impossible invariants ({e}, {d}, {t})")
    if e == 4:
        if t == 0 and d == 2:
            return "g4_4"
        if t == 1 and d == 3:
            return "g4_3"
        raise ClassificationError(f"impossible invariants ({e}, {d}, {t})")
    if e == 5:
        if t == 2 and d == 3:
            return "g4_2"
        raise ClassificationError(f"impossible invariants ({e}, {d}, {t})")
    if e == 6:
        if t == 4 and d == 3:
            return "g4_1"
        raise ClassificationError(f"impossible invariants ({e}, {d}, {t})")
    raise ClassificationError(f"impossible 4-node edge count {e}")


def oracle_census(g: Graph, limits: OracleLimits | None = None) -> GraphletFrequencies:
    """Exact counts of all 17 classes by exhaustive subset enumeration."""
    limits = limits or OracleLimits()
    if g.n > limits.max_n:
        raise GraphSizeError(f"oracle refuses n={g.n} > max_n={limits.max_n}")
    n = g.n
    counts = {cid: 0 for cid in CLASS_IDS}
    counts["g2_1"] = g.m
    counts["g2_2"] = comb(n, 2) - g.m

    # 0/1 adjacency lookup table; n is tiny here.
    a = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        a[u][v] = a[v][u] = 1

    for i, j, k in combinations(range(n), 3):
        e = a[i][j] + a[i][k] + a[j][k]
        counts[classify_induced_3(e)] += 1

    for i, j, k, l in combinations(range(n), 4):
        ij, ik, il = a[i][j], a[i][k], a[i][l]
        jk, jl, kl = a[j][k], a[j][l], a[k][l]
        e = ij + ik + il + jk + jl + kl
        deg = max(ij + ik + il, ij + jk + jl, ik + jk + kl, il + jl + kl)
        tri = (ij & ik & jk) + (ij & il & jl) + (ik & il & kl) + (jk & jl & kl)
        counts[classify_induced_4(e, deg, tri)] += 1

    return GraphletFrequencies(counts=counts, n=n, m=g.m)


def verify_complement_identity(g: Graph, counter=None) -> list[str]:
    """Check f(class, G) == f(complement-class, complement(G)) for all 17
    classes; returns the list of violating class ids (empty on success).
    ``counter`` defaults to the production census; pass ``oracle_census`` to
    cross-check with brute force."""
    if counter is None:
        from .census import graphlet_census
        counter = graphlet_census
    f_g = counter(g)
    f_gc = counter(complement(g))
    violations = []
    for cid in CLASS_IDS:
        if f_g.counts[cid] != f_gc.counts[complement_class(cid)]:
            violations.append(cid)
    return violations
