"""Shared fixtures, hypothesis strategies, and brute-force helpers."""

from __future__ import annotations

from itertools import combinations
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from graphlets import Graph

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

# Datasets referenced by the published-counts criteria; fetched by
# scripts/fetch_datasets.py (requires network access).
DATASET_NAMES = ("ia-enron-only", "bio-diseasome", "bio-celegans")


def dataset_graph(name: str) -> Graph:
    for suffix in (".mtx", ".edges", ".txt"):
        path = DATA_DIR / f"{name}{suffix}"
        if path.exists():
            return Graph.from_file(path)
    pytest.skip(
        f"dataset {name} not present under {DATA_DIR}; run "
        "`python scripts/fetch_datasets.py` (needs network access) to "
        "download it from networkrepository.com"
    )


@st.composite
def small_graphs(draw, min_n=2, max_n=10):
    """Arbitrary simple graphs: pick n, then an arbitrary subset of the
    C(n, 2) possible edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    edges = np.asarray(chosen, dtype=np.int64).reshape(-1, 2)
    return Graph(n, edges)


def classify_pair(g: Graph, u: int, v: int, w: int) -> str:
    """Property of vertex w relative to edge (u, v): T, Su, Sv, or I."""
    in_u = g.has_edge(u, w)
    in_v = g.has_edge(v, w)
    if in_u and in_v:
        return "T"
    if in_u:
        return "Su"
    if in_v:
        return "Sv"
    return "I"


def micro_oracle(g: Graph, u: int, v: int) -> dict[str, int]:
    """Classify every pair {w, r} of non-endpoint vertices by the properties
    of w and r and by whether (w, r) is an edge. Ground truth for the
    per-edge micro census."""
    out = dict(tt1=0, tt0=0, susv1=0, susv0=0, ts1=0, ts0=0, ss1=0, ss0=0,
               ti1=0, ti0=0, si1=0, si0=0, ii1=0, ii0=0)
    rest = [w for w in range(g.n) if w not in (u, v)]
    for w, r in combinations(rest, 2):
        cw, cr = classify_pair(g, u, v, w), classify_pair(g, u, v, r)
        connected = "1" if g.has_edge(w, r) else "0"
        pair = {cw, cr}
        if pair == {"T"}:
            key = "tt"
        elif pair == {"Su", "Sv"}:
            key = "susv"
        elif "T" in pair and ("Su" in pair or "Sv" in pair):
            key = "ts"
        elif pair in ({"Su"}, {"Sv"}):
            key = "ss"
        elif "T" in pair and "I" in pair:
            key = "ti"
        elif ("Su" in pair or "Sv" in pair) and "I" in pair:
            key = "si"
        else:
            key = "ii"
        out[key + connected] += 1
    return out


def acceptance_report(name: str, ok: bool, extra: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"ACCEPTANCE {name}: {status}"
    if extra:
        line += f" ({extra})"
    print(line)
