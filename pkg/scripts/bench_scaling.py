#!/usr/bin/env python3
"""Runtime-vs-size and strong-scaling benchmarks on synthetic graphs.

Two experiments:
  sizes   - census wall time across doubling edge counts (expects a
            near-linear log-log slope on sparse graphs)
  speedup - census wall time per worker count on one large graph,
            median of N repeats, relative to the single-worker run

Examples:
  python scripts/bench_scaling.py sizes --max-edges 640000
  python scripts/bench_scaling.py speedup --edges 1000000 --workers 1,2,4,8
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import numpy as np  # noqa: E402

from graphlets import ParallelConfig, graphlet_census, measure_speedup  # noqa: E402
from graphlets.generate import random_graph_avg_degree  # noqa: E402


def bench_sizes(args) -> dict:
    sizes = []
    m = args.min_edges
    while m <= args.max_edges:
        sizes.append(m)
        m *= 2
    rows = []
    for target_m in sizes:
        n = max(8, int(round(2 * target_m / args.avg_degree)))
        g = random_graph_avg_degree(n, args.avg_degree, seed=args.seed)
        g.adj_lists()
        g.edge_columns()
        t0 = time.perf_counter()
        graphlet_census(g, ParallelConfig(workers=args.workers_for_sizes))
        seconds = time.perf_counter() - t0
        rows.append({"n": g.n, "m": g.m, "seconds": round(seconds, 4)})
        print(f"m={g.m:>9}  n={g.n:>8}  {seconds:8.3f}s")
    xs = np.log([r["m"] for r in rows])
    ys = np.log([max(r["seconds"], 1e-9) for r in rows])
    slope = float(np.polyfit(xs, ys, 1)[0]) if len(rows) > 1 else math.nan
    print(f"log-log slope (1.0 = linear in edges): {slope:.3f}")
    return {"experiment": "sizes", "avg_degree": args.avg_degree,
            "rows": rows, "loglog_slope": round(slope, 4)}


def bench_speedup(args) -> dict:
    n = max(8, int(round(2 * args.edges / args.avg_degree)))
    print(f"building synthetic graph: ~{args.edges} edges, avg degree {args.avg_degree}")
    g = random_graph_avg_degree(n, args.avg_degree, seed=args.seed)
    print(f"n={g.n} m={g.m}")
    workers = [int(tok) for tok in args.workers.split(",")]
    rows = measure_speedup(g, workers, repeats=args.repeats)
    print(f"{'workers':>8} {'seconds':>10} {'speedup':>9}")
    for r in rows:
        print(f"{r.workers:>8} {r.seconds:>10.3f} {r.speedup:>9.2f}")
    return {"experiment": "speedup", "n": g.n, "m": g.m,
            "repeats": args.repeats,
            "rows": [{"workers": r.workers, "seconds": round(r.seconds, 4),
                      "speedup": round(r.speedup, 3)} for r in rows]}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    sub = parser.add_subparsers(dest="experiment", required=True)

    p_sizes = sub.add_parser("sizes")
    p_sizes.add_argument("--min-edges", type=int, default=10_000)
    p_sizes.add_argument("--max-edges", type=int, default=320_000)
    p_sizes.add_argument("--avg-degree", type=float, default=8.0)
    p_sizes.add_argument("--workers-for-sizes", type=int, default=1)
    p_sizes.add_argument("--seed", type=int, default=0)
    p_sizes.add_argument("--json", type=str, default=None)
    p_sizes.set_defaults(run=bench_sizes)

    p_speed = sub.add_parser("speedup")
    p_speed.add_argument("--edges", type=int, default=1_000_000)
    p_speed.add_argument("--avg-degree", type=float, default=8.0)
    p_speed.add_argument("--workers", type=str, default="1,2,4,8")
    p_speed.add_argument("--repeats", type=int, default=5)
    p_speed.add_argument("--seed", type=int, default=0)
    p_speed.add_argument("--json", type=str, default=None)
    p_speed.set_defaults(run=bench_speedup)

    args = parser.parse_args()
    result = args.run(args)
    if args.json:
        Path(args.json).write_text(json.dumps(result, indent=2))
        print(f"wrote {args.json}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
