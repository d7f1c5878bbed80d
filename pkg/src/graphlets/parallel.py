"""Edge-job scheduling: dynamic contiguous batches claimed off a shared
cursor by worker processes, with a deterministic post-barrier reduction.

Workers are OS processes (fork) because the census kernels are pure Python;
each worker owns a private marker array and private accumulators, the graph
is shared read-only through fork semantics, and the only shared mutable
state is the job cursor, claimed under its lock. All merged quantities are
integers, so the reduction is exactly associative and results are identical
for every (workers, batch_size, ordering) combination.
"""

from __future__ import annotations

import itertools
import multiprocessing
import os
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import GraphletError
from .graph import Graph, order_edges_by_degree

MAX_BATCH_SIZE = 4096


class WorkerFailure(GraphletError):
    """An edge-job worker died; the whole census is aborted."""


@dataclass(frozen=True)
class ParallelConfig:
    """workers defaults to the machine's core count. batch_size is the number
    of edge jobs a worker claims at a time; dense graphs tend to do better
    with small batches, sparse ones are insensitive across 1..256."""

    workers: int | None = None
    batch_size: int = 64
    ordering: str = "input"

    def __post_init__(self):
        if self.workers is not None and self.workers < 1:
            raise ValueError("workers must be >= 1")
        if not 1 <= self.batch_size <= MAX_BATCH_SIZE:
            raise ValueError(f"batch_size must be in [1, {MAX_BATCH_SIZE}]")
        if self.ordering not in ("input", "degree-desc"):
            raise ValueError("ordering must be 'input' or 'degree-desc'")

    def resolved_workers(self) -> int:
        return self.workers if self.workers is not None else (os.cpu_count() or 1)


def edge_order(g: Graph, config: ParallelConfig) -> list[int]:
    """Job permutation for the configured ordering. A performance hint only;
    results never depend on it."""
    if config.ordering == "degree-desc":
        return order_edges_by_degree(g).tolist()
    return list(range(g.m))


# State handed to forked workers by inheritance (never pickled); keyed by a
# run token so concurrent runs in one process cannot collide.
_FORK_STATE: dict[int, tuple] = {}
_run_tokens = itertools.count()


def _batch_worker(token: int, cursor, conn) -> None:
    graph, order, batch_fn, make_scratch, make_acc, batch, total = _FORK_STATE[token]
    scratch = make_scratch(graph)
    acc = make_acc()
    seen = 0
    while True:
        with cursor.get_lock():
            lo = cursor.value
            if lo >= total:
                break
            hi = min(lo + batch, total)
            cursor.value = hi
        seen += batch_fn(graph, order, lo, hi, scratch, acc)
    conn.send((acc, seen))
    conn.close()


def run_batches(g: Graph, config: ParallelConfig, batch_fn: Callable,
                make_scratch: Callable, make_acc: Callable, merge: Callable,
                order: Sequence[int] | None = None):
    """Run ``batch_fn(g, order, lo, hi, scratch, acc)`` over every edge job
    exactly once and return ``(merged_acc, jobs_processed)``.

    batch_fn must be pure given (graph, edge, scratch) and fold its batch into
    the worker-private ``acc``; ``merge`` must be associative. Worker results
    are merged in fixed worker order after a full barrier.
    """
    if order is None:
        order = edge_order(g, config)
    total = len(order)
    workers = config.resolved_workers()

    if workers == 1 or total == 0:
        scratch = make_scratch(g)
        acc = make_acc()
        seen = 0
        lo = 0
        while lo < total:
            hi = min(lo + config.batch_size, total)
            seen += batch_fn(g, order, lo, hi, scratch, acc)
            lo = hi
        return acc, seen

    ctx = multiprocessing.get_context("fork")
    cursor = ctx.Value("q", 0)
    token = next(_run_tokens)
    _FORK_STATE[token] = (g, order, batch_fn, make_scratch, make_acc,
                          config.batch_size, total)
    procs = []
    conns = []
    try:
        for _ in range(workers):
            parent_conn, child_conn = ctx.Pipe(duplex=False)
            p = ctx.Process(target=_batch_worker, args=(token, cursor, child_conn))
            p.start()
            child_conn.close()
            procs.append(p)
            conns.append(parent_conn)
        results = []
        for conn in conns:
            try:
                results.append(conn.recv())
            except EOFError:
                results.append(None)
        for p in procs:
            p.join()
        for p, res in zip(procs, results):
            if res is None or p.exitcode != 0:
                raise WorkerFailure(
                    f"edge-job worker pid={p.pid} failed (exitcode={p.exitcode})")
        acc = make_acc()
        seen = 0
        for worker_acc, worker_seen in results:
            acc = merge(acc, worker_acc)
            seen += worker_seen
        return acc, seen
    finally:
        _FORK_STATE.pop(token, None)
        for p in procs:
            if p.is_alive():
                p.terminate()
                p.join()


def run_edge_jobs(g: Graph, config: ParallelConfig, kernel: Callable,
                  make_scratch: Callable | None = None):
    """Spec-level per-edge interface: ``kernel(g, edge_index, scratch)``
    returns a tuple of ints; tuples are reduced by elementwise addition.
    Returns (totals tuple, edges processed). ``scratch`` defaults to a
    worker-private marker array of size n."""
    if make_scratch is None:
        make_scratch = lambda graph: bytearray(graph.n)

    def batch_fn(graph, order, lo, hi, scratch, acc):
        for j in range(lo, hi):
            vals = kernel(graph, order[j], scratch)
            if acc:
                for i, x in enumerate(vals):
                    acc[i] += x
            else:
                acc.extend(vals)
        return hi - lo

    def merge(a, b):
        if not a:
            return b
        if not b:
            return a
        return [x + y for x, y in zip(a, b)]

    acc, seen = run_batches(g, config, batch_fn, make_scratch, list, merge)
    return tuple(acc), seen


@dataclass(frozen=True)
class SpeedupRow:
    workers: int
    seconds: float
    speedup: float


def measure_speedup(g: Graph, worker_counts: Sequence[int], repeats: int = 5,
                    batch_size: int = 64, ordering: str = "input",
                    census_fn: Callable | None = None) -> list[SpeedupRow]:
    """Median-of-``repeats`` wall-clock census timings per worker count, with
    speedups relative to the single-worker run. Timing covers the census
    only: adjacency caches are primed beforehand and I/O is excluded."""
    if census_fn is None:
        from .census import graphlet_census
        census_fn = graphlet_census

    counts = list(worker_counts)
    if 1 not in counts:
        counts = [1] + counts
    g.adj_lists()
    g.edge_columns()

    medians: dict[int, float] = {}
    baseline = None
    for w in counts:
        config = ParallelConfig(workers=w, batch_size=batch_size, ordering=ordering)
        times = []
        result = None
        for _ in range(repeats):
            t0 = time.perf_counter()
            result = census_fn(g, config)
            times.append(time.perf_counter() - t0)
        medians[w] = statistics.median(times)
        if baseline is None:
            baseline = result
        elif result != baseline:
            raise WorkerFailure("census result changed across worker counts")
    t1 = medians[counts[0]]
    return [SpeedupRow(workers=w, seconds=medians[w], speedup=t1 / medians[w])
            for w in counts]
