import pytest

from graphlets import (Graph, ParallelConfig, WorkerFailure, graphlet_census,
                       measure_speedup, run_edge_jobs)
from graphlets.parallel import edge_order, run_batches
from graphlets.generate import gnp_random_graph, random_graph_avg_degree


class TestParallelConfig:
    def test_defaults(self):
        c = ParallelConfig()
        assert c.resolved_workers() >= 1
        assert c.batch_size == 64 and c.ordering == "input"

    def test_validation(self):
        with pytest.raises(ValueError):
            ParallelConfig(workers=0)
        with pytest.raises(ValueError):
            ParallelConfig(batch_size=0)
        with pytest.raises(ValueError):
            ParallelConfig(batch_size=5000)
        with pytest.raises(ValueError):
            ParallelConfig(ordering="random")

    def test_edge_order_degree_desc(self):
        g = gnp_random_graph(30, 0.2, seed=0)
        order = edge_order(g, ParallelConfig(ordering="degree-desc"))
        assert sorted(order) == list(range(g.m))


class TestDeterminism:
    def test_workers_and_batches(self):
        g = random_graph_avg_degree(2000, 10, seed=1)
        base = graphlet_census(g, ParallelConfig(workers=1))
        for workers in (2, 4, 8):
            assert graphlet_census(g, ParallelConfig(workers=workers)) == base
        for batch in (1, 64, 256):
            assert graphlet_census(
                g, ParallelConfig(workers=4, batch_size=batch)) == base

    def test_ordering_invariance(self):
        g = gnp_random_graph(120, 0.1, seed=2)
        a = graphlet_census(g, ParallelConfig(workers=3, ordering="input"))
        b = graphlet_census(g, ParallelConfig(workers=3, ordering="degree-desc"))
        assert a == b


class TestExactlyOnce:
    def test_visit_counter_sums_to_m(self):
        g = gnp_random_graph(80, 0.15, seed=3)
        for workers in (1, 2, 5):
            for batch in (1, 7, 64):
                totals, seen = run_edge_jobs(
                    g, ParallelConfig(workers=workers, batch_size=batch),
                    lambda graph, idx, scratch: (1,))
                assert seen == g.m
                assert totals == (g.m,)

    def test_every_edge_exactly_once(self):
        g = gnp_random_graph(50, 0.2, seed=4)

        def batch_fn(graph, order, lo, hi, scratch, acc):
            acc.extend(order[lo:hi])
            return hi - lo

        visited, seen = run_batches(
            g, ParallelConfig(workers=3, batch_size=5), batch_fn,
            make_scratch=lambda graph: None, make_acc=list,
            merge=lambda a, b: a + b)
        assert seen == g.m
        assert sorted(visited) == list(range(g.m))

    def test_empty_graph(self):
        g = Graph(5, [])
        totals, seen = run_edge_jobs(g, ParallelConfig(workers=2),
                                     lambda graph, idx, scratch: (1,))
        assert seen == 0 and totals == ()


def _exploding_kernel(graph, idx, scratch):
    if idx == 3:
        raise RuntimeError("boom")
    return (1,)


class TestFailurePropagation:
    def test_worker_crash_aborts_run(self):
        g = gnp_random_graph(30, 0.4, seed=5)
        assert g.m > 4
        with pytest.raises(WorkerFailure):
            run_edge_jobs(g, ParallelConfig(workers=2), _exploding_kernel)

    def test_single_worker_propagates_directly(self):
        g = gnp_random_graph(30, 0.4, seed=5)
        with pytest.raises(RuntimeError):
            run_edge_jobs(g, ParallelConfig(workers=1), _exploding_kernel)


class TestMeasureSpeedup:
    def test_rows_and_baseline(self):
        g = gnp_random_graph(300, 0.08, seed=6)
        rows = measure_speedup(g, [1, 2], repeats=2)
        assert [r.workers for r in rows] == [1, 2]
        assert rows[0].speedup == 1.0
        assert all(r.seconds > 0 for r in rows)

    def test_prepends_single_worker_baseline(self):
        g = gnp_random_graph(200, 0.1, seed=7)
        rows = measure_speedup(g, [2], repeats=1)
        assert rows[0].workers == 1
