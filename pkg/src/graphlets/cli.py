"""Command-line interface: counting, analytics, ranking, benchmarks, and the
HTTP service.

Exit codes: 0 success, 1 I/O or parse errors, 2 usage errors, 3 internal
consistency failures (a bug, not bad input). Failures emit a machine-readable
JSON object on stderr.
"""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

import click

from .analytics import (GFD_SCOPES, RANK_PATTERNS, feature_matrix, gfd,
                        gfd_distance, rank_edges)
from .census import frequencies_from_micro, graphlet_census, micro_csv, micro_table
from .errors import ConsistencyError, EdgeListParseError, GraphletError
from .graph import Graph, ParseOptions
from .parallel import ParallelConfig, WorkerFailure, measure_speedup
from .serialize import counts_to_json, write_csv

EXIT_IO = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _fail(code: str, message: str, exit_code: int, detail=None):
    payload = {"error": {"code": code, "message": message}}
    if detail is not None:
        payload["error"]["detail"] = detail
    click.echo(json.dumps(payload), err=True)
    sys.exit(exit_code)


def _guarded(fn):
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except EdgeListParseError as exc:
            _fail("parse_error", str(exc), EXIT_IO, detail={"line": exc.line})
        except OSError as exc:
            _fail("io_error", str(exc), EXIT_IO)
        except (ConsistencyError, WorkerFailure) as exc:
            _fail("internal_consistency", str(exc), EXIT_INTERNAL)
        except GraphletError as exc:
            _fail("error", str(exc), EXIT_IO)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _parallel_config(threads, batch, ordering) -> ParallelConfig:
    mapped = "degree-desc" if ordering == "degree" else "input"
    return ParallelConfig(workers=threads, batch_size=batch, ordering=mapped)


def _load(input_path: str, num_vertices: int | None = None) -> Graph:
    options = ParseOptions(num_vertices=num_vertices)
    return Graph.from_file(input_path, options)


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=not text.endswith("\n"))


def parallel_options(fn):
    fn = click.option("--threads", type=click.IntRange(min=1), default=None,
                      help="Worker count (default: all cores).")(fn)
    fn = click.option("--batch", type=click.IntRange(1, 4096), default=64,
                      help="Edge jobs claimed per batch.")(fn)
    fn = click.option("--ordering", type=click.Choice(["input", "degree"]),
                      default="input", help="Edge job ordering.")(fn)
    return fn


@click.group()
@click.version_option()
def main():
    """Exact graphlet decomposition: 3- and 4-node census, analytics, and
    serving."""


@main.command()
@click.option("-i", "--input", "input_path", required=True,
              type=click.Path(dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.option("--micro", "micro_path", type=click.Path(dir_okay=False), default=None,
              help="Also write per-edge micro counts as CSV.")
@click.option("--num-vertices", type=int, default=None,
              help="Force |V| (keeps isolated vertices).")
@parallel_options
@_guarded
def count(input_path, output, micro_path, num_vertices, threads, batch, ordering):
    """Count all 17 graphlet classes of an edge-list file."""
    g = _load(input_path, num_vertices)
    config = _parallel_config(threads, batch, ordering)
    t0 = time.perf_counter()
    if micro_path:
        table = micro_table(g, config)
        freqs = frequencies_from_micro(g, table)
    else:
        table = None
        freqs = graphlet_census(g, config)
    runtime = time.perf_counter() - t0
    if micro_path:
        Path(micro_path).write_text(micro_csv(g, table))
    payload = {
        "n": g.n,
        "m": g.m,
        "counts": counts_to_json(freqs.counts),
        "runtime_seconds": round(runtime, 6),
        "workers": config.resolved_workers(),
        "batch_size": config.batch_size,
    }
    _emit(json.dumps(payload, indent=2), output)


@main.command(name="gfd")
@click.option("-i", "--input", "input_paths", required=True, multiple=True,
              type=click.Path(dir_okay=False),
              help="One graph for its GFD; several for pairwise distances.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.option("--k", type=click.Choice(["3", "4"]), default="4")
@click.option("--scope", type=click.Choice(list(GFD_SCOPES)), default="connected")
@click.option("--metric", type=click.Choice(["euclidean", "cosine"]),
              default="euclidean", help="Distance for multi-input comparison.")
@parallel_options
@_guarded
def gfd_command(input_paths, output, k, scope, metric, threads, batch, ordering):
    """Graphlet frequency distribution; with several inputs, also the
    pairwise GFD distance matrix."""
    config = _parallel_config(threads, batch, ordering)
    vectors = []
    for path in input_paths:
        g = _load(path)
        freqs = graphlet_census(g, config)
        vectors.append((Path(path).name, g, gfd(freqs, k=int(k), scope=scope)))
    if len(vectors) == 1:
        name, g, vector = vectors[0]
        payload = {"n": g.n, "m": g.m, **vector.to_json_dict()}
    else:
        labels = [name for name, _, _ in vectors]
        matrix = [[round(gfd_distance(a, b, metric=metric), 12)
                   for _, _, b in vectors] for _, _, a in vectors]
        payload = {
            "k": int(k), "scope": scope, "metric": metric, "labels": labels,
            "vectors": {name: list(v.values) for name, _, v in vectors},
            "distances": matrix,
        }
    _emit(json.dumps(payload, indent=2), output)


@main.command()
@click.option("-i", "--input", "input_path", required=True,
              type=click.Path(dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.option("--pattern", type=click.Choice(list(RANK_PATTERNS)), default="star4")
@click.option("--top", type=click.IntRange(min=1), default=20)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@parallel_options
@_guarded
def rank(input_path, output, pattern, top, fmt, threads, batch, ordering):
    """Rank edges by graphlet participation (find large stars/cliques fast)."""
    g = _load(input_path)
    ranked = rank_edges(g, pattern, top_k=top,
                        config=_parallel_config(threads, batch, ordering))
    if fmt == "json":
        payload = [{"src": r.u, "dst": r.v, "weight": r.weight} for r in ranked]
        _emit(json.dumps({"pattern": pattern, "edges": payload}, indent=2), output)
    else:
        _emit(write_csv(["src", "dst", "weight"],
                        [[r.u, r.v, r.weight] for r in ranked]), output)


@main.command()
@click.option("-i", "--input", "input_paths", required=True, multiple=True,
              type=click.Path(dir_okay=False),
              help="Repeat for each graph in the collection.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--log-scale", is_flag=True, default=False)
@click.option("--normalize", is_flag=True, default=False)
@parallel_options
@_guarded
def features(input_paths, output, fmt, log_scale, normalize, threads, batch, ordering):
    """Per-graph 17-dimensional graphlet feature vectors."""
    graphs = []
    labels = []
    for path in input_paths:
        labels.append(Path(path).name)
        graphs.append(_load(path))
    fm = feature_matrix(graphs, labels=labels,
                        config=_parallel_config(threads, batch, ordering),
                        log_scale=log_scale, normalize=normalize)
    if fmt == "json":
        payload = {
            "classes": list(fm.class_ids),
            "rows": [{"label": lbl, "features": list(map(float, row)),
                      "seconds": sec}
                     for lbl, row, sec in zip(fm.labels, fm.rows, fm.seconds)],
            "skipped": [{"label": lbl, "reason": why} for lbl, why in fm.skipped],
        }
        _emit(json.dumps(payload, indent=2), output)
    else:
        header = ["label", *fm.class_ids, "seconds"]
        rows = [[lbl, *(format(x, "g") for x in row), f"{sec:.6f}"]
                for lbl, row, sec in zip(fm.labels, fm.rows, fm.seconds)]
        _emit(write_csv(header, rows), output)
    for lbl, why in fm.skipped:
        click.echo(f"skipped {lbl}: {why}", err=True)


@main.command()
@click.option("-i", "--input", "input_path", required=True,
              type=click.Path(dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.option("--workers", "workers_csv", default="1,2,4",
              help="Comma-separated worker counts.")
@click.option("--repeats", type=click.IntRange(min=1), default=5)
@click.option("--batch", type=click.IntRange(1, 4096), default=64)
@click.option("--ordering", type=click.Choice(["input", "degree"]), default="input")
@_guarded
def bench(input_path, output, workers_csv, repeats, batch, ordering):
    """Strong-scaling benchmark: census wall time per worker count."""
    g = _load(input_path)
    counts = [int(tok) for tok in workers_csv.split(",") if tok.strip()]
    mapped = "degree-desc" if ordering == "degree" else "input"
    rows = measure_speedup(g, counts, repeats=repeats, batch_size=batch,
                           ordering=mapped)
    payload = {
        "n": g.n, "m": g.m, "repeats": repeats, "batch_size": batch,
        "rows": [{"workers": r.workers, "seconds": round(r.seconds, 6),
                  "speedup": round(r.speedup, 3)} for r in rows],
    }
    _emit(json.dumps(payload, indent=2), output)


@main.command()
@click.option("-i", "--input", "input_path", default=None,
              type=click.Path(dir_okay=False),
              help="Optionally preload a graph as the first session.")
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8020)
@click.option("--threads", type=click.IntRange(min=1), default=None)
@click.option("--ui", "ui_dir", type=click.Path(file_okay=False), default=None,
              help="Serve a built explorer frontend from this directory.")
@_guarded
def serve(input_path, host, port, threads, ui_dir):
    """Run the JSON-over-HTTP service backing the interactive explorer."""
    import uvicorn

    from .service import create_app

    app = create_app(workers=threads, ui_dir=ui_dir)
    if input_path:
        text = Path(input_path).read_text()
        session_id = app.state.store.create_from_text(text)
        click.echo(f"preloaded session {session_id}", err=True)
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
