"""Benchmark harness: run batch/dynamic modes over a stream and measure.

Per step it records network size, delta size, centralities computed,
elapsed and cumulative seconds (monotonic clock), and, in compare mode,
the per-step batch/dynamic speedup. Timing covers centrality computation
only; for the dynamic algorithm that includes delta application and
affected-set gathering (they are part of its work), while batch snapshots
are materialized off the clock and only the full recomputation is timed.

Compare mode cross-checks that batch and dynamic maps agree at every step
before any timing is reported.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path

from lapstream.centrality import (
    CentralityMap,
    Variant,
    lap_cent,
    laplacian_energy,
    normalize,
    write_centralities,
)
from lapstream.errors import CompareMismatchError, DeltaError, EmptyDatasetError, LapstreamError
from lapstream.incremental import (
    apply_delta,
    lap_cent_add_remove,
    lap_cent_weighted_add_remove,
)
from lapstream.ingest import (
    SnapshotStream,
    load_edge_events,
    snapshots_cumulative,
    snapshots_window,
    stream_from_snapshot_dir,
)

CSV_HEADER = (
    "step,num_nodes,num_edges,added_edges,removed_edges,"
    "centralities_computed,elapsed_s,cumulative_s,speedup"
)

MAP_REL_TOL = 1e-9


@dataclass
class BenchRecord:
    step: int  # 1-based, matching the paper-style reports
    num_nodes: int
    num_edges: int
    added_edges: int
    removed_edges: int
    centralities_computed: int
    elapsed_s: float
    cumulative_s: float
    speedup: float | None = None
    elapsed_std_s: float | None = None  # populated when repeat > 1; not in CSV


@dataclass
class RunConfig:
    input_path: str | Path
    mode: str = "dynamic"  # batch | dynamic | compare
    variant: Variant = "unweighted"
    snapshot: str = "daily"  # daily | monthly | count:N
    window: int | None = None  # sliding window length in buckets
    normalized: bool = False
    out_dir: str | Path | None = None
    strict: bool = False
    repeat: int = 1
    dump_centralities: bool = False
    weight_policy: str = "overwrite"


@dataclass
class BenchResult:
    mode: str
    variant: Variant
    batch: list[BenchRecord] | None = None
    dynamic: list[BenchRecord] | None = None
    maps: list[CentralityMap] = field(default_factory=list)  # authoritative pass

    @property
    def records(self) -> list[BenchRecord]:
        primary = self.dynamic if self.dynamic is not None else self.batch
        assert primary is not None
        return primary


def diff_maps(a: dict[int, float], b: dict[int, float], rel_tol: float = MAP_REL_TOL):
    """First (node, value_a, value_b) divergence in ascending node order, or None."""
    for v in sorted(a.keys() | b.keys()):
        if v not in a or v not in b:
            return (v, a.get(v), b.get(v))
        x, y = a[v], b[v]
        if x != y and abs(x - y) > rel_tol * max(1.0, abs(x), abs(y)):
            return (v, x, y)
    return None


def _step_meta(stream: SnapshotStream):
    """(num_nodes, num_edges, added, removed) per step, replayed off the clock."""
    g = stream.initial.copy()
    meta = [(g.num_nodes, g.num_edges, g.num_edges, 0)]
    for step, delta in enumerate(stream.deltas, start=1):
        try:
            apply_delta(g, delta)
        except LapstreamError as exc:
            raise DeltaError(step, exc) from exc
        meta.append((g.num_nodes, g.num_edges, len(delta.adds), len(delta.removes)))
    return meta


def _bench_batch(stream: SnapshotStream, variant: Variant, repeat: int, strict: bool):
    times: list[list[float]] = []
    maps: list[CentralityMap] = []
    g = stream.initial.copy()
    g.strict = strict
    for step in range(stream.num_steps):
        if step > 0:
            try:
                apply_delta(g, stream.deltas[step - 1])  # off the clock
            except LapstreamError as exc:
                raise DeltaError(step, exc) from exc
        samples = []
        cmap = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            cmap = lap_cent(g, variant)
            samples.append(time.perf_counter() - t0)
        times.append(samples)
        maps.append(cmap)
    return maps, times


def _bench_dynamic(stream: SnapshotStream, variant: Variant, repeat: int, strict: bool):
    step_fn = lap_cent_add_remove if variant == "unweighted" else lap_cent_weighted_add_remove
    times: list[list[float]] = [[] for _ in range(stream.num_steps)]
    maps: list[CentralityMap] = []
    for _ in range(repeat):
        g = stream.initial.copy()
        g.strict = strict
        t0 = time.perf_counter()
        cmap = lap_cent(g, variant)
        times[0].append(time.perf_counter() - t0)
        # the algorithm updates its map in place (timed); per-step history
        # snapshots for reporting and cross-checking are harness bookkeeping
        # and stay off the clock
        run_maps = [CentralityMap(dict(cmap.values), cmap.computed_count)]
        for k, delta in enumerate(stream.deltas, start=1):
            t0 = time.perf_counter()
            try:
                cmap, _, g = step_fn(g, delta, cmap, in_place=True)
            except LapstreamError as exc:
                raise DeltaError(k, exc) from exc
            times[k].append(time.perf_counter() - t0)
            run_maps.append(CentralityMap(dict(cmap.values), cmap.computed_count))
        maps = run_maps  # deterministic: every repeat yields the same maps
    return maps, times


def _records(stream, meta, times, counts, speedups=None) -> list[BenchRecord]:
    records = []
    cumulative = 0.0
    for step in range(stream.num_steps):
        mean = statistics.fmean(times[step])
        std = statistics.stdev(times[step]) if len(times[step]) > 1 else None
        cumulative += mean
        n, m, added, removed = meta[step]
        records.append(
            BenchRecord(
                step=step + 1,
                num_nodes=n,
                num_edges=m,
                added_edges=added,
                removed_edges=removed,
                centralities_computed=counts[step],
                elapsed_s=mean,
                cumulative_s=cumulative,
                speedup=None if speedups is None else speedups[step],
                elapsed_std_s=std,
            )
        )
    return records


def bench_stream(
    stream: SnapshotStream,
    mode: str,
    variant: Variant = "unweighted",
    repeat: int = 1,
    strict: bool = False,
) -> BenchResult:
    """Measure one stream. ``stream.initial`` is copied, never mutated."""
    if mode not in ("batch", "dynamic", "compare"):
        raise ValueError(f"unknown mode {mode!r}")
    if repeat < 1:
        raise ValueError("repeat must be >= 1")
    meta = _step_meta(stream)
    result = BenchResult(mode=mode, variant=variant)

    batch_maps = batch_times = None
    dyn_maps = dyn_times = None
    if mode in ("batch", "compare"):
        batch_maps, batch_times = _bench_batch(stream, variant, repeat, strict)
    if mode in ("dynamic", "compare"):
        dyn_maps, dyn_times = _bench_dynamic(stream, variant, repeat, strict)

    speedups = None
    if mode == "compare":
        # correctness gate: no timings leave this function on divergence
        for step, (bm, dm) in enumerate(zip(batch_maps, dyn_maps), start=1):
            bad = diff_maps(bm.values, dm.values)
            if bad is not None:
                raise CompareMismatchError(step, bad[0], bad[1], bad[2])
        speedups = [
            statistics.fmean(bt) / statistics.fmean(dt)
            for bt, dt in zip(batch_times, dyn_times)
        ]

    if batch_maps is not None:
        counts = [m.computed_count for m in batch_maps]
        result.batch = _records(stream, meta, batch_times, counts, speedups)
    if dyn_maps is not None:
        counts = [m.computed_count for m in dyn_maps]
        result.dynamic = _records(stream, meta, dyn_times, counts, speedups)
    result.maps = dyn_maps if dyn_maps is not None else batch_maps
    return result


def emit_csv(records: list[BenchRecord]) -> str:
    """Fixed-header CSV, 6-decimal reals, empty speedup outside compare
    mode, LF endings, trailing newline."""
    lines = [CSV_HEADER]
    for r in records:
        speedup = "" if r.speedup is None else f"{r.speedup:.6f}"
        lines.append(
            f"{r.step},{r.num_nodes},{r.num_edges},{r.added_edges},{r.removed_edges},"
            f"{r.centralities_computed},{r.elapsed_s:.6f},{r.cumulative_s:.6f},{speedup}"
        )
    return "\n".join(lines) + "\n"


def build_stream(cfg: RunConfig) -> SnapshotStream:
    path = Path(cfg.input_path)
    if path.is_dir():
        return stream_from_snapshot_dir(path)
    events = load_edge_events(path)
    if not events:
        raise EmptyDatasetError(f"no edge events in {path}")
    if cfg.window is not None:
        return snapshots_window(events, cfg.snapshot, cfg.window, cfg.weight_policy)
    return snapshots_cumulative(events, cfg.snapshot, cfg.weight_policy)


def _dump_centralities(stream, maps, variant, normalized, out_dir: Path) -> None:
    dump_dir = out_dir / "centralities"
    dump_dir.mkdir(parents=True, exist_ok=True)
    g = stream.initial.copy()
    for step, cmap in enumerate(maps):
        if step > 0:
            apply_delta(g, stream.deltas[step - 1])
        if normalized:
            cmap = normalize(cmap, laplacian_energy(g, variant))
        with open(dump_dir / f"step_{step + 1:04d}.csv", "w", newline="\n") as fh:
            write_centralities(cmap, fh)


def run_benchmark(cfg: RunConfig) -> BenchResult:
    """Full harness entry point: build the stream per the config, measure,
    and write CSV/centrality artifacts if an output directory is set."""
    stream = build_stream(cfg)
    result = bench_stream(stream, cfg.mode, cfg.variant, cfg.repeat, cfg.strict)
    if cfg.out_dir is not None:
        out_dir = Path(cfg.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        if result.batch is not None:
            (out_dir / "batch.csv").write_text(emit_csv(result.batch), newline="\n")
        if result.dynamic is not None:
            (out_dir / "dynamic.csv").write_text(emit_csv(result.dynamic), newline="\n")
        if cfg.dump_centralities:
            _dump_centralities(stream, result.maps, cfg.variant, cfg.normalized, out_dir)
    return result
