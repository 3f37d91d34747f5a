"""Command-line front end: scenario -> channel -> estimators -> CSV reports.

Subcommands::

    jcas simulate     --scene <name|file> [--window rect|hamming|adaptive]
                      [--model dual-tone|single-tone] [--estimator diag|grid2d|both]
                      [--snr-db F] [--seed N] [--out DIR]
    jcas capabilities [--scene <file>] [--alloc-csv DIR]
    jcas bench        [--n SIZE ...] [--repeats K] [--counted-only] [--csv FILE]

All numeric output is written with 6 significant digits and '.' decimals;
identical configuration and seed give byte-identical files.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import bench as bench_mod
from .allocation import AllocationKind, build_allocation, overhead
from .channel import (DiagonalModel, LinkBudget, NoiseSpec, synthesize_diag,
                      synthesize_grid, target_amplitudes)
from .config import OfdmConfig, capabilities
from .diag_estimator import (DEFAULT_MIN_SEPARATION, DEFAULT_THRESHOLD_DB,
                             WindowKind, apply_window, candidates, detect_peaks_1d,
                             diag_spectrum, pair_peaks)
from .grid_estimator import detect_peaks_2d, range_doppler_map
from .scenario import Scene, builtin_scene, load_scene, targets_at
from .tracking import Hypothesis, resolve_ambiguity

GRID_THRESHOLD_DB = -30.0
GRID_GUARD = 2


def fmt(x) -> str:
    """Fixed 6-significant-digit rendering shared by every numeric output."""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".6g")


@dataclass(frozen=True)
class RunConfig:
    scene: Scene
    cfg: OfdmConfig
    window: str               # rect | hamming | adaptive
    model: DiagonalModel
    estimator: str            # diag | grid2d | both
    noise: NoiseSpec | None
    out_dir: Path
    budget: LinkBudget
    seed: int


def _load_scene_arg(arg: str) -> tuple[Scene, OfdmConfig]:
    if Path(arg).exists():
        sf = load_scene(arg)
        return sf.scene, sf.ofdm or OfdmConfig.table1()
    try:
        return builtin_scene(arg), OfdmConfig.table1()
    except ValueError:
        raise ValueError(f"scene {arg!r} is neither a file nor a builtin name")


def _write_csv(path: Path, header: str, rows: list[str]) -> None:
    path.write_text("\n".join([header, *rows]) + "\n")


def _windows_for_frame(mode: str, frame_index: int) -> list[WindowKind]:
    if mode == "rect":
        return [WindowKind.RECTANGULAR]
    if mode == "hamming":
        return [WindowKind.HAMMING]
    if mode == "adaptive":
        return [WindowKind.RECTANGULAR, WindowKind.HAMMING]
    raise ValueError(f"unknown window mode {mode!r}")


def _merge_peaks(peak_sets, min_separation: int, n: int):
    """Union of per-window detections, thinned strongest-first."""
    merged = []
    for peaks in peak_sets:
        merged.extend(peaks)
    kept = []
    for p in sorted(merged, key=lambda p: -p.magnitude_db):
        dist = min((min(abs(p.bin - q.bin), n - abs(p.bin - q.bin)) for q in kept),
                   default=n)
        if dist >= min_separation:
            kept.append(p)
    return kept


def _simulate_diag(run: RunConfig) -> None:
    cfg = run.cfg
    tracks: list[Hypothesis] = []
    det_rows: list[str] = []
    half = cfg.n_diag // 2
    for fidx, t in enumerate(run.scene.measurement_times_s):
        targets = targets_at(run.scene, t)
        if not targets:
            continue
        amps = target_amplitudes(cfg, run.budget, targets, run.seed, fidx)
        d = synthesize_diag(cfg, targets, amps, noise=run.noise, model=run.model)
        windows = _windows_for_frame(run.window, fidx)
        peak_sets = []
        for kind in windows:
            img = diag_spectrum(apply_window(d, kind))
            suffix = f"_{kind.value}" if len(windows) > 1 else ""
            _write_csv(run.out_dir / f"image_{fmt(t)}{suffix}.csv",
                       "bin,magnitude_db",
                       [f"{b},{fmt(img.magnitude_db[b])}" for b in range(half + 1)])
            peak_sets.append(detect_peaks_1d(img, DEFAULT_THRESHOLD_DB[kind]))
        peaks = _merge_peaks(peak_sets, DEFAULT_MIN_SEPARATION, cfg.n_diag)
        pairs, _orphans = pair_peaks(peaks)
        tracks = resolve_ambiguity(cfg, tracks, (t, pairs), run.scene.frame_interval_s)
        by_pair = {id(tr.history[-1][1]): tr for tr in tracks
                   if tr.history and tr.history[-1][0] == t}
        for pair in pairs:
            cand = candidates(cfg, pair)
            track = by_pair.get(id(pair))
            track_id = track.track_id if track else -1
            resolved = track.chosen if track else "undecided"
            best = track.best_solution() if track else cand.sol_a
            det_rows.append(",".join([
                fmt(t), str(pair.l1), str(pair.l2), fmt(pair.mean_bin),
                str(pair.delta_bin),
                fmt(cand.sol_a.range_m), fmt(cand.sol_a.velocity_mps),
                fmt(cand.sol_b.range_m), fmt(cand.sol_b.velocity_mps),
                fmt(pair.magnitude_db), str(track_id), resolved,
                fmt(best.range_m), fmt(best.velocity_mps),
            ]))
    _write_csv(run.out_dir / "detections.csv",
               "time_s,l1,l2,l_mean,l_delta,r_eq15_m,v_eq15_mps,"
               "r_eq16_m,v_eq16_mps,pair_mag_db,track_id,resolved,r_m,v_mps",
               det_rows)
    track_rows = []
    for tr in sorted(tracks, key=lambda tr: tr.track_id):
        best = tr.best_solution()
        track_rows.append(",".join([
            str(tr.track_id), str(len(tr.history)), fmt(tr.score_a), fmt(tr.score_b),
            tr.chosen, fmt(best.range_m), fmt(best.velocity_mps)]))
    _write_csv(run.out_dir / "tracks.csv",
               "track_id,n_frames,score_a,score_b,resolved,r_m,v_mps", track_rows)


def _simulate_grid(run: RunConfig) -> None:
    cfg = run.cfg
    det_rows: list[str] = []
    for fidx, t in enumerate(run.scene.measurement_times_s):
        targets = targets_at(run.scene, t)
        if not targets:
            continue
        amps = target_amplitudes(cfg, run.budget, targets, run.seed, fidx)
        c = synthesize_grid(cfg, targets, amps, noise=run.noise)
        rd = range_doppler_map(c)
        rows = [f"{p},{q},{fmt(rd.magnitude_db[p, q])}"
                for p in range(cfg.n_sensing_freq)
                for q in range(cfg.n_sensing_time)]
        _write_csv(run.out_dir / f"rdmap_{fmt(t)}.csv", "p,q,magnitude_db", rows)
        for det in detect_peaks_2d(rd, GRID_THRESHOLD_DB, GRID_GUARD, cfg=cfg):
            det_rows.append(",".join([
                fmt(t), str(det.range_bin), str(det.doppler_bin),
                fmt(det.magnitude_db), fmt(det.range_m), fmt(det.velocity_mps)]))
    _write_csv(run.out_dir / "grid_detections.csv",
               "time_s,p,q,magnitude_db,range_m,velocity_mps", det_rows)


def cmd_simulate(args: argparse.Namespace) -> int:
    scene, cfg = _load_scene_arg(args.scene)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    noise = NoiseSpec(snr_db=args.snr_db, rng_seed=args.seed) if args.snr_db is not None else None
    run = RunConfig(scene=scene, cfg=cfg, window=args.window,
                    model=DiagonalModel(args.model), estimator=args.estimator,
                    noise=noise, out_dir=out_dir, budget=LinkBudget(), seed=args.seed)
    if run.estimator in ("diag", "both"):
        _simulate_diag(run)
    if run.estimator in ("grid2d", "both"):
        _simulate_grid(run)
    return 0


def cmd_capabilities(args: argparse.Namespace) -> int:
    cfg = OfdmConfig.table1()
    if args.scene is not None:
        sf = load_scene(args.scene)
        if sf.ofdm is not None:
            cfg = sf.ofdm
    caps = capabilities(cfg)
    grid = build_allocation(cfg, AllocationKind.GRID)
    diag = build_allocation(cfg, AllocationKind.DIAGONAL)
    lines = [
        ("range resolution [m]", caps.range_resolution),
        ("velocity resolution [m/s]", caps.velocity_resolution),
        ("max unambiguous range [m]", caps.max_unambiguous_range),
        ("max unambiguous velocity [m/s]", caps.max_unambiguous_velocity),
        ("grid sensing overhead", overhead(grid)),
        ("diagonal sensing overhead", overhead(diag)),
    ]
    width = max(len(name) for name, _ in lines)
    for name, value in lines:
        print(f"{name:<{width}}  {fmt(value)}")
    if args.alloc_csv is not None:
        out = Path(args.alloc_csv)
        out.mkdir(parents=True, exist_ok=True)
        for alloc, label in ((grid, "grid"), (diag, "diagonal")):
            _write_csv(out / f"allocation_{label}.csv", "m,n",
                       [f"{m},{n}" for m, n in alloc.entries])
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = args.n or [64, 128, 256]
    report = bench_mod.run_bench(sizes, repeats=args.repeats,
                                 time_runs=not args.counted_only)
    header = f"{'algorithm':<12}{'n':>6}{'multiplies':>14}{'wall_ns':>14}"
    print(header)
    for row in report.rows:
        print(f"{row.algorithm:<12}{row.n:>6}{row.counted_multiplies:>14}"
              f"{row.wall_time_ns:>14}")
    for n in sizes:
        line = f"n={n}: counted ratio {fmt(report.ratio_counted[n])}"
        if n in report.ratio_time:
            line += f", time ratio {fmt(report.ratio_time[n])}"
        print(line)
    if args.csv is not None:
        _write_csv(Path(args.csv), "algorithm,n,counted_multiplies,wall_time_ns",
                   [f"{r.algorithm},{r.n},{r.counted_multiplies},{r.wall_time_ns}"
                    for r in report.rows])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jcas",
                                     description="OFDM JCAS radar simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run a scene through the estimators")
    sim.add_argument("--scene", required=True,
                     help="builtin scene name (fig4, fig5) or scene file path")
    sim.add_argument("--window", choices=["rect", "hamming", "adaptive"],
                     default="rect")
    sim.add_argument("--model", choices=[m.value for m in DiagonalModel],
                     default=DiagonalModel.DUAL_TONE.value)
    sim.add_argument("--estimator", choices=["diag", "grid2d", "both"],
                     default="diag")
    sim.add_argument("--snr-db", type=float, default=None,
                     help="additive noise SNR; omit for noiseless")
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--out", default="out", help="output directory")
    sim.set_defaults(func=cmd_simulate)

    cap = sub.add_parser("capabilities",
                         help="print resolution/ambiguity figures and overhead")
    cap.add_argument("--scene", default=None,
                     help="scene file whose [ofdm] section overrides defaults")
    cap.add_argument("--alloc-csv", default=None,
                     help="directory for allocation m,n CSV exports")
    cap.set_defaults(func=cmd_capabilities)

    ben = sub.add_parser("bench", help="complexity benchmark of the transforms")
    ben.add_argument("--n", type=int, action="append",
                     help="transform size; repeatable (default 64 128 256)")
    ben.add_argument("--repeats", type=int, default=5)
    ben.add_argument("--counted-only", action="store_true",
                     help="skip wall-clock timing")
    ben.add_argument("--csv", default=None, help="also write report CSV here")
    ben.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
