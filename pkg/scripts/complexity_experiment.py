#!/usr/bin/env python3
"""Measure the grid-vs-diagonal transform cost across sizes.

Counted complex multiplications are exact (ratio 2n by construction); wall
times compare the naive kernels and, for context, the FFT-backed paths.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from jcas.bench import run_bench

OUT = Path(__file__).resolve().parents[1] / "out"


def main() -> None:
    sizes = [64, 128, 256, 480]
    report = run_bench(sizes, repeats=5)
    OUT.mkdir(parents=True, exist_ok=True)
    lines = ["algorithm,n,counted_multiplies,wall_time_ns"]
    lines += [f"{r.algorithm},{r.n},{r.counted_multiplies},{r.wall_time_ns}"
              for r in report.rows]
    (OUT / "bench.csv").write_text("\n".join(lines) + "\n")
    print(f"{'n':>6} {'counted ratio':>14} {'time ratio':>11}")
    for n in sizes:
        t = f"{report.ratio_time[n]:.1f}" if n in report.ratio_time else "-"
        print(f"{n:>6} {report.ratio_counted[n]:>14.0f} {t:>11}")
    print(f"wrote {OUT / 'bench.csv'}")


if __name__ == "__main__":
    main()
