#!/usr/bin/env python3
"""End-to-end counting experiment: enumerate, classify, write CSV + SVG.

Example:
    python scripts/run_counts.py --bounds 1,2,4,8,16 --workers 4 --outdir results/
"""

import argparse
import pathlib
import sys

from cubicbundle.classify import classify_point
from cubicbundle.cli import render_log_log_svg
from cubicbundle.enumeration import CLASS_LABELS, count_series


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bounds", default="1,2,4,8,16", help="ascending height grid")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--outdir", default="results")
    parser.add_argument("--emit-points", action="store_true")
    args = parser.parse_args()

    bounds = [int(b) for b in args.bounds.split(",")]
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    series, rows = count_series(
        bounds, classify_point, workers=args.workers, emit_points=args.emit_points
    )
    csv_path = outdir / "counts.csv"
    csv_path.write_text(series.csv_text())
    svg_path = outdir / "counts.svg"
    svg_path.write_text(render_log_log_svg(series.bounds, series.counts))
    if args.emit_points:
        (outdir / "points.txt").write_text("\n".join(rows) + "\n" if rows else "")

    print(f"wrote {csv_path} and {svg_path}")
    header = ["B"] + list(CLASS_LABELS)
    print("  ".join(h.rjust(12) for h in header))
    for idx, b in enumerate(series.bounds):
        cells = [str(b)] + [str(series.counts[label][idx]) for label in CLASS_LABELS]
        print("  ".join(c.rjust(12) for c in cells))
    for idx, b in enumerate(series.bounds):
        all_count = series.counts["ALL"][idx]
        in_z = series.counts["IN_Z"][idx]
        print(f"B={b}: exceptional-set share {in_z / all_count:.6f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
