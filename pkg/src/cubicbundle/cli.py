"""Command-line surface for the toolkit.

Subcommands: count, enumerate, classify, fiber-rank, lines,
verify-intersections, rank-survey, plot.  Exit codes: 0 success, 2 I/O
error, 64 usage error, 65 domain error (bad point or surface), 66 missing
input file.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from dataclasses import dataclass

from .arith import InvalidArgument, InvalidPoint, anticanonical_height, normalize
from .classify import classify_point
from .enumeration import CLASS_LABELS, count_series, enumerate_bundle, point_row
from .geometry import NotOnVariety, BundlePoint
from .intersection import H1, H2, DivisorClass, intersect_on_bundle
from .picard import (
    ALL_LINE_LABELS,
    DiagonalCubic,
    galois_group,
    incidence,
    orbits,
    picard_rank,
)

EXIT_OK = 0
EXIT_IO = 2
EXIT_USAGE = 64
EXIT_DOMAIN = 65
EXIT_NOINPUT = 66


@dataclass
class RunConfig:
    command: str
    height_bound: int = 0
    bounds_grid: tuple[int, ...] = ()
    workers: int = 1
    output_path: str | None = None
    emit_points: bool = False
    sample_count: int = 0
    rng_seed: int = 20240601

    def validate(self) -> None:
        if self.workers < 1:
            raise InvalidArgument("workers must be >= 1")
        if any(b2 <= b1 for b1, b2 in zip(self.bounds_grid, self.bounds_grid[1:])):
            raise InvalidArgument("bounds must be strictly ascending")
        if any(b < 1 for b in self.bounds_grid):
            raise InvalidArgument("bounds must be positive")


def _parse_point(text: str, dim: int = 4):
    try:
        coords = [int(part) for part in text.split(":")]
    except ValueError:
        raise InvalidPoint(f"cannot parse coordinates {text!r}") from None
    if len(coords) != dim:
        raise InvalidPoint(f"expected {dim} coordinates, got {len(coords)}")
    return normalize(coords)


def _write_text(path: str | None, text: str) -> int:
    if path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(path, "w") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# ---------------------------------------------------------------------------
# count / enumerate

def cmd_count(cfg: RunConfig) -> int:
    series, rows = count_series(
        cfg.bounds_grid, classify_point, workers=cfg.workers, emit_points=cfg.emit_points
    )
    status = _write_text(cfg.output_path, series.csv_text())
    if status != EXIT_OK:
        return status
    if cfg.emit_points:
        points_path = (cfg.output_path or "points") + ".points"
        status = _write_text(points_path, "\n".join(rows) + "\n" if rows else "")
        if status != EXIT_OK:
            return status
    header = ["B"] + list(CLASS_LABELS)
    widths = [max(len(h), 10) for h in header]
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for idx, b in enumerate(series.bounds):
        cells = [str(b)] + [str(series.counts[label][idx]) for label in CLASS_LABELS]
        print("  ".join(c.rjust(w) for c, w in zip(cells, widths)))
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    rows = []
    for point in enumerate_bundle(cfg.height_bound):
        record = classify_point(point)
        rows.append(point_row(record, anticanonical_height(point.x, point.y)))
    return _write_text(cfg.output_path, "\n".join(rows) + "\n" if rows else "")


# ---------------------------------------------------------------------------
# pointwise commands

def cmd_classify(x_text: str, y_text: str) -> int:
    x = _parse_point(x_text)
    y = _parse_point(y_text)
    try:
        point = BundlePoint(x, y)
    except NotOnVariety:
        print(f"point ({x}, {y}) is not on the bundle", file=sys.stderr)
        return EXIT_DOMAIN
    record = classify_point(point)
    print(f"x: {record.point.x}")
    print(f"y: {record.point.y}")
    for pairing in sorted(record.in_V):
        print(f"in_V{pairing}: {_yn(record.in_V[pairing])}   liftable{pairing}: {_yn(record.liftable[pairing])}")
    print(f"singular_fiber: {_yn(record.singular_fiber)}")
    rank = record.fiber_rank
    print(f"fiber_rank: {'-' if rank is None else rank}")
    print(f"in_Z: {_yn(record.in_Z)}")
    return EXIT_OK


def _yn(flag: bool) -> str:
    return "true" if flag else "false"


def _parse_surface(parts) -> DiagonalCubic:
    return DiagonalCubic(tuple(int(p) for p in parts))


def cmd_fiber_rank(parts) -> int:
    report = picard_rank(_parse_surface(parts))
    print(f"rank_over_Q: {report.rank_over_Q}")
    print(f"segre_rank_one: {_yn(report.segre_rank_one)}")
    print(f"orbit_sizes: {list(report.orbit_sizes)}")
    print(f"agreement: {_yn(report.agreement)}")
    return EXIT_OK


def cmd_lines(parts) -> int:
    surface = _parse_surface(parts)
    group = galois_group(surface)
    parts_list = orbits(group)
    orbit_of = {label: idx for idx, orbit in enumerate(parts_list) for label in orbit}
    print(f"surface: {' '.join(str(c) for c in surface.coefficients)}")
    print(f"galois_order: {len(group)}")
    for label in ALL_LINE_LABELS:
        row_sum = sum(
            incidence(label, other) for other in ALL_LINE_LABELS if other != label
        )
        print(
            f"line p{label.pairing} m{label.m} n{label.n}  orbit {orbit_of[label]}  meets {row_sum}"
        )
    print(f"orbit_sizes: {[len(o) for o in parts_list]}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# intersection identities

_IDENTITY_LABELS = (
    "(h1+h2)^2 * h1^2 * (a*h1+b*h2) = 3a+7b",
    "(2h1+h2)^2 * (a*h1^2+b*h1*h2) * h1 = 3a+13b",
    "deg(h1+h2) on a*h1^2+b*h1*h2+c*h2^2 = 3b+4c",
)


def _identity_checks(rng: random.Random):
    """The three symbolic identities, each evaluated at one random integer
    parameter point: (computed, expected) per identity."""
    a, b, c = (rng.randint(-50, 50) for _ in range(3))
    quad = DivisorClass({(2, 0): a, (1, 1): b})
    curve = DivisorClass({(2, 0): a, (1, 1): b, (0, 2): c})
    return [
        (intersect_on_bundle([H1 + H2, H1 + H2, H1, H1, a * H1 + b * H2]), 3 * a + 7 * b),
        (intersect_on_bundle([2 * H1 + H2, 2 * H1 + H2, quad, H1]), 3 * a + 13 * b),
        (intersect_on_bundle([H1 + H2, H1, H1, curve]), 3 * b + 4 * c),
    ]


def cmd_verify_intersections(seed: int, trials: int = 20) -> int:
    rng = random.Random(seed)
    ok = [True] * len(_IDENTITY_LABELS)
    for _ in range(trials):
        for slot, (got, expected) in enumerate(_identity_checks(rng)):
            ok[slot] = ok[slot] and got == expected
    for label, passed in zip(_IDENTITY_LABELS, ok):
        print(f"{'PASS' if passed else 'FAIL'}  {label}  ({trials} random points)")
    return EXIT_OK if all(ok) else 1


# ---------------------------------------------------------------------------
# rank survey

def random_surface(rng: random.Random) -> DiagonalCubic:
    return DiagonalCubic(
        tuple(rng.choice([v for v in range(-20, 21) if v]) for _ in range(4))
    )


def cmd_rank_survey(cfg: RunConfig) -> int:
    rng = random.Random(cfg.rng_seed)
    distribution: dict[int, int] = {}
    disagreements = 0
    for _ in range(cfg.sample_count):
        report = picard_rank(random_surface(rng))
        distribution[report.rank_over_Q] = distribution.get(report.rank_over_Q, 0) + 1
        if not report.agreement:
            disagreements += 1
    print(f"samples: {cfg.sample_count}  seed: {cfg.rng_seed}")
    for rank in sorted(distribution):
        print(f"rank {rank}: {distribution[rank]}")
    print(f"segre_disagreements: {disagreements}")
    return EXIT_OK if disagreements == 0 else 1


# ---------------------------------------------------------------------------
# plot

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def render_log_log_svg(bounds, series: dict[str, list[int]]) -> str:
    """Self-contained SVG: one log-log polyline per class."""
    width, height, margin = 720, 540, 70
    xs = [math.log10(b) for b in bounds]
    positive = [v for counts in series.values() for v in counts if v > 0]
    ys = [math.log10(v) for v in positive] or [0.0]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1
    if y_hi == y_lo:
        y_hi = y_lo + 1

    def sx(v: float) -> float:
        return margin + (v - x_lo) / (x_hi - x_lo) * (width - 2 * margin)

    def sy(v: float) -> float:
        return height - margin - (v - y_lo) / (y_hi - y_lo) * (height - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" stroke="black"/>',
        f'<text x="{width / 2:.1f}" y="{height - 15}" text-anchor="middle" '
        f'font-size="14">log10 B</text>',
        f'<text x="18" y="{height / 2:.1f}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 18 {height / 2:.1f})">log10 N</text>',
    ]
    for b, xv in zip(bounds, xs):
        parts.append(
            f'<line x1="{sx(xv):.1f}" y1="{height - margin}" x2="{sx(xv):.1f}" '
            f'y2="{height - margin + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{sx(xv):.1f}" y="{height - margin + 20}" text-anchor="middle" '
            f'font-size="12">{b}</text>'
        )
    tick = math.ceil(y_lo)
    while tick <= y_hi:
        parts.append(
            f'<line x1="{margin - 5}" y1="{sy(tick):.1f}" x2="{margin}" '
            f'y2="{sy(tick):.1f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{margin - 10}" y="{sy(tick) + 4:.1f}" text-anchor="end" '
            f'font-size="12">1e{tick}</text>'
        )
        tick += 1
    for idx, (label, counts) in enumerate(series.items()):
        color = _PALETTE[idx % len(_PALETTE)]
        coords = [
            f"{sx(math.log10(b)):.1f},{sy(math.log10(v)):.1f}"
            for b, v in zip(bounds, counts)
            if v > 0
        ]
        if coords:
            parts.append(
                f'<polyline points="{" ".join(coords)}" fill="none" stroke="{color}" '
                f'stroke-width="2"/>'
            )
        ly = margin + 18 * idx + 10
        parts.append(
            f'<line x1="{width - margin - 150}" y1="{ly}" x2="{width - margin - 120}" '
            f'y2="{ly}" stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{width - margin - 112}" y="{ly + 4}" font-size="12">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_plot(csv_path: str, svg_path: str) -> int:
    try:
        with open(csv_path) as handle:
            lines = [line.strip() for line in handle if line.strip()]
    except FileNotFoundError:
        print(f"error: no such file {csv_path}", file=sys.stderr)
        return EXIT_NOINPUT
    except OSError as exc:
        print(f"error: cannot read {csv_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    if len(lines) < 2:
        print("error: no rows", file=sys.stderr)
        return EXIT_DOMAIN
    header = lines[0].split(",")
    try:
        rows = [[int(cell) for cell in line.split(",")] for line in lines[1:]]
    except ValueError:
        print("error: malformed CSV body", file=sys.stderr)
        return EXIT_DOMAIN
    if any(len(row) != len(header) for row in rows):
        print("error: ragged CSV body", file=sys.stderr)
        return EXIT_DOMAIN
    bounds = [row[0] for row in rows]
    series = {label: [row[idx] for row in rows] for idx, label in enumerate(header) if idx}
    return _write_text(svg_path, render_log_log_svg(bounds, series))


# ---------------------------------------------------------------------------
# argument parsing

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicbundle",
        description="Rational points on the Fermat cubic surface bundle: "
        "enumeration, exceptional-set classification, fiber Picard ranks, "
        "and intersection-number checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="classified counting functions on a bounds grid")
    p.add_argument("--bounds", required=True, help="comma-separated ascending heights")
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--emit-points", action="store_true", help="also dump classified points")

    p = sub.add_parser("enumerate", help="dump all points up to a height bound")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("classify", help="classify one point x0:x1:x2:x3 y0:y1:y2:y3")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("fiber-rank", help="Picard rank of a diagonal cubic surface")
    p.add_argument("coefficients", nargs=4, type=int)

    p = sub.add_parser("lines", help="27 lines, Galois orbits and incidence counts")
    p.add_argument("coefficients", nargs=4, type=int)

    p = sub.add_parser("verify-intersections", help="check the intersection identities")
    p.add_argument("--seed", type=int, default=20240601)

    p = sub.add_parser("rank-survey", help="rank distribution over random surfaces")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=20240601)

    p = sub.add_parser("plot", help="render a count CSV as a log-log SVG chart")
    p.add_argument("csv_path")
    p.add_argument("svg_path")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "count":
            try:
                grid = tuple(int(part) for part in args.bounds.split(","))
            except ValueError:
                print(f"error: cannot parse bounds {args.bounds!r}", file=sys.stderr)
                return EXIT_USAGE
            cfg = RunConfig(
                command="count",
                bounds_grid=grid,
                workers=args.workers,
                output_path=args.out,
                emit_points=args.emit_points,
            )
            try:
                cfg.validate()
            except InvalidArgument as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_USAGE
            return cmd_count(cfg)
        if args.command == "enumerate":
            if args.bound < 1:
                print("error: bound must be >= 1", file=sys.stderr)
                return EXIT_USAGE
            return cmd_enumerate(
                RunConfig(command="enumerate", height_bound=args.bound, output_path=args.out)
            )
        if args.command == "classify":
            return cmd_classify(args.x, args.y)
        if args.command == "fiber-rank":
            return cmd_fiber_rank(args.coefficients)
        if args.command == "lines":
            return cmd_lines(args.coefficients)
        if args.command == "verify-intersections":
            return cmd_verify_intersections(args.seed)
        if args.command == "rank-survey":
            if args.samples < 1:
                print("error: samples must be >= 1", file=sys.stderr)
                return EXIT_USAGE
            return cmd_rank_survey(
                RunConfig(command="rank-survey", sample_count=args.samples, rng_seed=args.seed)
            )
        if args.command == "plot":
            return cmd_plot(args.csv_path, args.svg_path)
    except (InvalidPoint, InvalidArgument, NotOnVariety) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
