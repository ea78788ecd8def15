"""Bounded-height enumeration of rational points on the bundle.

The anticanonical height H(x)^3 * H(y) splits the search: the outer loop
runs over the few normalized x with H(x)^3 <= B, the inner loop enumerates
the cubic-surface fiber above x up to the shrunken bound floor(B/H(x)^3).

Fiber enumeration is exact and case-split on the number of nonzero
coordinates of x:

* one nonzero coordinate: the rational locus is the coordinate plane
  y_i = 0, generated directly in canonical form;
* two nonzero coordinates x_i, x_j: solutions have y_i*d = y_j*c for the
  reduced rational cube root c/d of -x_j/x_i when it exists (a plane,
  parametrized directly), else y_i = y_j = 0 (a line);
* three or four nonzero coordinates: a genuine cubic surface, enumerated
  by a meet-in-the-middle split of the quadruple box — hash the values of
  x_0*y_0^3 + x_1*y_1^3, scan the complementary pairs, deduplicate through
  canonical normalization.

Output is always sorted lexicographically, so runs are reproducible byte
for byte and the outer loop parallelizes without affecting results.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    InvalidArgument,
    ProjectivePoint,
    exact_cube_root,
    naive_height,
    normalize,
)
from .geometry import BundlePoint, pairing_pairs

#: CSV column order for count series
CLASS_LABELS = ("ALL", "IN_Z", "NOT_IN_Z", "IN_SOME_V", "LIFTABLE_ONLY", "SINGULAR_FIBER")


@dataclass
class CountSeries:
    """Counting-function values N(class, B) on an ascending grid of bounds."""

    bounds: tuple[int, ...]
    counts: dict[str, list[int]] = field(default_factory=dict)

    def csv_text(self) -> str:
        lines = ["B," + ",".join(CLASS_LABELS)]
        for idx, b in enumerate(self.bounds):
            lines.append(
                str(b) + "," + ",".join(str(self.counts[label][idx]) for label in CLASS_LABELS)
            )
        return "\n".join(lines) + "\n"


def canonical_coords(dim: int, bound: int):
    """Canonical coordinate tuples of P^(dim-1) points with naive height
    <= bound, in lexicographic order."""
    for coords in itertools.product(range(-bound, bound + 1), repeat=dim):
        if not any(coords):
            continue
        first = next(c for c in coords if c)
        if first < 0:
            continue
        if math.gcd(*(abs(c) for c in coords)) != 1:
            continue
        yield coords


def canonical_points(dim: int, bound: int) -> list[ProjectivePoint]:
    return [ProjectivePoint(c) for c in canonical_coords(dim, bound)]


def _embed(positions, values) -> tuple[int, ...]:
    coords = [0, 0, 0, 0]
    for pos, v in zip(positions, values):
        coords[pos] = v
    return tuple(coords)


def _fiber_coords_plane(zero_positions, bound):
    """Fibers whose rational points fill the plane y_i = 0 (x = h*e_i)."""
    free = [i for i in range(4) if i not in zero_positions]
    return [_embed(free, triple) for triple in canonical_coords(3, bound)]


def _fiber_coords_two_terms(xs, nz, bound):
    """Fibers x_i*y_i^3 + x_j*y_j^3 = 0 with the other two y free."""
    i, j = nz
    free = [k for k in range(4) if k not in nz]
    ratio = Fraction(-xs[j], xs[i])
    c = exact_cube_root(ratio.numerator)
    d = exact_cube_root(ratio.denominator)
    if c is None or d is None:
        # only y_i = y_j = 0: a line in the two free coordinates
        return [_embed(free, pair) for pair in canonical_coords(2, bound)]
    # plane (y_i, y_j) = (c*t, d*t); t = 0 recovers the line above
    out = []
    t_max = bound // max(abs(c), abs(d))
    for t in range(-t_max, t_max + 1):
        for u in range(-bound, bound + 1):
            for v in range(-bound, bound + 1):
                if math.gcd(t, u, v) != 1:
                    continue
                coords = [0, 0, 0, 0]
                coords[i] = c * t
                coords[j] = d * t
                coords[free[0]] = u
                coords[free[1]] = v
                first = next(w for w in coords if w)
                if first > 0:
                    out.append(tuple(coords))
    return out


def _fiber_coords_surface(xs, bound):
    """Meet-in-the-middle over the box: hash one half of the cubic form,
    scan the other."""
    cubes = {k: k ** 3 for k in range(-bound, bound + 1)}
    rng = range(-bound, bound + 1)
    x0, x1, x2, x3 = xs
    table: dict[int, list[tuple[int, int]]] = {}
    for ya in rng:
        va = x0 * cubes[ya]
        for yb in rng:
            table.setdefault(va + x1 * cubes[yb], []).append((ya, yb))
    found: set[tuple[int, ...]] = set()
    for yc in rng:
        vc = x2 * cubes[yc]
        for yd in rng:
            hits = table.get(-(vc + x3 * cubes[yd]))
            if not hits:
                continue
            for ya, yb in hits:
                if ya or yb or yc or yd:
                    found.add(normalize((ya, yb, yc, yd)).coords)
    return sorted(found)


def enumerate_fiber(x: ProjectivePoint, y_height_bound: int) -> list[ProjectivePoint]:
    """All normalized y with H(y) <= bound on the cubic surface above x,
    each exactly once, sorted by coordinates."""
    if y_height_bound < 1:
        return []
    xs = x.coords
    nz = [i for i, c in enumerate(xs) if c]
    if len(nz) == 1:
        coords = _fiber_coords_plane(nz, y_height_bound)
    elif len(nz) == 2:
        coords = _fiber_coords_two_terms(xs, nz, y_height_bound)
    else:
        coords = _fiber_coords_surface(xs, y_height_bound)
    return [ProjectivePoint(c) for c in sorted(coords)]


def base_points(height_bound: int) -> list[ProjectivePoint]:
    """Normalized x with H(x)^3 <= height_bound, in lexicographic order."""
    x_max = 1
    while (x_max + 1) ** 3 <= height_bound:
        x_max += 1
    return canonical_points(4, x_max)


def enumerate_bundle(height_bound: int):
    """Stream every bundle point with anticanonical height <= height_bound
    exactly once, lexicographically in normalized x then y."""
    if height_bound < 1:
        raise InvalidArgument("height bound must be >= 1")
    for x in base_points(height_bound):
        fiber_bound = height_bound // naive_height(x) ** 3
        for y in enumerate_fiber(x, fiber_bound):
            yield BundlePoint(x, y)


def _classify_fiber(args):
    """Worker task: per-bound, per-class counts (and point rows) for the
    fiber above one base point."""
    x_coords, bounds, classifier, emit_points = args
    x = ProjectivePoint(x_coords)
    hx3 = naive_height(x) ** 3
    top = bounds[-1] // hx3
    tallies = {label: [0] * len(bounds) for label in CLASS_LABELS}
    rows = []
    for y in enumerate_fiber(x, top):
        record = classifier(BundlePoint(x, y))
        height = hx3 * naive_height(y)
        labels = ["ALL", "IN_Z" if record.in_Z else "NOT_IN_Z"]
        if any(record.in_V.values()):
            labels.append("IN_SOME_V")
        elif record.in_Z:
            labels.append("LIFTABLE_ONLY")
        if record.singular_fiber:
            labels.append("SINGULAR_FIBER")
        for idx, b in enumerate(bounds):
            if height <= b:
                for label in labels:
                    tallies[label][idx] += 1
        if emit_points:
            rows.append(point_row(record, height))
    return tallies, rows


def point_row(record, height: int) -> str:
    """One dump line: x|y|height|class-flags."""
    flags = []
    if record.in_Z:
        flags.append("Z")
    flags.extend(f"V{p}" for p in sorted(record.in_V) if record.in_V[p])
    flags.extend(f"L{p}" for p in sorted(record.liftable) if record.liftable[p])
    if record.singular_fiber:
        flags.append("SING")
    return f"{record.point.x}|{record.point.y}|{height}|{','.join(flags) or '-'}"


def count_series(height_bounds, classifier, workers: int = 1, emit_points: bool = False):
    """Classified counting functions on an ascending grid of bounds.

    One enumeration pass at the largest bound; every point is classified
    once and thresholded into each bound.  IN_SOME_V and LIFTABLE_ONLY
    partition IN_Z: points on some pair locus versus points swept in only
    through liftability of their base point.

    The outer loop over base points splits across worker processes;
    merging is order-independent, so any worker count produces identical
    output.  Returns (CountSeries, sorted point rows) — rows empty unless
    emit_points.
    """
    bounds = tuple(int(b) for b in height_bounds)
    if not bounds:
        raise InvalidArgument("empty bounds grid")
    if any(b < 1 for b in bounds) or any(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:])):
        raise InvalidArgument("bounds must be positive and strictly ascending")
    tasks = [(x.coords, bounds, classifier, emit_points) for x in base_points(bounds[-1])]
    totals = {label: [0] * len(bounds) for label in CLASS_LABELS}
    all_rows: list[str] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_classify_fiber, tasks, chunksize=8)
            for tallies, rows in results:
                _merge(totals, tallies)
                all_rows.extend(rows)
    else:
        for task in tasks:
            tallies, rows = _classify_fiber(task)
            _merge(totals, tallies)
            all_rows.extend(rows)
    return CountSeries(bounds, totals), sorted(all_rows)


def _merge(totals, tallies) -> None:
    for label, counts in tallies.items():
        acc = totals[label]
        for idx, v in enumerate(counts):
            acc[idx] += v


@dataclass(frozen=True)
class LineSpec:
    """A line on the bundle above a fixed base point: pairing plus the two
    signs (s1, s2) of the relations y_i = s1*y_j, y_k = s2*y_l."""

    x: ProjectivePoint
    pairing: int
    first_sign: int
    second_sign: int

    def __post_init__(self) -> None:
        if self.first_sign not in (-1, 1) or self.second_sign not in (-1, 1):
            raise InvalidArgument("line signs must be +1 or -1")
        (i, j), (k, l) = pairing_pairs(self.pairing)
        c = self.x.coords
        # substituting y_i = s1*y_j kills the pair-sum iff s1*x_i + x_j = 0
        if self.first_sign * c[i] + c[j] != 0 or self.second_sign * c[k] + c[l] != 0:
            raise InvalidArgument(f"line is not on the bundle above {self.x}")


def projective_line_count(height_bound: int) -> int:
    """Number of normalized points of P^1(Q) with naive height <= bound."""
    if height_bound < 1:
        return 0
    total = 1  # (0:1)
    for s in range(1, height_bound + 1):
        for t in range(-height_bound, height_bound + 1):
            if math.gcd(s, abs(t)) == 1:
                total += 1
    return total


def line_count(spec: LineSpec, height_bound: int) -> int:
    """Points of naive height <= bound on the parametrized line: the count
    of height-bounded normalized points of P^1."""
    return projective_line_count(height_bound)
