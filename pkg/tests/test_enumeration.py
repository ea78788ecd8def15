import itertools
import math

import pytest

from cubicbundle.arith import InvalidArgument, anticanonical_height, naive_height, normalize
from cubicbundle.classify import classify_point
from cubicbundle.enumeration import (
    CLASS_LABELS,
    LineSpec,
    base_points,
    canonical_points,
    count_series,
    enumerate_bundle,
    enumerate_fiber,
    line_count,
    projective_line_count,
)


def brute_force_bundle(height_bound):
    """Quadruple-nested scan of the integer height box, then normalize."""
    found = set()
    x_max = 1
    while (x_max + 1) ** 3 <= height_bound:
        x_max += 1
    for xs in itertools.product(range(-x_max, x_max + 1), repeat=4):
        if not any(xs):
            continue
        hx = max(abs(c) for c in xs)
        y_cap = height_bound // hx ** 3
        for ys in itertools.product(range(-y_cap, y_cap + 1), repeat=4):
            if not any(ys):
                continue
            if sum(a * b ** 3 for a, b in zip(xs, ys)) != 0:
                continue
            found.add((normalize(xs).coords, normalize(ys).coords))
    return found


class TestFiber:
    def test_unit_fiber_bound_one(self):
        fiber = enumerate_fiber(normalize([1, 1, 1, 1]), 1)
        assert len(fiber) == 9  # frozen via the box brute force
        coords = {y.coords for y in fiber}
        assert (1, -1, 0, 0) in coords
        assert (0, 1, 0, -1) in coords
        assert (1, -1, 1, -1) in coords

    def test_plane_fiber(self):
        fiber = enumerate_fiber(normalize([1, 0, 0, 0]), 1)
        assert all(y.coords[0] == 0 for y in fiber)
        # all 13 canonical points of P^2 with height <= 1 appear
        assert len(fiber) == 13

    def test_bound_zero_empty(self):
        assert enumerate_fiber(normalize([1, 2, 3, 4]), 0) == []

    def test_two_term_cube_fiber(self):
        fiber = enumerate_fiber(normalize([1, -8, 0, 0]), 4)
        for y in fiber:
            assert y.coords[0] ** 3 == 8 * y.coords[1] ** 3
        assert any(y.coords[:2] == (2, 1) for y in fiber)

    def test_two_term_noncube_fiber(self):
        fiber = enumerate_fiber(normalize([1, -2, 0, 0]), 3)
        assert all(y.coords[0] == y.coords[1] == 0 for y in fiber)

    @pytest.mark.parametrize("xs", [(1, 1, 1, 1), (1, 0, 0, 2), (0, 1, -1, 3), (1, 2, 3, 4)])
    def test_matches_box_scan(self, xs):
        bound = 3
        x = normalize(xs)
        expected = set()
        for ys in itertools.product(range(-bound, bound + 1), repeat=4):
            if not any(ys):
                continue
            if sum(a * b ** 3 for a, b in zip(x.coords, ys)) == 0:
                expected.add(normalize(ys).coords)
        assert {y.coords for y in enumerate_fiber(x, bound)} == expected

    def test_sorted_and_duplicate_free(self):
        fiber = enumerate_fiber(normalize([1, 1, 1, 1]), 5)
        coords = [y.coords for y in fiber]
        assert coords == sorted(set(coords))


class TestBundleEnumeration:
    def test_b1_pin(self):
        assert sum(1 for _ in enumerate_bundle(1)) == 440

    @pytest.mark.parametrize("bound", [1, 2, 3])
    def test_oracle_equivalence(self, bound):
        mine = {(p.x.coords, p.y.coords) for p in enumerate_bundle(bound)}
        assert mine == brute_force_bundle(bound)

    def test_no_duplicates(self):
        points = [(p.x.coords, p.y.coords) for p in enumerate_bundle(4)]
        assert len(points) == len(set(points))

    def test_deterministic_stream(self):
        first = [(p.x.coords, p.y.coords) for p in enumerate_bundle(3)]
        second = [(p.x.coords, p.y.coords) for p in enumerate_bundle(3)]
        assert first == second

    def test_heights_respect_bound(self):
        for p in enumerate_bundle(8):
            assert anticanonical_height(p.x, p.y) <= 8

    def test_height_split(self):
        # base points of height 2 appear exactly when 8 <= B
        assert all(naive_height(x) == 1 for x in base_points(7))
        assert any(naive_height(x) == 2 for x in base_points(8))

    def test_rejects_zero_bound(self):
        with pytest.raises(InvalidArgument):
            list(enumerate_bundle(0))


class TestCountSeries:
    def test_b1_consistency(self):
        series, _ = count_series([1], classify_point)
        assert series.counts["ALL"][0] == 440

    def test_partition_and_monotonicity(self):
        series, _ = count_series([1, 2, 4, 8], classify_point)
        for idx in range(4):
            total = series.counts["ALL"][idx]
            assert total == series.counts["IN_Z"][idx] + series.counts["NOT_IN_Z"][idx]
            assert series.counts["IN_SOME_V"][idx] <= series.counts["IN_Z"][idx]
            assert series.counts["LIFTABLE_ONLY"][idx] <= series.counts["IN_Z"][idx]
        for label in CLASS_LABELS:
            counts = series.counts[label]
            assert all(a <= b for a, b in zip(counts, counts[1:]))

    def test_worker_counts_agree(self):
        solo, _ = count_series([1, 2, 4], classify_point, workers=1)
        duo, _ = count_series([1, 2, 4], classify_point, workers=2)
        trio, _ = count_series([1, 2, 4], classify_point, workers=3)
        assert solo.counts == duo.counts == trio.counts

    def test_point_rows_sorted(self):
        _, rows = count_series([2], classify_point, emit_points=True)
        assert rows == sorted(rows)
        assert all(len(row.split("|")) == 4 for row in rows)

    def test_rejects_bad_grids(self):
        with pytest.raises(InvalidArgument):
            count_series([], classify_point)
        with pytest.raises(InvalidArgument):
            count_series([2, 2], classify_point)
        with pytest.raises(InvalidArgument):
            count_series([4, 2], classify_point)

    def test_csv_shape(self):
        series, _ = count_series([1, 2], classify_point)
        lines = series.csv_text().strip().split("\n")
        assert lines[0] == "B," + ",".join(CLASS_LABELS)
        assert len(lines) == 3


class TestLineCount:
    def test_p1_pins(self):
        assert projective_line_count(1) == 4
        assert projective_line_count(2) == 8

    def test_line_spec_accepts_fermat_line(self):
        spec = LineSpec(normalize([1, 1, 1, 1]), pairing=1, first_sign=-1, second_sign=-1)
        assert line_count(spec, 1) == 4
        assert line_count(spec, 2) == 8

    def test_line_spec_rejects_off_bundle(self):
        with pytest.raises(InvalidArgument):
            LineSpec(normalize([1, 1, 1, 2]), pairing=1, first_sign=-1, second_sign=-1)
        with pytest.raises(InvalidArgument):
            LineSpec(normalize([1, 1, 1, 1]), pairing=1, first_sign=-1, second_sign=2)

    def test_counts_match_enumeration(self):
        # points on the line y0 = -y1, y2 = -y3 inside the Fermat fiber
        spec = LineSpec(normalize([1, 1, 1, 1]), pairing=1, first_sign=-1, second_sign=-1)
        for bound in (1, 2, 5, 9):
            on_line = [
                y
                for y in enumerate_fiber(normalize([1, 1, 1, 1]), bound)
                if y.coords[0] == -y.coords[1] and y.coords[2] == -y.coords[3]
            ]
            assert len(on_line) == line_count(spec, bound)

    def test_growth_exponent(self):
        bounds = [50, 100, 200, 400, 800]
        counts = [projective_line_count(b) for b in bounds]
        logs = [(math.log(b), math.log(n)) for b, n in zip(bounds, counts)]
        mean_x = sum(x for x, _ in logs) / len(logs)
        mean_y = sum(y for _, y in logs) / len(logs)
        slope = sum((x - mean_x) * (y - mean_y) for x, y in logs) / sum(
            (x - mean_x) ** 2 for x, _ in logs
        )
        assert 1.85 <= slope <= 2.15

    def test_asymptotic_band(self):
        # N(B) / ((2/zeta(2)) B^2) -> 1
        b = 800
        expected = 12 / math.pi ** 2 * b ** 2
        assert abs(projective_line_count(b) / expected - 1) < 0.01


class TestCanonicalPoints:
    def test_projective_plane_height_one(self):
        assert len(canonical_points(3, 1)) == 13

    def test_all_canonical(self):
        for p in canonical_points(4, 2):
            assert math.gcd(*(abs(c) for c in p.coords)) == 1
            assert next(c for c in p.coords if c) > 0
