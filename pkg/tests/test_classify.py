import pytest

from cubicbundle.arith import normalize
from cubicbundle.classify import classify_point, z_membership
from cubicbundle.enumeration import enumerate_bundle, enumerate_fiber
from cubicbundle.geometry import PAIRINGS, BundlePoint, NotOnVariety


def bundle_point(xs, ys):
    return BundlePoint(normalize(xs), normalize(ys))


class TestClassifyPoint:
    def test_pair_locus_point(self):
        record = classify_point(bundle_point([1, 1, 1, 1], [1, -1, 1, -1]))
        assert record.in_V[1]
        assert record.in_Z
        assert record.fiber_rank == 4
        assert not record.singular_fiber

    def test_rank_one_fiber_point(self):
        # found by enumeration above x = (1, 2, 3, 5): 1*1 + 2*1 + 3*(-1) + 5*0 = 0
        record = classify_point(bundle_point([1, 2, 3, 5], [1, 1, -1, 0]))
        assert record.fiber_rank == 1
        assert not any(record.liftable.values())
        assert record.in_Z == any(record.in_V.values())

    def test_singular_fiber_point(self):
        record = classify_point(bundle_point([0, 1, 1, 1], [9, 1, -1, 0]))
        assert record.singular_fiber
        assert record.fiber_rank is None
        assert record.in_Z

    def test_not_on_variety_rejected(self):
        with pytest.raises(NotOnVariety):
            bundle_point([1, 1, 1, 1], [1, 1, 1, 1])

    def test_z_membership_projection(self):
        assert z_membership(bundle_point([1, 1, 1, 1], [1, -1, 1, -1]))
        assert z_membership(bundle_point([0, 1, 1, 1], [9, 1, -1, 0]))

    def test_off_z_point_exists(self):
        # rank-1 fiber, point off every pair locus
        record = classify_point(bundle_point([1, 2, 3, 5], [1, 1, -1, 0]))
        if not any(record.in_V.values()):
            assert not record.in_Z


class TestInvariantsOnEnumeration:
    def test_totality_and_consistency(self):
        for point in enumerate_bundle(4):
            record = classify_point(point)
            assert record.in_Z == (any(record.in_V.values()) or any(record.liftable.values()))
            if record.singular_fiber:
                assert record.in_Z
                assert record.fiber_rank is None
            else:
                assert record.fiber_rank in (1, 2, 3, 4)
                assert any(record.liftable.values()) == (record.fiber_rank >= 2)

    def test_not_in_z_points_have_rank_one(self):
        seen_off_z = 0
        for point in enumerate_bundle(8):
            record = classify_point(point)
            if not record.in_Z:
                seen_off_z += 1
                assert record.fiber_rank == 1
                assert not any(record.in_V.values())
                assert not record.singular_fiber
        assert seen_off_z > 0

    def test_pair_locus_forces_z(self):
        for point in enumerate_bundle(4):
            record = classify_point(point)
            if any(record.in_V.values()):
                assert record.in_Z


class TestFiberMemoization:
    def test_shared_fiber_reuses_profile(self):
        x = normalize([1, 1, 1, 1])
        records = [
            classify_point(BundlePoint(x, y)) for y in enumerate_fiber(x, 2)
        ]
        ranks = {r.fiber_rank for r in records}
        assert ranks == {4}
        lifts = {tuple(sorted(r.liftable.items())) for r in records}
        assert len(lifts) == 1

    def test_in_v_varies_within_fiber(self):
        x = normalize([1, 1, 1, 1])
        flags = {
            tuple(r.in_V[p] for p in PAIRINGS)
            for r in (
                classify_point(BundlePoint(x, y)) for y in enumerate_fiber(x, 2)
            )
        }
        assert len(flags) > 1
