"""Membership in the thin exceptional set, point by point.

A bundle point lands in the exceptional set Z when it lies on a pair locus
V_tau for some pairing, or when its base point x admits a rational point of
the cube cover T_tau (liftability).  For smooth fibers, liftability for a
pairing tests cube-ness of exactly the ratio in Segre's criterion with the
fiber's coefficients, so "some pairing liftable" must agree with "fiber
Picard rank >= 2"; that cross-check is asserted on every classified point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import ProjectivePoint
from .geometry import (
    PAIRINGS,
    BundlePoint,
    in_pair_locus,
    liftable,
    over_singular_fiber,
)
from .picard import DiagonalCubic, picard_rank


@dataclass(frozen=True)
class ClassificationRecord:
    point: BundlePoint
    in_V: dict[int, bool]
    liftable: dict[int, bool]
    singular_fiber: bool
    fiber_rank: int | None  # present iff the fiber is smooth
    in_Z: bool


@lru_cache(maxsize=None)
def _fiber_profile(x_coords: tuple[int, ...]):
    """Per-fiber data shared by every point above x: liftability for each
    pairing, the singular flag, and the Picard rank of a smooth fiber.

    Memoized per normalized x; many points share a fiber and the rank
    computation is the expensive part.
    """
    x = ProjectivePoint(x_coords)
    lifts = {p: liftable(x, p) for p in PAIRINGS}
    singular = over_singular_fiber(x)
    rank = None
    if not singular:
        rank = picard_rank(DiagonalCubic(x_coords)).rank_over_Q
        # liftability tests the same cube ratios as Segre's criterion
        assert any(lifts.values()) == (rank >= 2), (x_coords, lifts, rank)
    return lifts, singular, rank


def classify_point(p: BundlePoint) -> ClassificationRecord:
    """Full verdict for one bundle point."""
    lifts, singular, rank = _fiber_profile(p.x.coords)
    in_v = {pairing: in_pair_locus(p, pairing) for pairing in PAIRINGS}
    return ClassificationRecord(
        point=p,
        in_V=in_v,
        liftable=dict(lifts),
        singular_fiber=singular,
        fiber_rank=rank,
        in_Z=any(in_v.values()) or any(lifts.values()),
    )


def z_membership(p: BundlePoint) -> bool:
    """Does the point belong to the exceptional set?"""
    return classify_point(p).in_Z
