"""Counting length-2 geodesics and tight geodesics between the two curves.

A middle vertex of a length-2 geodesic is an essential curve disjoint from both
curves, so it lives in one complementary region.  In a simple region every such
curve is parallel to a boundary cycle, hence one of the classes returned by
:func:`~curve_spectra.analysis.disjoint_curve_classes`.  A non-simple region
carries infinitely many.

Tightness at distance two: a boundary-parallel middle curve can only be crossed
by a curve that leaves its region, i.e. crosses ``alpha | beta``; a curve that is
not boundary parallel is crossed by another curve inside the same region.  So
the tight middle curves are exactly the essential boundary classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import (
    CurveClass,
    DistanceClass,
    classify_distance,
    disjoint_curve_classes,
    reduce,
)
from .errors import NotDistanceTwo
from .ribbon import Configuration


@dataclass(frozen=True)
class GeodesicCount:
    """Either finitely many geodesics (``count`` and their middle classes) or infinitely many."""

    finite: bool
    count: int | None = None
    classes: tuple[CurveClass, ...] = ()
    witness_region: int | None = None

    def to_json(self):
        if self.finite:
            return {"finite": True, "count": self.count}
        return {"finite": False, "witness": self.witness_region}


@dataclass(frozen=True)
class TightCount:
    count: int
    classes: tuple[CurveClass, ...]

    def to_json(self):
        return {"count": self.count}


def _distance_two(config: Configuration) -> Configuration:
    dist = classify_distance(config)
    if dist is not DistanceClass.EXACTLY_TWO:
        raise NotDistanceTwo(dist)
    return reduce(config).config


def count_geodesics(config: Configuration) -> GeodesicCount:
    red = _distance_two(config)
    dc = disjoint_curve_classes(red)
    if dc.nonsimple_regions:
        return GeodesicCount(False, witness_region=dc.nonsimple_regions[0])
    return GeodesicCount(True, len(dc.classes), dc.classes)


def count_tight_geodesics(config: Configuration) -> TightCount:
    red = _distance_two(config)
    dc = disjoint_curve_classes(red)
    return TightCount(len(dc.classes), dc.classes)


def check_finite_iff_tight(config: Configuration) -> bool:
    """Consistency probe: finitely many geodesics iff every geodesic is tight."""
    geo = count_geodesics(config)
    tight = count_tight_geodesics(config)
    if geo.finite:
        return geo.count == tight.count
    # infinitely many geodesics, finitely many tight ones
    return tight.count >= 1
