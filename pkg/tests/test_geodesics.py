import pytest

from conftest import five_punctured, load_fixture
from curve_spectra.analysis import DistanceClass, classify_distance, disjoint_curve_classes
from curve_spectra.errors import NotDistanceTwo
from curve_spectra.geodesics import check_finite_iff_tight, count_geodesics, count_tight_geodesics
from curve_spectra.search import enumerate_configurations


def test_f05_has_one_geodesic(f05):
    geo = count_geodesics(f05)
    assert geo.finite and geo.count == 1
    assert geo.to_json() == {"finite": True, "count": 1}
    assert count_tight_geodesics(f05).count == 1


def test_three_punctures_in_one_face_is_infinite():
    cfg = five_punctured((3, 1, 1, 1))
    geo = count_geodesics(cfg)
    assert not geo.finite
    assert geo.to_json() == {"finite": False, "witness": 0}
    assert not cfg.regions[geo.witness_region].is_simple
    assert count_tight_geodesics(cfg).count == 1


def test_two_twice_punctured_faces():
    cfg = five_punctured((2, 2, 1, 1))
    assert count_geodesics(cfg).count == 2
    assert count_tight_geodesics(cfg).count == 2


def test_not_distance_two():
    with pytest.raises(NotDistanceTwo) as exc:
        count_geodesics(load_fixture("far_0_5"))
    assert exc.value.distance is DistanceClass.AT_LEAST_THREE
    near = next(
        c for c in enumerate_configurations(0, 6, 4, minimal=False)
        if classify_distance(c) is DistanceClass.AT_MOST_ONE
    )
    with pytest.raises(NotDistanceTwo):
        count_tight_geodesics(near)


@pytest.mark.parametrize("name", ["F05", "F06_two", "F06_infinite", "d2_g2_n0_k2", "d2_g3_n0_k4"])
def test_finite_iff_tight_on_fixtures(name):
    assert check_finite_iff_tight(load_fixture(name))


def test_face_count_bookkeeping():
    # every face cycle is one class before filtering, except the two sides of an
    # annulus, which are one class between them
    for g, n in [(1, 3), (2, 0)]:
        for cfg in enumerate_configurations(g, n, 6):
            dc = disjoint_curve_classes(cfg)
            annuli = sum(1 for r in cfg.regions if r.is_annulus)
            assert len(cfg.faces) == len(dc.all_classes) + annuli


def test_finite_iff_tight_on_universe():
    for cfg in enumerate_configurations(1, 3, 6):
        if classify_distance(cfg) is DistanceClass.EXACTLY_TWO:
            assert check_finite_iff_tight(cfg)
