import random

import pytest

from conftest import five_punctured, load_fixture
from curve_spectra.analysis import (
    DistanceClass,
    classify_distance,
    curve_is_essential,
    cut_along,
    disjoint_curve_classes,
    find_bigons,
    intersection_number,
    is_filling,
    reduce,
    remove_bigon,
)
from curve_spectra.constructions import finger_move
from curve_spectra.errors import PreconditionViolated, ReductionToDisjoint
from curve_spectra.ribbon import ALPHA, BETA, BoundedType, Region, surface_type, validate
from curve_spectra.search import canonical_form, enumerate_configurations


def test_f05_is_distance_two(f05):
    assert find_bigons(f05) == []
    assert intersection_number(f05) == 2
    assert classify_distance(f05) is DistanceClass.EXACTLY_TWO


def test_cut_along_f05(f05):
    for lab in (ALPHA, BETA):
        assert sorted(cut_along(f05, lab)) == [BoundedType(0, 1, 2), BoundedType(0, 1, 3)]
        assert curve_is_essential(f05, lab)


def test_cut_along_keeps_euler_characteristic(f05):
    # cutting along a curve does not change chi; it adds two boundary circles
    for lab in (ALPHA, BETA):
        parts = cut_along(f05, lab)
        assert sum(p.euler_characteristic for p in parts) == -3
        assert sum(p.boundary for p in parts) == 2


def test_unpunctured_bigon_is_removed():
    cfg = five_punctured((3, 1, 1, 0))
    bigons = find_bigons(cfg)
    assert [b.face for b in bigons] == [3]
    # two vertices only: removing the bigon pulls the curves apart
    with pytest.raises(ReductionToDisjoint):
        remove_bigon(cfg, bigons[0])
    assert reduce(cfg).disjoint
    assert intersection_number(cfg) == 0


def _disjoint_after_reduction():
    for cfg in enumerate_configurations(0, 6, 4, minimal=False):
        if find_bigons(cfg) and reduce(cfg).disjoint:
            return cfg
    raise AssertionError("no example found")


def test_distance_at_most_one():
    cfg = _disjoint_after_reduction()
    assert classify_distance(cfg) is DistanceClass.AT_MOST_ONE
    assert not is_filling(cfg)


def test_finger_move_then_reduce_restores(f05):
    moved, (b1, b2) = finger_move(f05)
    assert moved.n_vertices == 4
    assert {b.face for b in find_bigons(moved)} == {b1, b2}
    red = reduce(moved)
    assert red.removed == 1
    assert canonical_form(red.config) == canonical_form(f05)


def _four_vertex_one_bigon():
    for g, n in [(0, 5), (0, 6), (1, 2), (2, 0)]:
        for cfg in enumerate_configurations(g, n, 4, minimal=False):
            if cfg.n_vertices == 4 and len(find_bigons(cfg)) == 1:
                yield cfg


def test_remove_bigon_on_all_four_vertex_configs():
    seen = 0
    for cfg in _four_vertex_one_bigon():
        out = remove_bigon(cfg, find_bigons(cfg)[0])
        assert out.n_vertices == 2
        assert validate(out, allow_sporadic=True).ok
        assert surface_type(out) == surface_type(cfg)
        seen += 1
    assert seen > 10


def test_reduce_order_independent_small():
    rnd = random.Random(7)
    for cfg in enumerate_configurations(1, 2, 5, minimal=False):
        if len(find_bigons(cfg)) < 2:
            continue
        outs = set()
        for pick in (lambda b: b[0], lambda b: b[-1], lambda b: rnd.choice(b)):
            red = reduce(cfg, pick)
            outs.add(None if red.disjoint else canonical_form(red.config))
        assert len(outs) == 1


def test_inessential_curve_is_rejected():
    # the empty bigon leaves alpha bounding a once-punctured disk
    cfg = five_punctured((3, 1, 1, 0))
    assert not curve_is_essential(cfg, ALPHA)
    assert any(p.is_disk_like for p in cut_along(cfg, ALPHA))
    with pytest.raises(PreconditionViolated):
        classify_distance(cfg)


def test_disjoint_classes_need_reduced_input():
    cfg = five_punctured((3, 1, 1, 0))
    with pytest.raises(PreconditionViolated):
        disjoint_curve_classes(cfg)


def test_far_fixture_fills():
    far = load_fixture("far_0_5")
    assert is_filling(far)
    assert classify_distance(far) is DistanceClass.AT_LEAST_THREE


def test_annulus_region_gives_one_class():
    from curve_spectra.ribbon import from_beta_sequence

    base = from_beta_sequence([0, 1], [1, -1])
    # faces 0 and 2 joined by an annulus: genus 1, one class across the annulus
    cfg = base.with_regions([Region((0, 2), 0, 0), Region((1,), 0, 1), Region((3,), 0, 1)])
    assert surface_type(cfg) == (1, 2)
    dc = disjoint_curve_classes(cfg)
    assert [c.cycles for c in dc.classes] == [(0, 2)]


def test_filling_iff_far_on_small_universe():
    for g, n in [(0, 6), (1, 2), (2, 0)]:
        for cfg in enumerate_configurations(g, n, 6):
            far = classify_distance(cfg) is DistanceClass.AT_LEAST_THREE
            assert far == is_filling(cfg)
