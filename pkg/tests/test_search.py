import io
import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import five_punctured
from curve_spectra.errors import SporadicSurface
from curve_spectra.ribbon import Region, decode, from_beta_sequence, relabel, validate
from curve_spectra.search import (
    canonical_form,
    empirical_spectrum,
    enumerate_configurations,
    face_statistics,
    find_filling_pair,
    meander_sequences,
    naive_configurations,
    enumerate_keyed,
    verify_theorems,
    write_ndjson,
)


def _mirror(cfg):
    """Reverse the orientation: every rotation row read backwards."""
    rows = [tuple(reversed(r)) for r in cfg.rotation]
    bare = type(cfg)(rows, cfg.pairing, cfg.labels, ())
    # the face through corner (d, rot d) becomes the one through (rot d, d)
    face_map = {f.id: bare.face_of[cfg.rot[f.darts[0]]] for f in cfg.faces}
    regs = [Region(tuple(face_map[c] for c in r.cycles), r.genus, r.punctures) for r in cfg.regions]
    return bare.with_regions(regs)


def test_key_is_bytes_and_deterministic(f05):
    k = canonical_form(f05)
    assert isinstance(k, bytes)
    assert k == canonical_form(f05)


def test_key_invariant_under_vertex_relabelling(f05):
    # swap the two vertices
    moved = relabel(f05, [4, 5, 6, 7, 0, 1, 2, 3])
    assert canonical_form(moved) == canonical_form(f05)


def test_key_invariant_under_rotation_and_swap(f05):
    # rotate the darts at each vertex by one step: alpha and beta trade places
    turned = relabel(f05, [1, 2, 3, 0, 5, 6, 7, 4])
    assert canonical_form(turned) == canonical_form(f05)
    swapped = relabel(f05, list(range(8)), swap_curves=True)
    assert canonical_form(swapped) == canonical_form(f05)


def test_f05_symmetry_moves_puncture_pair():
    keys = {canonical_form(five_punctured(p)) for p in set(itertools.permutations((2, 1, 1, 1)))}
    assert len(keys) == 1


def test_different_surfaces_have_different_keys(f05):
    assert canonical_form(f05) != canonical_form(five_punctured((2, 2, 1, 1)))


def test_mirror_flag():
    cfg = from_beta_sequence([0, 2, 1, 3, 4], [1, 1, -1, 1, -1])
    cfg = cfg.with_regions([Region((f.id,), 0, i) for i, f in enumerate(cfg.faces)])
    mir = _mirror(cfg)
    assert validate(mir, allow_sporadic=True).ok
    assert canonical_form(mir, mirror=True) == canonical_form(cfg, mirror=True)


_POOL = list(enumerate_configurations(1, 3, 5))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(_POOL), st.randoms(use_true_random=False), st.booleans())
def test_key_invariant_property(cfg, rnd, swap):
    perm = list(range(cfg.n_darts))
    rnd.shuffle(perm)
    assert canonical_form(relabel(cfg, perm, swap_curves=swap)) == canonical_form(cfg)


def test_keys_separate_enumerated_classes():
    keys = [canonical_form(c) for c in _POOL]
    assert len(keys) == len(set(keys))


def test_face_statistics_match_scalar_code():
    rows = [((0,) + p, (1,) + s) for p in itertools.permutations(range(1, 4))
            for s in itertools.product((1, -1), repeat=3)]
    orders = np.array([r[0] for r in rows])
    signs = np.array([r[1] for r in rows])
    nf, nb = face_statistics(orders, signs)
    for i, (o, s) in enumerate(rows):
        cfg = from_beta_sequence(o, s)
        assert nf[i] == len(cfg.faces)
        assert nb[i] == sum(1 for f in cfg.faces if len(f.darts) == 2)


def test_meanders_are_planar():
    seqs = list(meander_sequences(6))
    assert seqs
    for order, signs in seqs:
        assert from_beta_sequence(order, signs).graph_genus == 0


def test_enumerate_small_bounds(f05):
    assert canonical_form(f05) in {canonical_form(c) for c in enumerate_configurations(0, 5, 2)}
    for cfg in enumerate_configurations(0, 5, 1):
        assert validate(cfg).ok


def test_enumerate_counts_monotone():
    counts = [sum(1 for _ in enumerate_configurations(1, 2, v)) for v in range(1, 6)]
    assert counts == sorted(counts)


def test_enumerate_deterministic():
    a = [k for k, _ in enumerate_keyed(2, 0, 5)]
    b = [k for k, _ in enumerate_keyed(2, 0, 5)]
    assert a == b
    per_v = {}
    for k, c in enumerate_keyed(2, 0, 5):
        per_v.setdefault(c.n_vertices, []).append(k)
    assert all(v == sorted(v) for v in per_v.values())


def test_enumerate_parallel_matches_serial():
    serial = [k for k, _ in enumerate_keyed(1, 3, 5)]
    parallel = [k for k, _ in enumerate_keyed(1, 3, 5, jobs=2)]
    assert serial == parallel


def test_enumerate_rejects_sporadic():
    with pytest.raises(SporadicSurface):
        list(enumerate_configurations(0, 4, 3))


def test_naive_oracle_agrees_small():
    for g, n in [(0, 6), (1, 2)]:
        keys = {k for k, _ in enumerate_keyed(g, n, 4)}
        assert keys == naive_configurations(g, n, 4)


@pytest.mark.parametrize(
    "g, n, expected",
    [(0, 5, {1}), (1, 2, {1}), (0, 6, {1, 2})],
)
def test_empirical_spectrum(g, n, expected):
    rep = empirical_spectrum(g, n, 6)
    assert rep.attained == expected
    assert rep.max_attained == max(expected)
    assert rep.search_bound == 6
    tight = empirical_spectrum(g, n, 6, tight=True)
    assert tight.attained >= rep.attained


def test_spectrum_report_json():
    rep = empirical_spectrum(0, 6, 4)
    js = rep.to_json()
    assert js["lower_bound"] is True
    assert js["surface"] == [0, 6]


@pytest.mark.parametrize("g, n", [(0, 5), (2, 0), (1, 3)])
def test_verify_theorems(g, n):
    rep = verify_theorems(g, n, 6)
    assert rep.passed, rep.to_json()
    if (g, n) != (0, 5):
        assert rep.constructed == {1, 2}


def test_ndjson_stream():
    buf = io.StringIO()
    count = write_ndjson(enumerate_configurations(0, 6, 4), buf)
    lines = buf.getvalue().splitlines()
    assert len(lines) == count > 0
    assert all(validate(decode(line)).ok for line in lines)


def test_find_filling_pair_planar():
    cfg = find_filling_pair(0, 6, 8)
    assert cfg.n_vertices == 4
    assert all(r.type.is_disk_like for r in cfg.regions)
