"""Canonical forms, bounded exhaustive enumeration and empirical spectra.

Enumeration works in two layers.  First every 4-valent graph carrying two
transverse simple closed curves with ``V`` crossings is generated: alpha visits
the vertices ``0 .. V-1`` in order, so a graph is fixed by the order in which
beta visits them and the side of alpha it leaves each vertex on (see
:func:`~curve_spectra.ribbon.from_beta_sequence`).  Face and bigon counts for
all such systems are computed in bulk with numpy and used to discard graphs that
cannot live on the target surface.  Second, every surviving graph is decorated
with all region tables (face partitions plus genus and punctures per region)
that give the target surface, and the results are deduplicated by canonical key.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .analysis import (
    DistanceClass,
    classify_distance,
    curve_is_essential,
    find_bigons,
    is_filling,
)
from .errors import CurveSpectraError
from .geodesics import check_finite_iff_tight, count_geodesics, count_tight_geodesics
from .ribbon import (
    ALPHA,
    BETA,
    Configuration,
    Region,
    SurfaceType,
    encode,
    from_beta_sequence,
    surface_type,
    validate,
)
from .theory import require_nonsporadic, spectrum_table, tight_upper_bound

# -- canonical form -------------------------------------------------------------


def _bfs_code(rot, pair, lab, start, best):
    """Code of the graph seen from ``start``, or None once it exceeds ``best``.

    Darts get new ids in breadth-first order over (rot, pair); dart ``i`` of the
    new numbering contributes ``(new rot, new pair, label differs from start)``.
    """
    n = len(pair)
    new = [-1] * n
    new[start] = 0
    queue = [start]
    code = []
    tie = best is not None
    s_lab = lab[start]
    i = 0
    while i < len(queue):
        d = queue[i]
        for nb in (rot[d], pair[d]):
            if new[nb] < 0:
                new[nb] = len(queue)
                queue.append(nb)
        entry = (new[rot[d]], new[pair[d]], lab[d] != s_lab)
        if tie:
            other = best[i]
            if entry > other:
                return None, None
            if entry < other:
                tie = False
        code.append(entry)
        i += 1
    return tuple(code), new


def graph_automorphisms(config: Configuration, mirror: bool = False):
    """Minimal graph code and every relabelling achieving it.

    Returns ``(code, starts)`` where each start is ``(new_ids, flipped)``.
    """
    variants = [(config.rot, False)]
    if mirror:
        variants.append((config.rot_inv, True))
    lab = config.dart_label
    pair = config.pairing
    best = None
    starts = []
    for rot, flipped in variants:
        for s in range(config.n_darts):
            code, new = _bfs_code(rot, pair, lab, s, best)
            if code is None:
                continue
            if best is None or code < best:
                best = code
                starts = [(new, flipped)]
            else:
                starts.append((new, flipped))
    return best, starts


def _face_keys(config: Configuration, new, flipped):
    rot = config.rot
    if flipped:
        return [min(new[rot[d]] for d in f.darts) for f in config.faces]
    return [min(new[d] for d in f.darts) for f in config.faces]


def _region_part(regions, face_keys):
    return tuple(
        sorted((r.genus, r.punctures, tuple(sorted(face_keys[c] for c in r.cycles))) for r in regions)
    )


def _key_bytes(V, code, region_part) -> bytes:
    flat = [x for entry in code for x in (entry[0], entry[1], int(entry[2]))]
    regs = [[g, p, list(k)] for g, p, k in region_part]
    return json.dumps([V, flat, regs], separators=(",", ":")).encode()


class _GraphCanon:
    """Graph-level canonical data reused for every region table on that graph."""

    def __init__(self, config: Configuration, mirror: bool = False):
        self.config = config
        self.code, starts = graph_automorphisms(config, mirror)
        self.face_keys = [_face_keys(config, new, flipped) for new, flipped in starts]

    def key(self, regions) -> bytes:
        part = min(_region_part(regions, fk) for fk in self.face_keys)
        return _key_bytes(self.config.n_vertices, self.code, part)


def canonical_form(config: Configuration, mirror: bool = False) -> bytes:
    """Isomorphism invariant key of a configuration.

    Invariant under dart relabelling, swapping the curves and reversing either
    curve; with ``mirror=True`` also under orientation reversal of the surface.
    """
    return _GraphCanon(config, mirror).key(config.regions)


# -- bulk graph generation ------------------------------------------------------

_ROT_CACHE = {}


def _rot_array(V):
    if V not in _ROT_CACHE:
        base = np.arange(4 * V).reshape(V, 4)
        _ROT_CACHE[V] = np.roll(base, -1, axis=1).reshape(-1)
    return _ROT_CACHE[V]


def _sign_rows(V):
    rest = np.array(list(itertools.product((1, -1), repeat=V - 1)), dtype=np.int8).reshape(2 ** (V - 1), V - 1)
    return np.hstack([np.ones((len(rest), 1), dtype=np.int8), rest])


def _perm_rows(V, chunk):
    """Beta orders starting at vertex 0, in lexicographic order, in chunks."""
    it = itertools.permutations(range(1, V))
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        arr = np.array(block, dtype=np.int16).reshape(len(block), V - 1)
        yield np.hstack([np.zeros((len(block), 1), dtype=np.int16), arr])


def face_statistics(orders: np.ndarray, signs: np.ndarray):
    """Vectorised face and bigon counts for a batch of beta sequences.

    Row ``i`` describes ``from_beta_sequence(orders[i], signs[i])``; returns
    ``(n_faces, n_bigons)`` as integer arrays.
    """
    N, V = orders.shape
    n = 4 * V
    idx = np.arange(V)
    pair = np.empty((N, n), dtype=np.int16)
    pair[:, 4 * idx] = 4 * ((idx + 1) % V) + 2
    pair[:, 4 * ((idx + 1) % V) + 2] = 4 * idx
    positive = signs > 0
    out_d = 4 * idx + np.where(positive, 1, 3)
    in_d = 4 * idx + np.where(positive, 3, 1)
    src = np.take_along_axis(out_d, orders.astype(np.intp), axis=1)
    dst = np.take_along_axis(in_d, np.roll(orders, -1, axis=1).astype(np.intp), axis=1)
    rows = np.arange(N)[:, None]
    pair[rows, src] = dst
    pair[rows, dst] = src

    nxt = pair[:, _rot_array(V)].astype(np.intp)
    lab = np.broadcast_to(np.arange(n), (N, n)).copy()
    ptr = nxt
    # pointer jumping: after k rounds lab[d] is the min over 2**k steps of the orbit
    for _ in range(max(1, math.ceil(math.log2(n)))):
        lab = np.minimum(lab, np.take_along_axis(lab, ptr, axis=1))
        ptr = np.take_along_axis(ptr, ptr, axis=1)
    n_faces = (lab == np.arange(n)).sum(axis=1)
    two = np.take_along_axis(nxt, nxt, axis=1) == np.arange(n)
    n_bigons = two.sum(axis=1) // 2
    return n_faces, n_bigons


def _feasible(V, n_faces, n_bigons, genus, punctures, minimal):
    gamma2 = V + 2 - n_faces
    ok = (gamma2 >= 0) & (gamma2 <= 2 * genus)
    if minimal:
        # a bigon face needs a puncture, a handle, or a merge (one merge absorbs two bigons)
        ok &= n_bigons <= punctures + (2 * genus - gamma2)
    return ok


_TABLE_CACHE = {}


def system_table(V: int, chunk: int = 2048):
    """All normalised beta sequences on ``V`` vertices with face and bigon counts.

    Computed once per process; returns ``(orders, signs, n_faces, n_bigons)``.
    """
    if V not in _TABLE_CACHE:
        signs = _sign_rows(V)
        S = len(signs)
        parts = []
        for perms in _perm_rows(V, chunk):
            orders = np.repeat(perms, S, axis=0)
            sg = np.tile(signs, (len(perms), 1))
            nf, nb = face_statistics(orders, sg)
            parts.append((orders, sg, nf.astype(np.int16), nb.astype(np.int16)))
        _TABLE_CACHE[V] = tuple(np.concatenate(col) for col in zip(*parts))
    return _TABLE_CACHE[V]


def beta_sequences(V: int, genus: int, punctures: int, minimal: bool = True):
    """Yield ``(order, signs)`` of every system whose graph fits on the surface."""
    orders, signs, nf, nb = system_table(V)
    keep = np.nonzero(_feasible(V, nf.astype(int), nb.astype(int), genus, punctures, minimal))[0]
    for i in keep:
        yield tuple(int(x) for x in orders[i]), tuple(int(x) for x in signs[i])


def graphs(V: int, genus: int, punctures: int, minimal: bool = True, mirror: bool = False):
    """One representative per isomorphism class of bare graph, in canonical order."""
    seen = {}
    for order, signs in beta_sequences(V, genus, punctures, minimal):
        cfg = from_beta_sequence(order, signs)
        gc = _GraphCanon(cfg, mirror)
        if gc.code not in seen:
            seen[gc.code] = gc
    return [seen[c] for c in sorted(seen)]


# -- region tables --------------------------------------------------------------


def _set_partitions(items, max_merges):
    """Set partitions of ``items`` with at most ``max_merges`` (= n - blocks)."""
    items = list(items)

    def rec(i, blocks, merges):
        if i == len(items):
            yield [tuple(b) for b in blocks]
            return
        x = items[i]
        if merges < max_merges:
            for b in blocks:
                b.append(x)
                yield from rec(i + 1, blocks, merges + 1)
                b.pop()
        blocks.append([x])
        yield from rec(i + 1, blocks, merges)
        blocks.pop()

    yield from rec(0, [], 0)


def _compositions(total, parts, minima=None):
    """Weak compositions of ``total`` into ``parts`` with per-part minima."""
    minima = minima or [0] * parts
    rest = total - sum(minima)
    if rest < 0 or parts == 0:
        if rest == 0 and parts == 0:
            yield ()
        return
    for bars in itertools.combinations(range(rest + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(rest + parts - 2 - prev)
        yield tuple(m + x for m, x in zip(minima, out))


def region_tables(config: Configuration, genus: int, punctures: int, minimal: bool = True):
    """Every region table on the graph of ``config`` giving surface ``(genus, punctures)``.

    With ``minimal`` an isolated unpunctured genus-0 bigon face is skipped (it
    would be an empty bigon).
    """
    faces = config.faces
    budget = genus - config.graph_genus
    if budget < 0:
        return
    bigon = [f.is_bigon_shaped for f in faces]
    for blocks in _set_partitions(range(len(faces)), budget):
        merges = len(faces) - len(blocks)
        r = len(blocks)
        for genera in _compositions(budget - merges, r):
            minima = None
            if minimal:
                minima = [
                    1 if (len(b) == 1 and bigon[b[0]] and gg == 0) else 0
                    for b, gg in zip(blocks, genera)
                ]
            for punct in _compositions(punctures, r, minima):
                yield tuple(Region(b, gg, p) for b, gg, p in zip(blocks, genera, punct))


def _decorate(gc: _GraphCanon, genus, punctures, minimal, essential):
    """Canonical keys and configurations for every admissible table on one graph."""
    out = {}
    bare = gc.config
    for regions in region_tables(bare, genus, punctures, minimal):
        key = gc.key(regions)
        if key in out:
            continue
        cfg = bare.with_regions(regions)
        if essential and not (curve_is_essential(cfg, ALPHA) and curve_is_essential(cfg, BETA)):
            continue
        out[key] = cfg
    return out


def _decorate_job(args):
    code_cfg, genus, punctures, minimal, essential, mirror = args
    gc = _GraphCanon(code_cfg, mirror)
    return _decorate(gc, genus, punctures, minimal, essential)


def enumerate_keyed(
    genus: int,
    punctures: int,
    max_v: int,
    *,
    minimal: bool = True,
    essential: bool = True,
    mirror: bool = False,
    jobs: int = 1,
    min_v: int = 1,
) -> Iterator[tuple[bytes, Configuration]]:
    """Like :func:`enumerate_configurations` but yields ``(key, config)``."""
    require_nonsporadic(genus, punctures)
    if max_v < 1:
        raise ValueError("max_v must be at least 1")
    for V in range(min_v, max_v + 1):
        gs = graphs(V, genus, punctures, minimal, mirror)
        found: dict[bytes, Configuration] = {}
        if jobs > 1 and len(gs) > 1:
            args = [(g.config, genus, punctures, minimal, essential, mirror) for g in gs]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for part in pool.map(_decorate_job, args, chunksize=max(1, len(args) // (4 * jobs))):
                    for k, c in part.items():
                        found.setdefault(k, c)
        else:
            for g in gs:
                for k, c in _decorate(g, genus, punctures, minimal, essential).items():
                    found.setdefault(k, c)
        for k in sorted(found):
            yield k, found[k]


def enumerate_configurations(genus: int, punctures: int, max_v: int, **kwargs) -> Iterator[Configuration]:
    """Every bigon-free configuration with both curves essential on ``(genus, punctures)``.

    One representative per isomorphism class with ``V <= max_v``, ordered by
    ``V`` and then by canonical key.  ``minimal=False`` keeps configurations
    with empty bigons; ``essential=False`` drops the essentiality filter.
    """
    for _, cfg in enumerate_keyed(genus, punctures, max_v, **kwargs):
        yield cfg


def write_ndjson(configs: Iterable[Configuration], stream) -> int:
    """Write one encoded configuration per line; returns the number written."""
    n = 0
    for cfg in configs:
        stream.write(encode(cfg).decode())
        n += 1
    return n


# -- naive oracle ---------------------------------------------------------------


def _perfect_matchings(items):
    items = list(items)
    if not items:
        yield []
        return
    a = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for m in _perfect_matchings(rest):
            yield [(a, items[i])] + m


def _single_curve(V, matching, parity):
    # curve darts at a vertex are 4v+parity and 4v+parity+2; straight through flips between them
    pair = {}
    for a, b in matching:
        pair[a] = b
        pair[b] = a
    start = parity
    d = start
    steps = 0
    while True:
        e = pair[d]
        d = e + 2 if e % 4 == parity else e - 2
        steps += 1
        if d == start:
            return steps == V
        if steps > V:
            return False


def naive_configurations(genus: int, punctures: int, max_v: int, mirror: bool = False) -> set[bytes]:
    """Canonical keys by brute force, sharing no generation code with the enumerator.

    Every vertex has darts ``4v .. 4v+3`` coloured ``ABAB``; all perfect
    matchings of the alpha darts and of the beta darts are tried, both curves
    must be connected, and every region table (any partition, any genus and
    puncture split) is checked with :func:`validate`, bigon search and the
    essentiality test.
    """
    keys = set()
    for V in range(1, max_v + 1):
        a_darts = [4 * v + k for v in range(V) for k in (0, 2)]
        b_darts = [4 * v + k for v in range(V) for k in (1, 3)]
        a_ms = [m for m in _perfect_matchings(a_darts) if _single_curve(V, m, 0)]
        b_ms = [m for m in _perfect_matchings(b_darts) if _single_curve(V, m, 1)]
        rotation = [(4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3) for v in range(V)]
        graphs_seen = set()
        for am in a_ms:
            for bm in b_ms:
                pairing = [0] * (4 * V)
                for x, y in am + bm:
                    pairing[x], pairing[y] = y, x
                labels = [ALPHA if d % 2 == 0 else BETA for d, e in enumerate(pairing) if d < e]
                bare = Configuration(rotation, pairing, labels, ())
                F = len(bare.faces)
                if (V + 2 - F) > 2 * genus:
                    continue
                gc = _GraphCanon(bare, mirror)
                if gc.code in graphs_seen:
                    continue
                graphs_seen.add(gc.code)
                for regions in _naive_tables(F, genus, punctures):
                    cfg = bare.with_regions(regions)
                    if not validate(cfg).ok or surface_type(cfg) != (genus, punctures):
                        continue
                    if find_bigons(cfg):
                        continue
                    if not (curve_is_essential(cfg, ALPHA) and curve_is_essential(cfg, BETA)):
                        continue
                    keys.add(gc.key(regions))
    return keys


def _naive_tables(F, genus, punctures):
    # restricted growth strings give each set partition once
    def partitions(i, labels, k):
        if i == F:
            yield list(labels)
            return
        for b in range(k + 1):
            labels.append(b)
            yield from partitions(i + 1, labels, max(k, b + 1))
            labels.pop()

    for labels in partitions(0, [], 0):
        r = max(labels) + 1
        blocks = [tuple(f for f in range(F) if labels[f] == b) for b in range(r)]
        for genera in itertools.product(range(genus + 1), repeat=r):
            if sum(genera) > genus:
                continue
            for punct in itertools.product(range(punctures + 1), repeat=r):
                if sum(punct) != punctures:
                    continue
                yield tuple(Region(b, gg, p) for b, gg, p in zip(blocks, genera, punct))


# -- spectra and verification ---------------------------------------------------


@dataclass
class SpectrumReport:
    """Finite counts seen at distance two; a lower bound on the true spectrum."""

    surface: SurfaceType
    attained: frozenset
    max_attained: int
    search_bound: int
    infinite_seen: bool
    tight: bool = False
    n_configurations: int = 0
    n_distance_two: int = 0

    def to_json(self):
        return {
            "surface": list(self.surface),
            "attained": sorted(self.attained),
            "max_attained": self.max_attained,
            "search_bound": self.search_bound,
            "infinite_seen": self.infinite_seen,
            "tight": self.tight,
            "configurations": self.n_configurations,
            "distance_two": self.n_distance_two,
            "lower_bound": True,
        }


def empirical_spectrum(genus: int, punctures: int, max_v: int, tight: bool = False, jobs: int = 1):
    attained = set()
    infinite = False
    total = d2 = 0
    for cfg in enumerate_configurations(genus, punctures, max_v, jobs=jobs):
        total += 1
        if classify_distance(cfg) is not DistanceClass.EXACTLY_TWO:
            continue
        d2 += 1
        if tight:
            attained.add(count_tight_geodesics(cfg).count)
        geo = count_geodesics(cfg)
        if geo.finite:
            if not tight:
                attained.add(geo.count)
        else:
            infinite = True
    return SpectrumReport(
        SurfaceType(genus, punctures),
        frozenset(attained),
        max(attained, default=0),
        max_v,
        infinite,
        tight,
        total,
        d2,
    )


@dataclass
class AssertionResult:
    name: str
    description: str
    passed: bool = True
    checked: int = 0
    counterexamples: list = field(default_factory=list)

    def fail(self, example):
        self.passed = False
        if len(self.counterexamples) < 5:
            self.counterexamples.append(example)

    def to_json(self):
        return {
            "description": self.description,
            "passed": self.passed,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
        }


@dataclass
class VerificationReport:
    surface: SurfaceType
    search_bound: int
    assertions: dict
    finite_counts: frozenset = frozenset()
    tight_counts: frozenset = frozenset()
    constructed: frozenset = frozenset()
    n_configurations: int = 0

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions.values())

    def to_json(self):
        return {
            "surface": list(self.surface),
            "search_bound": self.search_bound,
            "passed": self.passed,
            "configurations": self.n_configurations,
            "finite_counts": sorted(self.finite_counts),
            "tight_counts": sorted(self.tight_counts),
            "constructed": sorted(self.constructed),
            "assertions": {k: v.to_json() for k, v in sorted(self.assertions.items())},
        }


def verify_theorems(genus: int, punctures: int, max_v: int, jobs: int = 1, construct: bool = True):
    """Check the distance-two theorems over the enumerated universe.

    (a) finite geodesic count equals tight count, and infinitely many geodesics
    come with a non-simple witness and a finite tight count; (b) tight count is
    at most ``min(3g-4+n, floor((3g+n)/2))``; (c) every k of the spectrum table
    is realised by a certified construction; (d) filling iff distance >= 3.
    Also (e) observed finite counts lie in the table and (f) the Euler identity
    holds for every enumerated configuration.
    """
    table = spectrum_table(genus, punctures)
    bound = tight_upper_bound(genus, punctures)
    res = {
        "a_finite_equals_tight": AssertionResult("a", "finite geodesic count equals tight count"),
        "b_tight_upper_bound": AssertionResult("b", f"tight count <= {bound}"),
        "c_constructive_attainment": AssertionResult("c", "realize hits every k in the table"),
        "d_filling_iff_far": AssertionResult("d", "filling iff distance >= 3"),
        "e_spectrum_within_table": AssertionResult("e", f"finite counts within {sorted(table)}"),
        "f_euler_identity": AssertionResult("f", "Euler identity gives the target surface"),
    }
    finite_counts, tight_counts = set(), set()
    n = 0
    for cfg in enumerate_configurations(genus, punctures, max_v, jobs=jobs):
        n += 1
        enc = encode(cfg).decode()
        res["f_euler_identity"].checked += 1
        if surface_type(cfg) != (genus, punctures):
            res["f_euler_identity"].fail(enc)
        dist = classify_distance(cfg)
        res["d_filling_iff_far"].checked += 1
        if (dist is DistanceClass.AT_LEAST_THREE) != is_filling(cfg):
            res["d_filling_iff_far"].fail(enc)
        if dist is not DistanceClass.EXACTLY_TWO:
            continue
        geo = count_geodesics(cfg)
        tight = count_tight_geodesics(cfg)
        tight_counts.add(tight.count)
        res["a_finite_equals_tight"].checked += 1
        if not check_finite_iff_tight(cfg):
            res["a_finite_equals_tight"].fail(enc)
        if not geo.finite and cfg.regions[geo.witness_region].is_simple:
            res["a_finite_equals_tight"].fail(enc)
        res["b_tight_upper_bound"].checked += 1
        if tight.count > bound:
            res["b_tight_upper_bound"].fail(enc)
        if geo.finite:
            finite_counts.add(geo.count)
            res["e_spectrum_within_table"].checked += 1
            if geo.count not in table:
                res["e_spectrum_within_table"].fail(enc)

    constructed = set()
    if construct:
        from . import constructions

        for k in sorted(table):
            res["c_constructive_attainment"].checked += 1
            try:
                cfg = constructions.realize(constructions.plan_for_k(genus, punctures, k))
            except CurveSpectraError as exc:
                res["c_constructive_attainment"].fail(f"k={k}: {exc}")
                continue
            geo = count_geodesics(cfg)
            if geo.finite and geo.count == k and count_tight_geodesics(cfg).count == k:
                constructed.add(k)
            else:
                res["c_constructive_attainment"].fail(encode(cfg).decode())
    return VerificationReport(
        SurfaceType(genus, punctures),
        max_v,
        res,
        frozenset(finite_counts),
        frozenset(tight_counts),
        frozenset(constructed),
        n,
    )


# -- filling pair search ----------------------------------------------------------

TABLE_MAX_V = 8


def _noncrossing_matchings(points):
    points = list(points)
    if not points:
        yield {}
        return
    a = points[0]
    for i in range(1, len(points), 2):
        b = points[i]
        for inner in _noncrossing_matchings(points[1:i]):
            for outer in _noncrossing_matchings(points[i + 1:]):
                m = {a: b, b: a}
                m.update(inner)
                m.update(outer)
                yield m


def meander_sequences(V: int):
    """Beta sequences of planar systems on ``V`` vertices, from pairs of arc diagrams.

    Alpha is a circle through ``0 .. V-1``; beta is a union of non-crossing arcs
    inside (left of alpha) and outside it.  Only pairs giving one curve are kept.
    """
    if V % 2 or V < 2:
        return
    diagrams = list(_noncrossing_matchings(range(V)))
    for upper in diagrams:
        for lower in diagrams:
            order, signs = [0], [0] * V
            v, side = 0, 1
            while True:
                signs[v] = side
                v = (upper if side > 0 else lower)[v]
                side = -side
                if v == 0:
                    break
                order.append(v)
            if len(order) == V:
                yield tuple(order), tuple(signs)


def genus_sequences(V: int, genus: int):
    """Beta sequences on ``V`` vertices whose graph has the given genus, in a fixed order."""
    if genus == 0:
        yield from meander_sequences(V)
        return
    F = V + 2 - 2 * genus
    if F < 1:
        return
    if V <= TABLE_MAX_V:
        orders, signs, nf, _ = system_table(V)
        for i in np.nonzero(nf == F)[0]:
            yield tuple(int(x) for x in orders[i]), tuple(int(x) for x in signs[i])


def find_filling_pair(genus: int, marked: int, max_v: int):
    """Smallest-V filling pair on the surface of genus ``genus`` with ``marked`` punctures.

    Every puncture sits alone in a face; remaining faces are unpunctured disks,
    which must not be bigons.  Both curves are essential.  Returns ``None`` if
    nothing is found with ``V <= max_v`` (planar graphs at any V, others at
    ``V <= TABLE_MAX_V``).
    """
    v_min = max(1, 2 * genus - 2 + marked)
    for V in range(v_min, max_v + 1):
        F = V + 2 - 2 * genus
        if F < marked:
            continue
        for order, signs in genus_sequences(V, genus):
            bare = from_beta_sequence(order, signs)
            bigons = [f.id for f in bare.faces if f.is_bigon_shaped]
            if len(bigons) > marked:
                continue
            others = [f.id for f in bare.faces if not f.is_bigon_shaped]
            for extra in itertools.combinations(others, marked - len(bigons)):
                punctured = set(bigons) | set(extra)
                regions = [Region((f,), 0, int(f in punctured)) for f in range(F)]
                cfg = bare.with_regions(regions)
                if curve_is_essential(cfg, ALPHA) and curve_is_essential(cfg, BETA):
                    return cfg
    return None
