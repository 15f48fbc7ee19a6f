"""Minimal position, essentiality and the distance-2 curve classes of a configuration."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import PreconditionViolated, ReductionToDisjoint
from .ribbon import (
    ALPHA,
    BETA,
    BoundedType,
    Configuration,
    Region,
    other_curve,
    require_valid,
)


class DistanceClass(enum.Enum):
    AT_MOST_ONE = "<=1"
    EXACTLY_TWO = "2"
    AT_LEAST_THREE = ">=3"


@dataclass(frozen=True)
class Bigon:
    """An empty bigon face: one side on each curve, bounding an unpunctured disk."""

    face: int


@dataclass(frozen=True)
class CurveClass:
    """Isotopy class of a curve parallel to one face cycle (or two, across an annulus)."""

    cycles: tuple[int, ...]
    region: int
    essential: bool


@dataclass(frozen=True)
class DisjointClasses:
    classes: tuple[CurveClass, ...]
    nonsimple_regions: tuple[int, ...]
    all_classes: tuple[CurveClass, ...]

    def to_json(self):
        return {
            "classes": [list(c.cycles) for c in self.classes],
            "nonsimple_regions": list(self.nonsimple_regions),
        }


@dataclass(frozen=True)
class Reduction:
    """Outcome of bigon removal: a bigon-free configuration, or ``None`` if disjoint."""

    config: Configuration | None
    removed: int

    @property
    def disjoint(self) -> bool:
        return self.config is None


def find_bigons(config: Configuration) -> list[Bigon]:
    out = []
    for f in config.faces:
        if not f.is_bigon_shaped:
            continue
        reg = config.regions[config.region_of_face[f.id]]
        if reg.genus == 0 and reg.punctures == 0 and len(reg.cycles) == 1:
            out.append(Bigon(f.id))
    return out


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def remove_bigon(config: Configuration, bigon: Bigon) -> Configuration:
    """Isotope alpha across an empty bigon, cancelling its two vertices.

    The bigon disk is absorbed by the region across its alpha side.  The two
    faces meeting the far corners of the bigon's vertices get joined by a thin
    band (the strip that opens up between the pushed arc of alpha and beta), so
    the region(s) containing them lose one from their Euler characteristic.
    """
    face = config.faces[bigon.face]
    if not face.is_bigon_shaped:
        raise PreconditionViolated(f"face {bigon.face} is not a bigon")
    if config.n_vertices <= 2:
        raise ReductionToDisjoint("removing this bigon leaves the curves disjoint")
    rot, pair, opp = config.rot, config.pairing, config.opposite
    f1, f2 = face.darts
    u, v = config.vertex_of[f1], config.vertex_of[f2]
    # the two bigon edges are (f1, rot f2) and (rot f1, f2); merge the continuations
    x, y = pair[opp(f1)], pair[opp(rot[f2])]
    s, t = pair[opp(rot[f1])], pair[opp(f2)]
    # corner opposite the bigon at u: (opp f1, opp rot f1); its face continues to s
    band_dart = s
    bigon_region = config.region_of_face[bigon.face]

    keep = [d for d in range(config.n_darts) if config.vertex_of[d] not in (u, v)]
    new_id = {d: i for i, d in enumerate(keep)}
    old_pair = list(pair)
    old_pair[x], old_pair[y] = y, x
    old_pair[s], old_pair[t] = t, s
    rotation = [
        tuple(new_id[d] for d in row)
        for w, row in enumerate(config.rotation)
        if w not in (u, v)
    ]
    pairing = [new_id[old_pair[d]] for d in keep]
    dart_label = [config.dart_label[d] for d in keep]
    labels = [dart_label[d] for d, e in enumerate(pairing) if d < e]
    bare = Configuration(rotation, pairing, labels, ())

    uf = _UnionFind(range(len(config.regions)))
    face_region = []
    for nf in bare.faces:
        regs = {config.region_of_dart(keep[d]) for d in nf.darts}
        regs.discard(bigon_region)
        first = min(regs)
        for r in regs:
            uf.union(first, r)
        face_region.append(first)
    band_root = uf.find(config.region_of_dart(band_dart))

    groups: dict[int, list[int]] = {}
    for r in range(len(config.regions)):
        if r != bigon_region:
            groups.setdefault(uf.find(r), []).append(r)
    regions = []
    for root, members in sorted(groups.items()):
        cycles = tuple(f for f, r in enumerate(face_region) if uf.find(r) == root)
        punct = sum(config.regions[r].punctures for r in members)
        chi = sum(config.regions[r].euler_characteristic for r in members)
        if root == band_root:
            chi -= 1
        twice_g = 2 - chi - len(cycles) - punct
        assert twice_g >= 0 and twice_g % 2 == 0, (chi, cycles, punct)
        regions.append(Region(cycles, twice_g // 2, punct))
    return bare.with_regions(regions)


def _first(bigons: Sequence[Bigon]) -> Bigon:
    return bigons[0]


def reduce(
    config: Configuration,
    pick: Callable[[Sequence[Bigon]], Bigon] = _first,
) -> Reduction:
    """Remove empty bigons until none remain (or the curves come apart)."""
    removed = 0
    while True:
        bigons = find_bigons(config)
        if not bigons:
            return Reduction(config, removed)
        if config.n_vertices <= 2:
            return Reduction(None, removed + 1)
        config = remove_bigon(config, pick(bigons))
        removed += 1


def intersection_number(config: Configuration) -> int:
    red = reduce(config)
    return 0 if red.disjoint else red.config.n_vertices


def cut_along(config: Configuration, label: str) -> list[BoundedType]:
    """Components of the surface cut open along one curve.

    The neighbourhood of the two curves cut along ``label`` falls apart into one
    disk per edge of the other curve, each glued to the regions on its two sides
    along two arcs.  So components are unions of regions linked by those edges,
    and each linking edge lowers the Euler characteristic by one.
    """
    n_reg = len(config.regions)
    uf = _UnionFind(range(n_reg))
    other = other_curve(label)
    connectors = [(d, e) for i, (d, e) in enumerate(config.edges) if config.labels[i] == other]
    for d, e in connectors:
        uf.union(config.region_of_dart(d), config.region_of_dart(e))
    o = config.curve_darts(label)[0]
    left = uf.find(config.region_of_dart(o))
    right = uf.find(config.region_of_dart(config.pairing[o]))

    out = []
    roots = sorted({uf.find(r) for r in range(n_reg)})
    for root in roots:
        members = [r for r in range(n_reg) if uf.find(r) == root]
        chi = sum(config.regions[r].euler_characteristic for r in members)
        chi -= sum(1 for d, _ in connectors if uf.find(config.region_of_dart(d)) == root)
        boundary = (root == left) + (root == right)
        punct = sum(config.regions[r].punctures for r in members)
        twice_g = 2 - chi - boundary - punct
        assert twice_g >= 0 and twice_g % 2 == 0, (chi, boundary, punct)
        out.append(BoundedType(twice_g // 2, boundary, punct))
    return out


def curve_is_essential(config: Configuration, label: str) -> bool:
    return not any(c.is_disk_like for c in cut_along(config, label))


def _require_essential(config: Configuration) -> None:
    for lab in (ALPHA, BETA):
        if not curve_is_essential(config, lab):
            raise PreconditionViolated(f"curve {lab} is inessential")


def disjoint_curve_classes(config: Configuration) -> DisjointClasses:
    """Curve classes disjoint from both curves that are parallel to a face cycle.

    The two boundary cycles of an unpunctured annulus region are parallel and give
    one class.  A class is inessential exactly when its region is a disk or a
    once-punctured disk; the graph side of a face cycle never is.
    """
    if config.n_vertices < 1:
        raise PreconditionViolated("need V >= 1")
    if find_bigons(config):
        raise PreconditionViolated("configuration has empty bigons; reduce it first")
    _require_essential(config)
    all_classes = []
    nonsimple = []
    for r, reg in enumerate(config.regions):
        if not reg.is_simple:
            nonsimple.append(r)
        if reg.is_annulus:
            all_classes.append(CurveClass(reg.cycles, r, True))
        else:
            essential = not reg.type.is_disk_like
            for c in reg.cycles:
                all_classes.append(CurveClass((c,), r, essential))
    all_classes.sort(key=lambda c: c.cycles)
    return DisjointClasses(
        tuple(c for c in all_classes if c.essential),
        tuple(nonsimple),
        tuple(all_classes),
    )


def classify_distance(config: Configuration) -> DistanceClass:
    require_valid(config)
    _require_essential(config)
    red = reduce(config)
    if red.disjoint:
        return DistanceClass.AT_MOST_ONE
    dc = disjoint_curve_classes(red.config)
    if dc.classes or dc.nonsimple_regions:
        return DistanceClass.EXACTLY_TWO
    return DistanceClass.AT_LEAST_THREE


def regions_fill(config: Configuration) -> bool:
    """Every region is a disk or a once-punctured disk (no reduction applied)."""
    return all(r.type.is_disk_like for r in config.regions)


def is_filling(config: Configuration, *, allow_sporadic: bool = False) -> bool:
    require_valid(config, allow_sporadic=allow_sporadic)
    red = reduce(config)
    if red.disjoint:
        return False
    return regions_fill(red.config)
