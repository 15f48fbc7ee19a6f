"""Builders for distance-2 configurations with a prescribed number of geodesics.

The extremal construction splits the surface into a subsurface ``X`` that the
two curves fill, and simple pieces glued to the boundary of ``X``: pairs of
pants, twice-punctured disks, once-punctured annuli and annuli.  Each boundary
circle of a piece that is essential contributes one geodesic ``alpha - c - beta``.
Here ``X`` is a filling pair whose faces are punctured once; some of those faces
are *sockets*, and the punctured disk behind a socket is replaced by a piece.

The finger-move operations grow a configuration: pushing an arc of alpha across
beta creates two empty bigons, which are then punctured or glued together.
"""

from __future__ import annotations

import enum
import hashlib
import json
import os
from dataclasses import dataclass
from pathlib import Path

from . import search
from .analysis import (
    DistanceClass,
    classify_distance,
    curve_is_essential,
    find_bigons,
    reduce,
    regions_fill,
)
from .errors import (
    CertificationFailed,
    NoPairFound,
    OutOfSpectrum,
    PreconditionViolated,
    SchemaError,
)
from .geodesics import count_geodesics, count_tight_geodesics
from .ribbon import (
    ALPHA,
    BETA,
    BoundedType,
    Configuration,
    Region,
    SurfaceType,
    from_dict,
    surface_type,
    to_dict,
    validate,
)
from .theory import require_nonsporadic, spectrum_max

DEFAULT_MAX_V = 12

# -- finger moves ------------------------------------------------------------------


def finger_sites(config: Configuration, avoid_faces=()):
    """Candidate finger-move sites ``(alpha dart, beta dart)``, best first.

    A site is a corner ``(da, rot da)`` with ``da`` on alpha; the finger pushes
    the alpha edge of ``da`` across the beta edge of ``rot da``.  Order: lowest
    beta edge, then lowest adjacent alpha edge, then dart id.  Sites touching a
    face in ``avoid_faces`` are skipped.
    """
    avoid = set(avoid_faces)
    rot_inv, pair, edge_of = config.rot_inv, config.pairing, config.edge_of
    out = []
    for eb, (x, y) in enumerate(config.edges):
        if config.labels[eb] != BETA:
            continue
        cands = []
        for db in (x, y):
            da = rot_inv[db]
            touched = {da, pair[da], db, pair[db]}
            touched |= {rot_inv[t] for t in list(touched)}
            if avoid & {config.face_of[t] for t in touched}:
                continue
            cands.append((edge_of[da], da, db))
        out.extend((da, db) for _, da, db in sorted(cands))
    return out


def finger_move(config: Configuration, site=None, avoid_faces=()):
    """Push alpha across beta at ``site``; returns ``(config, (bigon1, bigon2))``.

    Two vertices ``p`` and ``q`` are added on the beta edge; old darts keep their
    ids and the eight new darts are ``4V .. 4V+7``.  The two new empty bigons
    become unpunctured disk regions (returned as face ids of the new
    configuration); every other face stays in the region it was in.
    """
    if site is None:
        sites = finger_sites(config, avoid_faces)
        if not sites:
            raise PreconditionViolated("no finger-move site available")
        site = sites[0]
    da, db = site
    if config.rot[da] != db or config.dart_label[da] != ALPHA:
        raise PreconditionViolated(f"{site} is not an (alpha, beta) corner")
    n = config.n_darts
    pa_w, pb_u, pa_q, pb_d = n, n + 1, n + 2, n + 3
    qa_w1, qb_u, qa_tip, qb_d = n + 4, n + 5, n + 6, n + 7
    pair = list(config.pairing) + [0] * 8
    a_far, b_far = config.pairing[da], config.pairing[db]

    def link(x, y):
        pair[x], pair[y] = y, x

    link(da, pa_w)
    link(pa_q, qa_tip)
    link(qa_w1, a_far)
    link(db, pb_d)
    link(pb_u, qb_d)
    link(qb_u, b_far)
    rotation = list(config.rotation) + [(pa_w, pb_u, pa_q, pb_d), (qa_w1, qb_u, qa_tip, qb_d)]
    dart_label = list(config.dart_label) + [ALPHA, BETA, ALPHA, BETA] * 2
    labels = [dart_label[d] for d, e in enumerate(pair) if d < e]
    bare = Configuration(rotation, pair, labels, ())

    b1, b2 = bare.face_of[da], bare.face_of[pb_u]
    face_region = {}
    for f in bare.faces:
        if f.id in (b1, b2):
            continue
        regs = {config.region_of_dart(d) for d in f.darts if d < n}
        if len(regs) != 1:
            raise CertificationFailed(f"finger move mixes regions {sorted(regs)} in one face")
        face_region[f.id] = regs.pop()
    regions = []
    for r, reg in enumerate(config.regions):
        cycles = tuple(f for f, rr in face_region.items() if rr == r)
        regions.append(Region(cycles, reg.genus, reg.punctures))
    regions.append(Region((b1,)))
    regions.append(Region((b2,)))
    new = bare.with_regions(regions)
    if len(bare.faces) != len(config.faces) + 2 or surface_type(new) != surface_type(config):
        raise CertificationFailed("finger move changed the surface")
    return new, (b1, b2)


def _set_bigon_regions(config: Configuration, groups):
    """Replace the singleton bigon regions by ``groups``: list of (faces, genus, punctures)."""
    used = {f for faces, _, _ in groups for f in faces}
    regions = [r for r in config.regions if not (set(r.cycles) & used)]
    regions += [Region(tuple(faces), g, p) for faces, g, p in groups]
    return config.with_regions(regions)


# -- certification -------------------------------------------------------------------


def certify(config: Configuration, genus: int, punctures: int, count: int) -> Configuration:
    """Recount with the engine; raise :class:`CertificationFailed` on any mismatch."""
    report = validate(config)
    if not report.ok:
        raise CertificationFailed(f"builder produced an invalid configuration: {report}")
    st = surface_type(config)
    if st != (genus, punctures):
        raise CertificationFailed(f"expected surface ({genus}, {punctures}), got {st}")
    dist = classify_distance(config)
    if dist is not DistanceClass.EXACTLY_TWO:
        raise CertificationFailed(f"expected distance 2, got {dist.value}")
    geo = count_geodesics(config)
    if not geo.finite or geo.count != count:
        raise CertificationFailed(f"expected Finite({count}), got {geo.to_json()}")
    tight = count_tight_geodesics(config).count
    if tight != count:
        raise CertificationFailed(f"expected tight count {count}, got {tight}")
    return config


def _finite_count(config: Configuration) -> tuple[Configuration, SurfaceType, int]:
    dist = classify_distance(config)
    if dist is not DistanceClass.EXACTLY_TWO:
        raise PreconditionViolated(f"operation needs a distance-2 configuration, got {dist.value}")
    geo = count_geodesics(config)
    if not geo.finite:
        raise PreconditionViolated("operation needs finitely many geodesics")
    return reduce(config).config, surface_type(config), geo.count


# -- operations ----------------------------------------------------------------------

_PUNCTURE_SPLITS = {2: (1, 1), 3: (1, 2), 4: (2, 2)}


def op_add_punctures(config: Configuration, total: int) -> Configuration:
    """Finger move, then puncture the two bigons: +2, +3 or +4 punctures.

    Counts go to k, k+1, k+2: a once-punctured disk is inessential, a
    twice-punctured disk adds its boundary class.
    """
    if total not in _PUNCTURE_SPLITS:
        raise ValueError("total must be 2, 3 or 4")
    base, st, k = _finite_count(config)
    moved, (b1, b2) = finger_move(base)
    p1, p2 = _PUNCTURE_SPLITS[total]
    out = _set_bigon_regions(moved, [((b1,), 0, p1), ((b2,), 0, p2)])
    return certify(out, st.genus, st.punctures + total, k + total - 2)


def op_add_handle(config: Configuration) -> Configuration:
    """Finger move, then join the two bigons by a cylinder: genus +1, count +1."""
    base, st, k = _finite_count(config)
    moved, (b1, b2) = finger_move(base)
    out = _set_bigon_regions(moved, [((b1, b2), 0, 0)])
    return certify(out, st.genus + 1, st.punctures, k + 1)


def op_add_punctured_handle(config: Configuration) -> Configuration:
    """Join the two bigons by a once-punctured cylinder: genus +1, punctures +1, count +2."""
    base, st, k = _finite_count(config)
    moved, (b1, b2) = finger_move(base)
    out = _set_bigon_regions(moved, [((b1, b2), 0, 1)])
    return certify(out, st.genus + 1, st.punctures + 1, k + 2)


def op_add_two_pants(config: Configuration) -> Configuration:
    """Three finger moves, six bigons, two pairs of pants: genus +4, count +6."""
    base, st, k = _finite_count(config)
    cur = base
    bigon_darts = []
    for _ in range(3):
        avoid = {cur.face_of[d] for d in bigon_darts}
        cur, (b1, b2) = finger_move(cur, avoid_faces=avoid)
        bigon_darts += [cur.faces[b1].darts[0], cur.faces[b2].darts[0]]
    faces = [cur.face_of[d] for d in bigon_darts]
    if len(set(faces)) != 6 or not all(cur.faces[f].is_bigon_shaped for f in faces):
        raise CertificationFailed("finger moves did not leave six bigons")
    out = _set_bigon_regions(cur, [(tuple(faces[:3]), 0, 0), (tuple(faces[3:]), 0, 0)])
    return certify(out, st.genus + 4, st.punctures, k + 6)


# -- filling pairs -------------------------------------------------------------------


@dataclass(frozen=True)
class FillingPair:
    """Filling pair on ``X`` whose punctured faces listed in ``sockets`` stand for boundary."""

    config: Configuration
    sockets: tuple[int, ...]

    @property
    def x_type(self) -> BoundedType:
        st = surface_type(self.config)
        b = len(self.sockets)
        return BoundedType(st.genus, b, st.punctures - b)


def fixture_dir() -> Path:
    env = os.environ.get("CURVE_SPECTRA_FIXTURES")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "fixtures"


def fixture_name(genus: int, boundary: int, punctures: int) -> str:
    return f"fill_g{genus}_b{boundary}_p{punctures}.json"


def certify_filling_pair(fp: FillingPair, x_type) -> FillingPair:
    """Check that ``fp`` fills ``X`` of the given type with the sockets as boundary."""
    cfg = fp.config
    report = validate(cfg, allow_sporadic=True)
    if not report.ok:
        raise CertificationFailed(f"filling pair is invalid: {report}")
    if tuple(fp.x_type) != tuple(x_type):
        raise CertificationFailed(f"filling pair has type {tuple(fp.x_type)}, wanted {tuple(x_type)}")
    for s in fp.sockets:
        reg = cfg.regions[s]
        if reg.type != (0, 1, 1):
            raise CertificationFailed(f"socket region {s} has type {tuple(reg.type)}")
    if find_bigons(cfg):
        raise CertificationFailed("filling pair has empty bigons")
    if not regions_fill(cfg):
        raise CertificationFailed("filling pair leaves a region that is not a (punctured) disk")
    for lab in (ALPHA, BETA):
        if not curve_is_essential(cfg, lab):
            raise CertificationFailed(f"curve {lab} of the filling pair is inessential")
    return fp


def _fill_to_json(fp: FillingPair) -> bytes:
    obj = to_dict(fp.config)
    obj["sockets"] = list(fp.sockets)
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n").encode()


def _fill_from_json(data: bytes) -> FillingPair:
    obj = json.loads(data)
    if "sockets" not in obj or not isinstance(obj["sockets"], list):
        raise SchemaError("sockets", "missing or not a list")
    return FillingPair(from_dict(obj), tuple(obj["sockets"]))


def _load_manifest(directory: Path) -> dict:
    path = directory / "manifest.json"
    if not path.exists():
        return {}
    return json.loads(path.read_text())


def _load_fixture(x_type) -> FillingPair | None:
    directory = fixture_dir()
    name = fixture_name(*x_type)
    path = directory / name
    if not path.exists():
        return None
    data = path.read_bytes()
    expected = _load_manifest(directory).get(name)
    if expected is not None and hashlib.sha256(data).hexdigest() != expected:
        raise CertificationFailed(f"fixture {name} does not match its manifest hash")
    return certify_filling_pair(_fill_from_json(data), x_type)


def save_fixture(fp: FillingPair, directory: Path | None = None) -> Path:
    """Write a filling pair and record its hash in the manifest (single writer)."""
    directory = Path(directory or fixture_dir())
    directory.mkdir(parents=True, exist_ok=True)
    name = fixture_name(*fp.x_type)
    data = _fill_to_json(fp)
    (directory / name).write_bytes(data)
    manifest = _load_manifest(directory)
    manifest[name] = hashlib.sha256(data).hexdigest()
    (directory / "manifest.json").write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n")
    return directory / name


_FILL_CACHE: dict[tuple, FillingPair] = {}


def _search_marked(genus: int, marked: int, max_v: int) -> Configuration | None:
    """Filling pair with ``marked`` once-punctured faces; finger moves extend small ones."""
    cfg = search.find_filling_pair(genus, marked, max_v)
    if cfg is not None or genus == 0 or marked < 2:
        return cfg
    base = _search_marked(genus, marked - 2, max_v - 2)
    if base is None:
        return None
    moved, (b1, b2) = finger_move(base)
    return _set_bigon_regions(moved, [((b1,), 0, 1), ((b2,), 0, 1)])


def filling_pair(genus: int, boundary_slots: int, punctures: int, max_v: int = DEFAULT_MAX_V) -> FillingPair:
    """Certified filling pair on ``X = (genus, boundary_slots, punctures)``.

    Looks in the in-process cache, then the fixture directory, then searches.
    """
    x_type = BoundedType(genus, boundary_slots, punctures)
    if min(x_type) < 0:
        raise ValueError("negative type")
    if x_type.is_simple:
        raise PreconditionViolated(f"{tuple(x_type)} is simple: it carries no essential curve")
    if x_type in _FILL_CACHE:
        return _FILL_CACHE[x_type]
    fp = _load_fixture(x_type)
    if fp is None:
        cfg = _search_marked(genus, boundary_slots + punctures, max_v)
        if cfg is None:
            raise NoPairFound(tuple(x_type), max_v)
        punctured = [r for r, reg in enumerate(cfg.regions) if reg.punctures]
        fp = certify_filling_pair(FillingPair(cfg, tuple(punctured[:boundary_slots])), x_type)
    _FILL_CACHE[x_type] = fp
    return fp


# -- decomposition plans -------------------------------------------------------------


class PieceKind(enum.Enum):
    PANTS = (0, 3, 0)
    TWICE_PUNCTURED_DISK = (0, 1, 2)
    PUNCTURED_ANNULUS = (0, 2, 1)
    ANNULUS = (0, 2, 0)
    ONCE_PUNCTURED_DISK = (0, 1, 1)
    DISK = (0, 1, 0)

    @property
    def type(self) -> BoundedType:
        return BoundedType(*self.value)

    @property
    def count(self) -> int:
        """Essential boundary classes the piece contributes."""
        g, b, p = self.value
        if (g, b, p) == (0, 2, 0):
            return 1
        return 0 if self.type.is_disk_like else b


COUNTED_PIECES = (
    PieceKind.PANTS,
    PieceKind.TWICE_PUNCTURED_DISK,
    PieceKind.PUNCTURED_ANNULUS,
    PieceKind.ANNULUS,
)


@dataclass(frozen=True)
class Piece:
    kind: PieceKind
    slots: tuple[int, ...]


@dataclass(frozen=True)
class DecompositionPlan:
    genus: int
    punctures: int
    x_type: BoundedType
    pieces: tuple[Piece, ...]
    case: str = ""

    @property
    def expected_count(self) -> int:
        return sum(p.kind.count for p in self.pieces)

    def check(self) -> None:
        """Bookkeeping identities; raises :class:`PreconditionViolated`."""
        g = self.x_type.genus + sum(p.kind.type.genus + p.kind.type.boundary - 1 for p in self.pieces)
        n = self.x_type.punctures + sum(p.kind.type.punctures for p in self.pieces)
        if (g, n) != (self.genus, self.punctures):
            raise PreconditionViolated(f"plan gives ({g}, {n}), not ({self.genus}, {self.punctures})")
        slots = sorted(s for p in self.pieces for s in p.slots)
        if slots != list(range(self.x_type.boundary)):
            raise PreconditionViolated("pieces must occupy every boundary slot of X exactly once")
        for p in self.pieces:
            if p.kind not in COUNTED_PIECES:
                raise PreconditionViolated(f"{p.kind.name} cannot be a counted piece")
            if len(p.slots) != p.kind.type.boundary:
                raise PreconditionViolated(f"{p.kind.name} needs {p.kind.type.boundary} slots")
        if self.x_type.is_simple:
            raise PreconditionViolated(f"X = {tuple(self.x_type)} is simple")

    def to_json(self):
        return {
            "surface": [self.genus, self.punctures],
            "x_type": list(self.x_type),
            "case": self.case,
            "expected_count": self.expected_count,
            "pieces": [{"kind": p.kind.name, "slots": list(p.slots)} for p in self.pieces],
        }


def _make_plan(genus, punctures, counts, x_type, case) -> DecompositionPlan:
    pieces = []
    slot = 0
    for kind, m in zip(COUNTED_PIECES, counts):
        for _ in range(m):
            b = kind.type.boundary
            pieces.append(Piece(kind, tuple(range(slot, slot + b))))
            slot += b
    plan = DecompositionPlan(genus, punctures, BoundedType(*x_type), tuple(pieces), case)
    plan.check()
    return plan


def _extremal_counts(g, n):
    """Piece counts ``(pants, tpd, pa, annuli)``, X type and case label for k = max."""
    k = (3 * g + n) // 2
    if g % 2 == 0 and n % 2 == 0:
        return (g // 2, n // 2, 0, 0), (0, k, 0), "i"
    if g % 2 == 1 and n % 2 == 1:
        return ((g - 1) // 2, (n - 1) // 2, 1, 0), (0, k, 0), "ii"
    if g % 2 == 1:
        return ((g - 1) // 2, n // 2, 0, 1), (0, k + 1, 0), "iii"
    return (g // 2, (n - 1) // 2, 0, 0), (0, k, 1), "iv"


def _search_cost(x):
    g, b, p = x
    marked = b + p
    if g == 0:
        return 0, marked - 2 + marked % 2
    return 1, 2 * g - 2 + marked


def plan_for_k(genus: int, punctures: int, k: int) -> DecompositionPlan:
    """A plan with exactly ``k`` geodesics on ``(genus, punctures)``.

    For the maximum on a surface with ``3g + n >= 7`` this is the parity case of
    the extremal construction.  Otherwise the cheapest admissible choice of
    pieces is used and everything else is absorbed into ``X``.
    """
    require_nonsporadic(genus, punctures)
    top = spectrum_max(genus, punctures)
    if not 1 <= k <= top:
        raise OutOfSpectrum(genus, punctures, k, range(1, top + 1))
    if k == top and 3 * genus + punctures >= 7:
        counts, x, case = _extremal_counts(genus, punctures)
        return _make_plan(genus, punctures, counts, x, case)
    best = None
    for a in range(k // 3 + 1):
        for c in range((k - 3 * a) // 2 + 1):
            for b in range(k - 3 * a - 2 * c + 1):
                d = k - 3 * a - 2 * c - b
                if 2 * a + c + d > genus or 2 * b + c > punctures:
                    continue
                x = (genus - 2 * a - c - d, 3 * a + b + 2 * c + 2 * d, punctures - 2 * b - c)
                if BoundedType(*x).is_simple:
                    continue
                rank = (_search_cost(x), a + b + c + d, (-a, -c, -b, -d))
                if best is None or rank < best[0]:
                    best = (rank, (a, b, c, d), x)
    if best is None:
        raise OutOfSpectrum(genus, punctures, k, range(1, top + 1))
    return _make_plan(genus, punctures, best[1], best[2], "sub")


def realize(plan: DecompositionPlan, max_v: int = DEFAULT_MAX_V) -> Configuration:
    """Glue the plan's pieces onto a filling pair of ``X`` and certify the count."""
    plan.check()
    fp = filling_pair(*plan.x_type, max_v=max_v)
    cfg = fp.config
    socket_set = set(fp.sockets)
    regions = [r for i, r in enumerate(cfg.regions) if i not in socket_set]
    for piece in plan.pieces:
        cycles = tuple(c for s in piece.slots for c in cfg.regions[fp.sockets[s]].cycles)
        t = piece.kind.type
        regions.append(Region(cycles, t.genus, t.punctures))
    out = cfg.with_regions(regions)
    return certify(out, plan.genus, plan.punctures, plan.expected_count)


def construct(genus: int, punctures: int, k: int, max_v: int = DEFAULT_MAX_V) -> Configuration:
    return realize(plan_for_k(genus, punctures, k), max_v)
