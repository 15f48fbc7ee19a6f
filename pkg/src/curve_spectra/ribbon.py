"""Two transverse curves on a punctured surface, encoded as a labeled rotation system.

A configuration has ``V`` vertices (the intersection points of the two curves) and
``4V`` darts.  Dart ``d`` sits at one vertex and is one end of one edge.

* ``rotation`` lists, for every vertex, its four darts in counterclockwise order.
* ``pairing`` is the fixed-point-free involution sending a dart to the other end
  of its edge.
* ``labels`` colours every edge ``"A"`` (alpha) or ``"B"`` (beta).  Edges are
  indexed by their smaller dart id.

Faces are the orbits of ``d -> pairing[rot(d)]`` where ``rot(d)`` is the next dart
counterclockwise at the same vertex.  The face of ``d`` therefore contains the
corner between ``d`` and ``rot(d)``.  Face ids number the orbits by their smallest
dart, ascending.  Every face is one boundary circle of a regular neighbourhood of
``alpha | beta``; the complementary regions are not determined by the graph and
are stored explicitly as :class:`Region` records (genus, punctures, face ids).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    InvalidConfiguration,
    NonOrientableOrInconsistent,
    ParseError,
    SchemaError,
)

ALPHA = "A"
BETA = "B"
FORMAT_VERSION = 1


def other_curve(label: str) -> str:
    return BETA if label == ALPHA else ALPHA


class SurfaceType(NamedTuple):
    """Surface of genus ``genus`` with ``punctures`` punctures."""

    genus: int
    punctures: int

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.punctures

    @property
    def is_simple(self) -> bool:
        # no essential simple closed curve at all
        return self.genus == 0 and self.punctures <= 3

    @property
    def is_sporadic(self) -> bool:
        # no pair of disjoint essential curves
        return (self.genus == 0 and self.punctures <= 4) or (
            self.genus == 1 and self.punctures <= 1
        )

    def __str__(self):
        return f"({self.genus}, {self.punctures})"


class BoundedType(NamedTuple):
    """Surface with boundary: genus, number of boundary circles, punctures."""

    genus: int
    boundary: int
    punctures: int

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary - self.punctures

    @property
    def is_simple(self) -> bool:
        # boundary circles behave like punctures as far as curves are concerned
        return self.genus == 0 and self.boundary + self.punctures <= 3

    @property
    def is_disk_like(self) -> bool:
        """Disk or once-punctured disk: its boundary curve is inessential."""
        return self.genus == 0 and self.boundary == 1 and self.punctures <= 1


@dataclass(frozen=True)
class Region:
    """One complementary component of ``alpha | beta``."""

    cycles: tuple[int, ...]
    genus: int = 0
    punctures: int = 0

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(sorted(self.cycles)))

    @property
    def boundary_count(self) -> int:
        return len(self.cycles)

    @property
    def type(self) -> BoundedType:
        return BoundedType(self.genus, len(self.cycles), self.punctures)

    @property
    def euler_characteristic(self) -> int:
        return self.type.euler_characteristic

    @property
    def is_simple(self) -> bool:
        return self.type.is_simple

    @property
    def is_annulus(self) -> bool:
        return self.genus == 0 and self.punctures == 0 and len(self.cycles) == 2


class FaceCycle(NamedTuple):
    id: int
    darts: tuple[int, ...]
    sides: tuple[str, ...]

    @property
    def runs(self) -> int:
        """Number of maximal runs of sides lying on the same curve (cyclically)."""
        n = len(self.sides)
        if n == 0:
            return 0
        changes = sum(1 for i in range(n) if self.sides[i] != self.sides[i - 1])
        return changes if changes else 1

    @property
    def is_bigon_shaped(self) -> bool:
        return len(self.darts) == 2 and self.runs == 2


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    element: object = None

    def __str__(self):
        return f"[{self.code}] {self.message}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}

    def add(self, code, message, element=None):
        self.violations.append(Violation(code, message, element))

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(str(v) for v in self.violations)

    def to_json(self):
        return [
            {"code": v.code, "message": v.message, "element": _jsonable(v.element)}
            for v in self.violations
        ]


def _jsonable(x):
    if isinstance(x, (int, str)) or x is None:
        return x
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return str(x)


@dataclass(frozen=True)
class Configuration:
    """Immutable encoding of ``(S, alpha, beta)``; see the module docstring."""

    rotation: tuple[tuple[int, ...], ...]
    pairing: tuple[int, ...]
    labels: tuple[str, ...]
    regions: tuple[Region, ...]
    version: int = FORMAT_VERSION

    def __post_init__(self):
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        object.__setattr__(self, "pairing", tuple(self.pairing))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "regions", tuple(self.regions))

    # -- basic combinatorics (assume structural validity) --------------------

    @property
    def n_vertices(self) -> int:
        return len(self.rotation)

    @property
    def n_darts(self) -> int:
        return 4 * len(self.rotation)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        out = [0] * self.n_darts
        for v, row in enumerate(self.rotation):
            for d in row:
                out[d] = v
        return tuple(out)

    @cached_property
    def rot(self) -> tuple[int, ...]:
        """``rot[d]``: next dart counterclockwise around the vertex of ``d``."""
        out = [0] * self.n_darts
        for row in self.rotation:
            for i, d in enumerate(row):
                out[d] = row[(i + 1) % len(row)]
        return tuple(out)

    @cached_property
    def rot_inv(self) -> tuple[int, ...]:
        out = [0] * self.n_darts
        for d, e in enumerate(self.rot):
            out[e] = d
        return tuple(out)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(min dart, max dart)``, sorted by min dart."""
        return tuple((d, e) for d, e in enumerate(self.pairing) if d < e)

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        out = [0] * self.n_darts
        for i, (d, e) in enumerate(self.edges):
            out[d] = out[e] = i
        return tuple(out)

    @cached_property
    def dart_label(self) -> tuple[str, ...]:
        return tuple(self.labels[self.edge_of[d]] for d in range(self.n_darts))

    @cached_property
    def face_next(self) -> tuple[int, ...]:
        rot, pair = self.rot, self.pairing
        return tuple(pair[rot[d]] for d in range(self.n_darts))

    @cached_property
    def faces(self) -> tuple[FaceCycle, ...]:
        nxt = self.face_next
        seen = [False] * self.n_darts
        out = []
        for start in range(self.n_darts):
            if seen[start]:
                continue
            orbit = []
            d = start
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = nxt[d]
            sides = tuple(self.dart_label[self.rot[x]] for x in orbit)
            out.append(FaceCycle(len(out), tuple(orbit), sides))
        return tuple(out)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        out = [0] * self.n_darts
        for f in self.faces:
            for d in f.darts:
                out[d] = f.id
        return tuple(out)

    @cached_property
    def region_of_face(self) -> tuple[int, ...]:
        out = [-1] * len(self.faces)
        for r, reg in enumerate(self.regions):
            for c in reg.cycles:
                if 0 <= c < len(out):
                    out[c] = r
        return tuple(out)

    @property
    def graph_genus(self) -> int:
        """Genus of the closed surface obtained by capping every face with a disk."""
        return (self.n_vertices + 2 - len(self.faces)) // 2

    def opposite(self, d: int) -> int:
        """Dart across the vertex: the same curve continues straight through."""
        return self.rot[self.rot[d]]

    def curve_darts(self, label: str) -> list[int]:
        """Darts of one curve in traversal order (outgoing darts only).

        Starts at the smallest dart carrying ``label`` and follows the curve
        straight through every vertex.
        """
        start = min(d for d in range(self.n_darts) if self.dart_label[d] == label)
        out = []
        d = start
        while True:
            out.append(d)
            d = self.opposite(self.pairing[d])
            if d == start:
                break
            if len(out) > self.n_darts:
                raise InvalidConfiguration("curve traversal does not close up")
        return out

    # -- derived data ---------------------------------------------------------

    @property
    def euler_characteristic(self) -> int:
        return -self.n_vertices + sum(r.euler_characteristic for r in self.regions)

    @property
    def total_punctures(self) -> int:
        return sum(r.punctures for r in self.regions)

    def with_regions(self, regions: Iterable[Region]) -> Configuration:
        return replace(self, regions=tuple(regions))

    def region_of_dart(self, d: int) -> int:
        return self.region_of_face[self.face_of[d]]


# -- construction helpers -----------------------------------------------------


def from_beta_sequence(
    order: Sequence[int],
    signs: Sequence[int],
    regions: Iterable[Region] | None = None,
) -> Configuration:
    """Build the rotation system where alpha visits ``0, 1, ..., V-1`` in turn.

    ``order`` is the cyclic order in which beta visits the vertices and
    ``signs[v]`` (+1 or -1) tells on which side of alpha beta leaves vertex ``v``.
    At vertex ``v`` the counterclockwise darts are
    ``[alpha out, beta, alpha in, beta]`` = ``4v .. 4v+3``; with sign +1 dart
    ``4v+1`` is beta's outgoing dart.

    Without ``regions`` every face becomes its own unpunctured disk.
    """
    V = len(order)
    if sorted(order) != list(range(V)) or len(signs) != V:
        raise ValueError("order must be a permutation of range(V) with one sign per vertex")
    pairing = [0] * (4 * V)
    for v in range(V):
        w = (v + 1) % V
        pairing[4 * v] = 4 * w + 2
        pairing[4 * w + 2] = 4 * v
    beta_out = [4 * v + 1 if signs[v] > 0 else 4 * v + 3 for v in range(V)]
    beta_in = [4 * v + 3 if signs[v] > 0 else 4 * v + 1 for v in range(V)]
    for i, v in enumerate(order):
        w = order[(i + 1) % V]
        pairing[beta_out[v]] = beta_in[w]
        pairing[beta_in[w]] = beta_out[v]
    rotation = [(4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3) for v in range(V)]
    labels = [ALPHA if d % 2 == 0 else BETA for d, e in enumerate(pairing) if d < e]
    cfg = Configuration(rotation, pairing, labels, ())
    if regions is None:
        regions = [Region((f.id,)) for f in cfg.faces]
    return cfg.with_regions(regions)


def regions_from_faces(config: Configuration, punctures: Sequence[int]) -> tuple[Region, ...]:
    """One genus-0 region per face, with the given puncture counts in face order."""
    if len(punctures) != len(config.faces):
        raise ValueError(f"need {len(config.faces)} puncture counts, got {len(punctures)}")
    return tuple(Region((i,), 0, p) for i, p in enumerate(punctures))


def relabel(config: Configuration, dart_map: Sequence[int], *, swap_curves=False) -> Configuration:
    """Rename darts by ``dart_map`` (a permutation); vertices follow their darts.

    Face ids are recomputed, and the region table is carried across faces.
    """
    n = config.n_darts
    rows = [tuple(dart_map[d] for d in row) for row in config.rotation]
    rows.sort(key=min)
    pairing = [0] * n
    for d in range(n):
        pairing[dart_map[d]] = dart_map[config.pairing[d]]
    label_of = {}
    for d in range(n):
        lab = config.dart_label[d]
        if swap_curves:
            lab = other_curve(lab)
        label_of[dart_map[d]] = lab
    labels = [label_of[d] for d, e in enumerate(pairing) if d < e]
    new = Configuration(rows, pairing, labels, ())
    face_map = {}
    for f in config.faces:
        face_map[f.id] = new.face_of[dart_map[f.darts[0]]]
    regions = [
        Region(tuple(face_map[c] for c in r.cycles), r.genus, r.punctures)
        for r in config.regions
    ]
    return new.with_regions(regions)


# -- validation -----------------------------------------------------------------


def _structure_errors(config: Configuration, report: ValidationReport) -> bool:
    """Check darts/rotation/pairing/labels; return True if faces can be traced."""
    V = config.n_vertices
    n = 4 * V
    ok = True
    if V < 1:
        report.add("no-vertices", "V >= 1 required; disjoint curves are not representable")
        return False
    seen = []
    for v, row in enumerate(config.rotation):
        if len(row) != 4:
            report.add("vertex-degree", f"vertex {v} has {len(row)} darts, expected 4", v)
            ok = False
        seen.extend(row)
    if sorted(seen) != list(range(n)):
        report.add("dart-partition", f"rotation rows must partition darts 0..{n - 1}")
        ok = False
    if len(config.pairing) != n:
        report.add("pairing-length", f"pairing has {len(config.pairing)} entries, expected {n}")
        return False
    for d, e in enumerate(config.pairing):
        if not (isinstance(e, int) and 0 <= e < n):
            report.add("pairing-range", f"pairing[{d}] = {e!r} out of range", d)
            ok = False
        elif e == d:
            report.add("pairing-fixed-point", f"dart {d} is paired with itself", d)
            ok = False
        elif config.pairing[e] != d:
            report.add("pairing-involution", f"pairing is not an involution at dart {d}", d)
            ok = False
    if not ok:
        return False
    if len(config.labels) != 2 * V:
        report.add("labels-length", f"{len(config.labels)} labels for {2 * V} edges")
        return False
    for i, lab in enumerate(config.labels):
        if lab not in (ALPHA, BETA):
            report.add("label-value", f"edge {i} has label {lab!r}", i)
            ok = False
    return ok


def validate(config: Configuration, *, allow_sporadic: bool = False) -> ValidationReport:
    """Report every violated invariant; an empty report means valid.

    ``allow_sporadic`` accepts surfaces with no pair of disjoint essential
    curves; filling pairs on small subsurfaces need it.
    """
    report = ValidationReport()
    if not _structure_errors(config, report):
        return report

    for v, row in enumerate(config.rotation):
        labs = [config.dart_label[d] for d in row]
        if not all(labs[i] != labs[(i + 1) % 4] for i in range(4)):
            report.add(
                "alternation",
                f"vertex {v}: labels {''.join(labs)} do not alternate (intersection not transverse)",
                v,
            )
    if not report.ok:
        return report

    for lab in (ALPHA, BETA):
        n_edges = sum(1 for x in config.labels if x == lab)
        walked = len(config.curve_darts(lab))
        if walked != n_edges:
            report.add(
                "curve-components",
                f"curve {lab} has {n_edges} edges but its component through the first dart has {walked}",
                lab,
            )

    n_faces = len(config.faces)
    owner = {}
    for r, reg in enumerate(config.regions):
        if not reg.cycles:
            report.add("region-empty", f"region {r} has no boundary cycle", r)
        if reg.genus < 0 or reg.punctures < 0:
            report.add("region-negative", f"region {r} has negative genus or punctures", r)
        for c in reg.cycles:
            if not 0 <= c < n_faces:
                report.add("region-cycle-range", f"region {r} names face {c}; only {n_faces} faces", r)
            elif c in owner:
                report.add("region-overlap", f"face {c} is in regions {owner[c]} and {r}", c)
            else:
                owner[c] = r
    for f in range(n_faces):
        if f not in owner:
            report.add("face-unassigned", f"face {f} belongs to no region", f)
    if not report.ok:
        return report

    try:
        st = surface_type(config)
    except NonOrientableOrInconsistent as exc:
        report.add("euler", str(exc))
        return report
    if st.is_sporadic and not allow_sporadic:
        report.add(
            "sporadic",
            f"surface {st} is sporadic (genus 0 with <= 4 punctures or genus 1 with <= 1)",
            tuple(st),
        )
    return report


def require_valid(config: Configuration, *, allow_sporadic: bool = False) -> None:
    report = validate(config, allow_sporadic=allow_sporadic)
    if not report.ok:
        raise InvalidConfiguration(report)


def surface_type(config: Configuration) -> SurfaceType:
    """Solve the Euler identity ``-V + sum chi(R) = 2 - 2g - n`` for ``g``."""
    chi = config.euler_characteristic
    n = config.total_punctures
    twice_g = 2 - n - chi
    if twice_g < 0 or twice_g % 2:
        raise NonOrientableOrInconsistent(
            f"Euler characteristic {chi} with {n} punctures gives genus {twice_g / 2}"
        )
    return SurfaceType(twice_g // 2, n)


def face_cycles(config: Configuration) -> list[FaceCycle]:
    return list(config.faces)


# -- serialization --------------------------------------------------------------


def to_dict(config: Configuration) -> dict:
    return {
        "version": config.version,
        "vertices": config.n_vertices,
        "rotation": [list(r) for r in config.rotation],
        "pairing": list(config.pairing),
        "labels": list(config.labels),
        "regions": [
            {"cycles": list(r.cycles), "genus": r.genus, "punctures": r.punctures}
            for r in config.regions
        ],
    }


def encode(config: Configuration) -> bytes:
    return (json.dumps(to_dict(config), sort_keys=True, separators=(",", ":")) + "\n").encode()


def _int(obj, name):
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise SchemaError(name, f"expected integer, got {type(obj).__name__}")
    return obj


def _list(obj, name):
    if not isinstance(obj, list):
        raise SchemaError(name, f"expected list, got {type(obj).__name__}")
    return obj


def from_dict(obj) -> Configuration:
    if not isinstance(obj, dict):
        raise SchemaError("<root>", "expected a JSON object")
    for key in ("version", "vertices", "rotation", "pairing", "labels", "regions"):
        if key not in obj:
            raise SchemaError(key, "missing")
    version = _int(obj["version"], "version")
    if version != FORMAT_VERSION:
        raise SchemaError("version", f"unsupported version {version}")
    V = _int(obj["vertices"], "vertices")
    rotation = [
        tuple(_int(d, "rotation") for d in _list(row, "rotation"))
        for row in _list(obj["rotation"], "rotation")
    ]
    if len(rotation) != V:
        raise SchemaError("vertices", f"{V} vertices but {len(rotation)} rotation rows")
    pairing = [_int(d, "pairing") for d in _list(obj["pairing"], "pairing")]
    labels = _list(obj["labels"], "labels")
    for lab in labels:
        if not isinstance(lab, str):
            raise SchemaError("labels", "labels must be strings")
    regions = []
    for reg in _list(obj["regions"], "regions"):
        if not isinstance(reg, dict):
            raise SchemaError("regions", "each region must be an object")
        for key in ("cycles", "genus", "punctures"):
            if key not in reg:
                raise SchemaError(f"regions.{key}", "missing")
        cycles = tuple(_int(c, "regions.cycles") for c in _list(reg["cycles"], "regions.cycles"))
        regions.append(
            Region(cycles, _int(reg["genus"], "regions.genus"), _int(reg["punctures"], "regions.punctures"))
        )
    return Configuration(rotation, pairing, labels, regions, version)


def decode(data: bytes | str) -> Configuration:
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not UTF-8", exc.start) from exc
    else:
        text = data
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[: exc.pos].encode("utf-8"))
        raise ParseError(exc.msg, offset) from exc
    return from_dict(obj)


def to_dot(config: Configuration, name: str = "configuration") -> str:
    """Graphviz rendering: one node per vertex, edges coloured by curve."""
    colour = {ALPHA: "red", BETA: "blue"}
    lines = [f"graph {name} {{"]
    try:
        st = surface_type(config)
        lines.append(f"  // surface {st}")
    except NonOrientableOrInconsistent:
        lines.append("  // surface inconsistent")
    for f in config.faces:
        lines.append(f"  // face {f.id}: darts {list(f.darts)} sides {''.join(f.sides)}")
    for r, reg in enumerate(config.regions):
        lines.append(
            f"  // region {r}: genus {reg.genus} punctures {reg.punctures} cycles {list(reg.cycles)}"
        )
    for v in range(config.n_vertices):
        lines.append(f"  v{v};")
    for i, (d, e) in enumerate(config.edges):
        lab = config.labels[i]
        lines.append(
            f"  v{config.vertex_of[d]} -- v{config.vertex_of[e]} "
            f'[color={colour.get(lab, "black")}, label="{lab}{i}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
