"""Explicit covers of NEC orbifolds from polygon copies indexed by cosets.

Given a validated ``theta: Gamma -> Q`` and ``H <= Q``, the cover
``U / theta^-1(H)`` is assembled from one copy of the fundamental polygon
per right coset ``H q``.  Crossing a source side (the side carried by ``g``
onto its partner) moves from copy ``w`` to copy ``w . theta(g)``.  Reading
the result as a CW complex gives the Euler characteristic, orientability,
boundary circles with their corner orders, and cone points, hence the NEC
signature of ``theta^-1(H)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import HomomorphismError, InconsistentComplex
from .homomorphisms import GroupHom, trivial_hom, validate
from .permgroups import CosetSpace, Subgroup, right_cosets, whole_group
from .signatures import (
    NecSignature,
    Side,
    SideRole,
    Sign,
    Word,
    canonical_presentation,
    euler_char_orb,
    fundamental_polygon,
    top_type_from_euler,
)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True, eq=False)
class CoverSpec:
    hom: GroupHom
    subgroup: Subgroup

    def __post_init__(self):
        codomain = self.hom.codomain
        if self.subgroup.group is not codomain and not set(self.subgroup.group.elements) == set(codomain.elements):
            raise HomomorphismError("subgroup must live in the codomain of the homomorphism")
        bad = validate(self.hom)
        if bad:
            raise HomomorphismError(
                "homomorphism does not respect relator(s) " + "; ".join(map(str, bad))
            )

    @property
    def base(self) -> NecSignature:
        return self.hom.signature


def identity_spec(s: NecSignature) -> CoverSpec:
    h = trivial_hom(canonical_presentation(s))
    return CoverSpec(h, whole_group(h.codomain))


# -- polygon corner geometry -------------------------------------------------

def _endpoint_glue(preserving: bool, n_sides: int, i: int, j: int):
    """Corner pairs identified when side i (source) is carried onto side j."""
    start_i, end_i = i, (i + 1) % n_sides
    start_j, end_j = j, (j + 1) % n_sides
    if preserving:
        return (start_i, end_j), (end_i, start_j)
    return (start_i, start_j), (end_i, end_j)


def _pairings(polygon: list[Side]) -> list[tuple[int, int, Side]]:
    """(source index, target index, source side) for every paired generator."""
    src, tgt = {}, {}
    for i, side in enumerate(polygon):
        if side.role is SideRole.SOURCE:
            src[side.generator] = i
        elif side.role is SideRole.TARGET:
            tgt[side.generator] = i
    return [(src[g], tgt[g], polygon[src[g]]) for g in src]


def corner_angles(s: NecSignature, polygon: list[Side] | None = None) -> list[Fraction]:
    """Angle of each polygon corner, in units of pi.

    Corners of one vertex class add up to 2/m at a cone point of order m,
    1/n at a corner point of order n, 1 at an ordinary boundary point and
    2 at the main vertex.
    """
    polygon = polygon if polygon is not None else fundamental_polygon(s)
    n = len(polygon)
    uf = _UnionFind(n)
    for i, j, side in _pairings(polygon):
        for a, b in _endpoint_glue(side.preserving, n, i, j):
            uf.union(a, b)

    angles: list[Fraction | None] = [None] * n
    kinds = [None] * n
    for c in range(n):
        prev, nxt = polygon[(c - 1) % n], polygon[c]
        if (prev.role is SideRole.SOURCE and nxt.role is SideRole.TARGET
                and prev.generator == nxt.generator and prev.generator.startswith("x")):
            m = s.proper_periods[int(prev.generator[1:]) - 1]
            angles[c], kinds[c] = Fraction(2, m), "cone"
        elif prev.is_mirror and nxt.is_mirror:
            # mirrors run c_is, ..., c_i0 along the polygon
            cycle_idx, pos = _reflection_index(nxt.generator)
            angles[c], kinds[c] = Fraction(1, s.period_cycles[cycle_idx - 1][pos]), "corner"
        elif prev.is_mirror or nxt.is_mirror:
            angles[c], kinds[c] = Fraction(1, 2), "junction"
        else:
            kinds[c] = "main"

    classes = defaultdict(list)
    for c in range(n):
        classes[uf.find(c)].append(c)
    main = [c for c in range(n) if kinds[c] == "main"]
    for members in classes.values():
        ks = {kinds[c] for c in members}
        if len(ks) != 1:
            raise InconsistentComplex(f"vertex class mixes corner kinds {ks} in {s}")
        k = ks.pop()
        expected = {"cone": 1, "corner": 1, "junction": 2, "main": len(main)}[k]
        if len(members) != expected:
            raise InconsistentComplex(f"{k} vertex class of size {len(members)} in {s}")
    for c in main:
        angles[c] = Fraction(2, len(main))
    return angles


def _reflection_index(name: str) -> tuple[int, int]:
    body = name[1:]
    if "." in body:
        i, j = body.split(".")
        return int(i), int(j)
    return int(body), 0


def vertex_cycle_words(s: NecSignature) -> list[tuple[list[int], Word]]:
    """The word read by walking once around each vertex class of the base polygon."""
    polygon = fundamental_polygon(s)
    n = len(polygon)
    partner = {}
    for i, j, _ in _pairings(polygon):
        partner[i], partner[j] = j, i
    out = []
    seen: set[int] = set()
    for c0 in range(n):
        if c0 in seen:
            continue
        corner, side = c0, c0
        letters, corners = [], []
        while True:
            corners.append(corner)
            sd = polygon[side]
            at_start = corner == side
            if sd.is_mirror:
                letters.append((sd.generator, 1))
                land, via = corner, side
            else:
                letters.append((sd.generator, 1 if sd.role is SideRole.SOURCE else -1))
                j = partner[side]
                if sd.preserving:
                    land = (j + 1) % n if at_start else j
                else:
                    land = j if at_start else (j + 1) % n
                via = j
            other = (land - 1) % n if via == land else land
            corner, side = land, other
            if (corner, side) == (c0, c0):
                break
        seen.update(corners)
        out.append((sorted(set(corners)), Word(tuple(letters))))
    return out


# -- glued complex -----------------------------------------------------------

@dataclass(frozen=True)
class Gluing:
    face_a: int
    side_a: int
    face_b: int
    side_b: int
    generator: str
    reverses: bool     # gluing map reverses the local orientation
    mirror: bool


@dataclass(eq=False)
class GluedComplex:
    spec: CoverSpec
    polygon: list[Side]
    cosets: CosetSpace
    gluings: list[Gluing]
    boundary_slots: list[tuple[int, int]]
    corner_class: list[int]          # face * n_sides + corner -> class id
    angles: list[Fraction]

    @property
    def n_faces(self) -> int:
        return len(self.cosets)

    @property
    def n_sides(self) -> int:
        return len(self.polygon)

    def face_components(self, cut_mirrors: bool = False) -> list[list[int]]:
        """Faces grouped by connectivity; optionally cut along mirror gluings."""
        uf = _UnionFind(self.n_faces)
        for gl in self.gluings:
            if cut_mirrors and gl.mirror:
                continue
            uf.union(gl.face_a, gl.face_b)
        groups = defaultdict(list)
        for f in range(self.n_faces):
            groups[uf.find(f)].append(f)
        return sorted(groups.values())


def build_cover(spec: CoverSpec) -> GluedComplex:
    s = spec.base
    polygon = fundamental_polygon(s)
    cosets = right_cosets(spec.hom.codomain, spec.subgroup)
    n, nf = len(polygon), len(cosets)
    uf = _UnionFind(n * nf)
    gluings: list[Gluing] = []
    boundary: list[tuple[int, int]] = []

    for i, j, side in _pairings(polygon):
        perm = cosets.permutation(spec.hom(side.generator))
        for w in range(nf):
            w2 = perm[w]
            for a, b in _endpoint_glue(side.preserving, n, i, j):
                uf.union(w * n + a, w2 * n + b)
            gluings.append(Gluing(w, i, w2, j, side.generator, not side.preserving, False))

    for i, side in enumerate(polygon):
        if not side.is_mirror:
            continue
        perm = cosets.permutation(spec.hom(side.generator))
        for w in range(nf):
            w2 = perm[w]
            if w2 == w:
                boundary.append((w, i))
            elif w < w2:
                uf.union(w * n + i, w2 * n + i)
                uf.union(w * n + (i + 1) % n, w2 * n + (i + 1) % n)
                gluings.append(Gluing(w, i, w2, i, side.generator, True, True))

    classes = [uf.find(x) for x in range(n * nf)]
    angles = corner_angles(s, polygon) if n else []
    return GluedComplex(spec, polygon, cosets, gluings, boundary, classes, angles)


# -- analysis ----------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryCircle:
    corners: tuple[int, ...]


@dataclass
class ComponentReport:
    faces: int
    euler_char: int
    orientable: bool
    boundary_circles: list[BoundaryCircle]
    cone_points: list[int]

    @property
    def signature(self) -> NecSignature:
        top = top_type_from_euler(self.euler_char, self.orientable, len(self.boundary_circles))
        return NecSignature(
            top.genus,
            Sign.PLUS if self.orientable else Sign.MINUS,
            tuple(self.cone_points),
            tuple(c.corners for c in self.boundary_circles),
        )


@dataclass
class CoverReport:
    index: int
    components: int
    euler_char: int
    orientable: bool
    boundary_circles: list[BoundaryCircle]
    cone_points: list[int]
    component_reports: list[ComponentReport] = field(repr=False)

    @property
    def is_surface_group(self) -> bool:
        return not self.cone_points and all(not c.corners for c in self.boundary_circles)

    @property
    def signature(self) -> NecSignature | None:
        if self.components != 1:
            return None
        return self.component_reports[0].signature

    @cached_property
    def component_signatures(self) -> list[tuple[NecSignature, int]]:
        """Distinct component signatures with multiplicities."""
        out: list[list] = []
        for comp in self.component_reports:
            sig = comp.signature
            for entry in out:
                if signatures_equal(entry[0], sig):
                    entry[1] += 1
                    break
            else:
                out.append([sig, 1])
        return [(s, m) for s, m in out]

    @property
    def orbifold_euler_char(self) -> Fraction:
        return (
            self.euler_char
            - sum(1 - Fraction(1, m) for m in self.cone_points)
            - sum((1 - Fraction(1, n) for c in self.boundary_circles for n in c.corners), Fraction(0)) / 2
        )

    def to_json(self) -> dict:
        out = {
            "index": self.index,
            "components": self.components,
            "euler_char": self.euler_char,
            "orientable": self.orientable,
            "boundary": [{"corners": list(c.corners)} for c in self.boundary_circles],
            "cone_points": list(self.cone_points),
            "surface_group": self.is_surface_group,
            "signature": str(self.signature) if self.signature is not None else None,
        }
        if self.components != 1:
            out["component_signatures"] = [
                {"signature": str(s), "count": m} for s, m in self.component_signatures
            ]
        return out


COVER_REPORT_SCHEMA = {
    "type": "object",
    "required": [
        "index", "components", "euler_char", "orientable", "boundary",
        "cone_points", "surface_group", "signature",
    ],
    "properties": {
        "index": {"type": "integer", "minimum": 1},
        "components": {"type": "integer", "minimum": 1},
        "euler_char": {"type": "integer"},
        "orientable": {"type": "boolean"},
        "boundary": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["corners"],
                "properties": {"corners": {"type": "array", "items": {"type": "integer", "minimum": 2}}},
            },
        },
        "cone_points": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "surface_group": {"type": "boolean"},
        "signature": {"type": ["string", "null"]},
        "component_signatures": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["signature", "count"],
                "properties": {"signature": {"type": "string"}, "count": {"type": "integer"}},
            },
        },
    },
}


def _as_int(q: Fraction, what: str) -> int:
    if q.denominator != 1:
        raise InconsistentComplex(f"non-integral {what}: {q}")
    return q.numerator


def analyze(c: GluedComplex) -> CoverReport:
    spec = c.spec
    n, nf = c.n_sides, c.n_faces
    components = c.face_components()

    if n == 0:
        # the sphere: every copy is a closed sphere
        reports = [ComponentReport(1, 2, True, [], []) for _ in range(nf)]
        return _combine(nf, reports, spec)

    # vertex classes: angle sums and boundary incidence
    members = defaultdict(list)
    for x, cls in enumerate(c.corner_class):
        members[cls].append(x)
    angle_sum = {cls: sum(c.angles[x % n] for x in xs) for cls, xs in members.items()}

    slot_ends = defaultdict(list)   # vertex class -> [(slot idx, end)]
    for k, (f, i) in enumerate(c.boundary_slots):
        slot_ends[c.corner_class[f * n + i]].append((k, 0))
        slot_ends[c.corner_class[f * n + (i + 1) % n]].append((k, 1))
    for cls, ends in slot_ends.items():
        if len(ends) != 2:
            raise InconsistentComplex(f"boundary vertex meets {len(ends)} boundary edges")

    def vertex_order(cls) -> int:
        if cls in slot_ends:
            return _as_int(1 / angle_sum[cls], "corner order")
        return _as_int(2 / angle_sum[cls], "cone order")

    # boundary circles, walked through shared vertex classes
    circles: list[tuple[int, BoundaryCircle]] = []
    used = [False] * len(c.boundary_slots)
    for k0 in range(len(c.boundary_slots)):
        if used[k0]:
            continue
        corners = []
        k, end = k0, 1
        while True:
            used[k] = True
            f, i = c.boundary_slots[k]
            corner = f * n + (i + 1) % n if end == 1 else f * n + i
            cls = c.corner_class[corner]
            order = vertex_order(cls)
            if order > 1:
                corners.append(order)
            a, b = slot_ends[cls]
            nxt = b if a == (k, end) else a
            k, end = nxt[0], 1 - nxt[1]
            if k == k0 and used[k]:
                break
        circles.append((c.boundary_slots[k0][0], BoundaryCircle(tuple(corners))))

    face_comp = {}
    for idx, faces in enumerate(components):
        for f in faces:
            face_comp[f] = idx

    # orientation: one sign per face, constrained by each gluing
    sign: dict[int, int] = {}
    orientable = [True] * len(components)
    adj = defaultdict(list)
    for gl in c.gluings:
        flip = 1 if gl.reverses else 0
        adj[gl.face_a].append((gl.face_b, flip))
        adj[gl.face_b].append((gl.face_a, flip))
    for faces in components:
        root = faces[0]
        sign[root] = 0
        stack = [root]
        while stack:
            f = stack.pop()
            for g, flip in adj[f]:
                want = sign[f] ^ flip
                if g not in sign:
                    sign[g] = want
                    stack.append(g)
                elif sign[g] != want:
                    orientable[face_comp[f]] = False

    verts_by_comp = defaultdict(set)
    cones_by_comp = defaultdict(list)
    for cls, xs in members.items():
        comp = face_comp[xs[0] // n]
        verts_by_comp[comp].add(cls)
        if cls not in slot_ends:
            order = vertex_order(cls)
            if order > 1:
                cones_by_comp[comp].append(order)
    edges_by_comp = defaultdict(int)
    for gl in c.gluings:
        edges_by_comp[face_comp[gl.face_a]] += 1
    for f, _ in c.boundary_slots:
        edges_by_comp[face_comp[f]] += 1

    reports = []
    for idx, faces in enumerate(components):
        chi = len(verts_by_comp[idx]) - edges_by_comp[idx] + len(faces)
        reports.append(ComponentReport(
            faces=len(faces),
            euler_char=chi,
            orientable=orientable[idx],
            boundary_circles=[bc for f, bc in circles if face_comp[f] == idx],
            cone_points=sorted(cones_by_comp[idx]),
        ))
    return _combine(nf, reports, spec)


def _combine(index: int, reports: list[ComponentReport], spec: CoverSpec) -> CoverReport:
    report = CoverReport(
        index=index,
        components=len(reports),
        euler_char=sum(r.euler_char for r in reports),
        orientable=all(r.orientable for r in reports),
        boundary_circles=[bc for r in reports for bc in r.boundary_circles],
        cone_points=sorted(m for r in reports for m in r.cone_points),
        component_reports=reports,
    )
    expected = index * euler_char_orb(spec.base)
    if report.orbifold_euler_char != expected:
        raise InconsistentComplex(
            f"orbifold Euler characteristic {report.orbifold_euler_char} of the cover "
            f"differs from index * base = {expected}"
        )
    return report


def cover_report(spec: CoverSpec) -> CoverReport:
    return analyze(build_cover(spec))


def subgroup_signature(spec: CoverSpec) -> NecSignature | list[tuple[NecSignature, int]]:
    """Signature of ``theta^-1(H)``; per-component signatures if the cover is disconnected."""
    report = cover_report(spec)
    if report.components == 1:
        return report.signature
    return report.component_signatures


# -- signature comparison ----------------------------------------------------

def _cycle_key(cycle: tuple[int, ...]) -> tuple[int, ...]:
    if not cycle:
        return ()
    variants = []
    for seq in (cycle, tuple(reversed(cycle))):
        for r in range(len(seq)):
            variants.append(seq[r:] + seq[:r])
    return min(variants)


def normal_form(s: NecSignature) -> tuple:
    return (
        s.genus,
        s.sign,
        tuple(sorted(s.proper_periods)),
        tuple(sorted((_cycle_key(c) for c in s.period_cycles), key=lambda c: (len(c), c))),
    )


def signatures_equal(a: NecSignature, b: NecSignature) -> bool:
    """Equality up to period order and rotation/inversion of each period cycle."""
    return normal_form(a) == normal_form(b)
