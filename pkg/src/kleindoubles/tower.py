"""The C2 x C2 tower over a non-orientable bordered surface.

Labelling: omega sends reflections to ``s`` and glide reflections to ``t``.
With this choice ``s`` is the involution of DX with fixed curves (they lie
over the boundary of OX = DX/<s>), while ``t`` and ``st`` act freely.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import complex_double, dd_type, orienting_double, schottky_double
from .covering import CoverSpec, analyze, build_cover, cover_report
from .errors import HomomorphismError, HypothesisError, InconsistentComplex
from .homomorphisms import GroupHom, is_surjective, omega_dd, theta_prime
from .permgroups import generated_subgroup, trivial_subgroup
from .signatures import GenKind, NecSignature, TopType, Word, canonical_presentation

INVOLUTIONS = ("s", "t", "st")


@dataclass(frozen=True)
class TowerReport:
    x: TopType
    dx: TopType
    quotients: dict[str, tuple[TopType, str]]
    fix_circle_counts: dict[str, int]
    cut_components: int

    @property
    def fix_s_separating(self) -> bool:
        return self.cut_components == 2

    def as_dict(self) -> dict:
        return {
            "X": str(self.x),
            "DX": str(self.dx),
            "quotients": {
                u: {"type": str(tt), "label": label} for u, (tt, label) in self.quotients.items()
            },
            "fix_circle_counts": dict(self.fix_circle_counts),
            "fix_s_separating": self.fix_s_separating,
            "cut_components": self.cut_components,
            "convention": "omega: reflections -> s, glide reflections -> t, boundary generators -> 1",
        }

    def diagram(self) -> str:
        xp, _ = self.quotients["st"]
        ox, _ = self.quotients["s"]
        sx, _ = self.quotients["t"]
        cells = [f"X+ = DX/<st> {xp}", f"OX = DX/<s> {ox}", f"SX = DX/<t> {sx}"]
        width = max(len(c) for c in cells) + 2
        top = f"DX {self.dx}"
        total = width * 3
        lines = [
            top.center(total),
            ("/".center(width) + "|".center(width) + "\\".center(width)),
            "".join(c.center(width) for c in cells),
            ("\\".center(width) + "|".center(width) + "/".center(width)),
            f"X {self.x}".center(total),
        ]
        return "\n".join(line.rstrip() for line in lines)


def _surface_type(sig) -> TopType:
    if not isinstance(sig, NecSignature):
        raise InconsistentComplex(f"expected a connected surface, got {sig}")
    return sig.top_type()


def build_tower(t: TopType) -> TowerReport:
    omega = omega_dd(t)
    v = omega.codomain
    elements = {"s": v.gens["s"], "t": v.gens["t"], "st": v.gens["s"] * v.gens["t"]}

    dx_complex = build_cover(CoverSpec(omega, trivial_subgroup(v)))
    dx = _surface_type(analyze(dx_complex).signature)
    cut = len(dx_complex.face_components(cut_mirrors=True))

    expected = {
        "OX": orienting_double(t)[0],
        "SX": schottky_double(t)[0],
        "X+": complex_double(t),
    }
    quotients, fix = {}, {}
    for u in INVOLUTIONS:
        report = cover_report(CoverSpec(omega, generated_subgroup(v, [elements[u]])))
        qt = _surface_type(report.signature)
        labels = [name for name, tt in expected.items() if tt == qt]
        if len(labels) != 1:
            raise InconsistentComplex(f"quotient DX/<{u}> = {qt} matches no natural double of {t}")
        quotients[u] = (qt, labels[0])
        fix[u] = len(report.boundary_circles)
    return TowerReport(t, dx, quotients, fix, cut)


def dd_monodromy(t: TopType, w: Word) -> int:
    """Parity of reflection letters in ``w`` (0 or 1)."""
    pres = canonical_presentation(t.signature())
    parity = 0
    for name, _ in w:
        if name not in pres:
            raise HomomorphismError(f"unknown generator {name!r}")
        parity ^= pres[name].kind is GenKind.REFLECTION
    return int(parity)


def lifting_kernel_type(delta: NecSignature, theta: GroupHom) -> tuple[TopType, TopType]:
    """(type of X = U/ker theta, type of U/ker theta') with the latter checked against DX."""
    if theta.signature != delta:
        raise HomomorphismError("theta is not defined on the canonical presentation of delta")
    if not is_surjective(theta):
        raise HypothesisError("theta must be an epimorphism")
    lifted = theta_prime(theta.domain, theta)   # raises if ker theta is unsuitable
    x = _surface_type(cover_report(CoverSpec(theta, trivial_subgroup(theta.codomain))).signature)
    dx_sig = cover_report(CoverSpec(lifted, trivial_subgroup(lifted.codomain))).signature
    dx = _surface_type(dx_sig)
    if dx != dd_type(x):
        raise InconsistentComplex(f"ker theta' has type {dx}, expected {dd_type(x)}")
    return x, dx
