"""Type-level bookkeeping for non-separating real curves and their double of doubles."""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import dd_type
from .errors import HypothesisError, InconsistentComplex
from .signatures import TopType, algebraic_genus
from .tower import build_tower


@dataclass(frozen=True)
class RealCurveType:
    top_type: TopType
    p: int

    def __post_init__(self):
        if self.top_type.orientable:
            raise HypothesisError("a non-separating real curve has a non-orientable quotient")
        if algebraic_genus(self.top_type) != self.p:
            raise ValueError(f"{self.top_type} has algebraic genus {algebraic_genus(self.top_type)}, not {self.p}")


def real_curve_types(p: int) -> list[RealCurveType]:
    """All (h; -; k) with h >= 1, k >= 0 and h + k - 1 = p."""
    if p < 1:
        raise HypothesisError(f"algebraic genus must be >= 1, got {p}")
    return [RealCurveType(TopType(h, False, p + 1 - h), p) for h in range(1, p + 2)]


def psi_image(rc: RealCurveType) -> TopType:
    if rc.top_type.boundary < 1:
        raise HypothesisError(
            f"{rc.top_type} has empty boundary: omega is not onto C2 x C2, so DX is undefined"
        )
    return dd_type(rc.top_type)


@dataclass(frozen=True)
class MembershipReport:
    curve: RealCurveType
    dx: TopType
    free_conformal_quotient: TopType        # DX/<st>
    free_anticonformal_quotient: TopType    # DX/<t>


def n_membership_check(rc: RealCurveType) -> MembershipReport:
    """Check DX carries a free conformal and a free anticonformal involution."""
    psi_image(rc)
    tower = build_tower(rc.top_type)
    conformal, _ = tower.quotients["st"]
    anticonformal, _ = tower.quotients["t"]
    problems = []
    if tower.dx.genus != 2 * rc.p - 1:
        problems.append(f"DX has genus {tower.dx.genus}, expected {2 * rc.p - 1}")
    if not conformal.orientable or conformal.boundary or tower.fix_circle_counts["st"]:
        problems.append(f"DX/<st> = {conformal} is not a closed orientable surface")
    if tower.dx.euler_char != 2 * conformal.euler_char:
        problems.append("DX -> DX/<st> is not an unbranched double cover")
    if anticonformal.orientable or anticonformal.boundary or tower.fix_circle_counts["t"]:
        problems.append(f"DX/<t> = {anticonformal} is not a closed non-orientable surface")
    if problems:
        raise InconsistentComplex("; ".join(problems))
    return MembershipReport(rc, tower.dx, conformal, anticonformal)
