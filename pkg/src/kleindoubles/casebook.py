"""Replayable table of published cases and grid sweeps.

Each case returns ``(ok, detail)``; ``run_cases`` never raises for a
failing case, it records it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .catalog import (
    ROW_BOUNDARY_FACTOR,
    ROW_ORIENTABLE,
    classify_standard_doubles,
    complex_double,
    dd_type,
    engine_double,
    orienting_double,
    schottky_double,
)
from .covering import CoverSpec, cover_report
from .errors import HypothesisError
from .homomorphisms import omega_dd, parse_hom, standard_epis_C2
from .moduli import n_membership_check, psi_image, real_curve_types
from .permgroups import make_named_group, parse_subgroup, trivial_subgroup
from .signatures import (
    TopType,
    algebraic_genus,
    canonical_presentation,
    parse_signature,
)
from .tower import build_tower, lifting_kernel_type

EXAMPLE_DELTA = "(1;+;[3];{(3)})"
EXAMPLE_THETA = "x1->st, e1->ts, a1->1, b1->1, c1.0->s, c1.1->tst"


@dataclass(frozen=True)
class CaseResult:
    name: str
    source: str
    ok: bool
    detail: str


def example_theta():
    delta = parse_signature(EXAMPLE_DELTA)
    d3 = make_named_group("d3")
    return parse_hom(canonical_presentation(delta), d3, EXAMPLE_THETA)


def _bordered_grid(gmax: int, kmax: int, orientable: bool = False):
    for g in range(1, gmax + 1):
        for k in range(1, kmax + 1):
            yield TopType(g, orientable, k)


def case_epi_counts(gmax, kmax):
    bad = []
    for orientable in (False, True):
        for t in _bordered_grid(gmax, kmax, orientable):
            n = len(standard_epis_C2(t))
            if n != (7 if t.boundary % 2 == 0 else 3):
                bad.append(f"{t}: {n}")
    return not bad, "7 for even k, 3 for odd k" if not bad else ", ".join(bad)


def case_table_rows(gmax, kmax):
    bad = []
    checked = 0
    grids = [(False, _bordered_grid(gmax, kmax))]
    grids.append((True, _bordered_grid(min(gmax, 2), min(kmax, 2), True)))
    for orientable, grid in grids:
        for t in grid:
            for a in standard_epis_C2(t):
                got = engine_double(t, a)
                want_b = ROW_BOUNDARY_FACTOR[a.row] * t.boundary
                want_or = ROW_ORIENTABLE[a.row][1 if orientable else 0]
                checked += 1
                if (got.boundary, got.orientable) != (want_b, want_or):
                    bad.append(f"{t} row {a.row}: {got}")
    return not bad, f"{checked} covers match" if not bad else ", ".join(bad)


def case_natural_doubles(gmax, kmax):
    bad = []
    for t in _bordered_grid(gmax, kmax):
        recs = {r.label: r for r in classify_standard_doubles(t)}
        g, k = t.genus, t.boundary
        want = {
            "complex": TopType(g + k - 1, True, 0),
            "orienting": TopType(g - 1, True, 2 * k),
            "schottky": TopType(2 * g + 2 * k - 2, False, 0),
        }
        for label, tt in want.items():
            engine = engine_double(t, recs[label].assignment)
            if not (recs[label].top_type == engine == tt):
                bad.append(f"{t} {label}")
        if complex_double(t) != want["complex"] or orienting_double(t)[0] != want["orienting"]:
            bad.append(f"{t} closed forms")
        if schottky_double(t)[0] != want["schottky"]:
            bad.append(f"{t} schottky closed form")
        omega = omega_dd(t)
        dx = cover_report(CoverSpec(omega, trivial_subgroup(omega.codomain))).signature.top_type()
        if dx != dd_type(t) or dx != TopType(2 * g + 2 * k - 3, True, 0):
            bad.append(f"{t} DX {dx}")
    return not bad, "catalog = engine on the grid" if not bad else ", ".join(bad)


def case_example_subgroup():
    theta = example_theta()
    report = cover_report(CoverSpec(theta, parse_subgroup(theta.codomain, "s")))
    sig = str(report.signature)
    ok = (sig == "(7;-;[-];{(-)})" and report.is_surface_group
          and report.index == 3 and report.euler_char == -6)
    return ok, f"{sig}, index {report.index}, chi {report.euler_char}"


def case_mobius_tower():
    tower = build_tower(TopType(1, False, 1))
    got = (tower.dx, tower.quotients["s"][0], tower.quotients["t"][0], tower.quotients["st"][0])
    want = (TopType(1, True, 0), TopType(0, True, 2), TopType(2, False, 0), TopType(1, True, 0))
    return got == want, "DX torus; OX annulus, SX Klein bottle, X+ torus" if got == want else str(got)


def case_projective_two_holes():
    p2 = TopType(1, False, 2)
    dx = build_tower(p2).dx
    ok = (complex_double(p2) == TopType(2, True, 0) and dd_type(p2) == TopType(3, True, 0)
          and dx == dd_type(p2) and dx.euler_char == -4 == 4 * p2.euler_char)
    return ok, f"P2+ genus {complex_double(p2).genus}, DP2 genus {dx.genus}, chi {dx.euler_char}"


def case_mobius_algebraic_genus():
    t = TopType(1, False, 1)
    return algebraic_genus(t) == 1, f"algebraic genus {algebraic_genus(t)}"


def case_tower_grid(gmax, kmax):
    bad = []
    for t in _bordered_grid(gmax, kmax):
        tw = build_tower(t)
        if tw.fix_circle_counts != {"s": 2 * t.boundary, "t": 0, "st": 0} or tw.cut_components != 2:
            bad.append(str(t))
        if tw.dx.genus != 2 * algebraic_genus(t) - 1:
            bad.append(f"{t} genus")
    return not bad, "fix counts (2k, 0, 0), separating cut" if not bad else ", ".join(bad)


def lifting_sweep(delta_text: str = "(2;-;[-];{(-)^2})"):
    """Run the kernel-lifting check on every standard epimorphism of ``delta_text``.

    Returns ``(checked, skipped)`` where skipped lists rows whose kernel is
    not a bordered non-orientable surface.
    """
    delta = parse_signature(delta_text)
    checked, skipped = [], []
    for a in standard_epis_C2(delta.top_type()):
        theta = a.hom(canonical_presentation(delta))
        try:
            x, dx = lifting_kernel_type(delta, theta)
        except HypothesisError:
            skipped.append(a.row)
            continue
        checked.append((a.row, x, dx))
    return checked, skipped


def case_lifting():
    checked, skipped = lifting_sweep()
    ok = [row for row, *_ in checked] == [4, 5] and all(dx == dd_type(x) for _, x, dx in checked)
    detail = ", ".join(f"row {r}: X {x} -> DX {dx}" for r, x, dx in checked)
    return ok, f"{detail}; rows {skipped} have unsuitable kernels"


def case_example_not_normal():
    theta = example_theta()
    try:
        lifting_kernel_type(theta.signature, theta)
    except HypothesisError as exc:
        return True, f"kernel route refused: {exc}"
    return False, "lifting accepted an orientable kernel"


def case_complex_double_genus():
    recs = classify_standard_doubles(TopType(2, False, 3))
    cx = [r for r in recs if r.label == "complex"]
    ok = len(recs) == 3 and len(cx) == 1 and cx[0].genus == 4
    return ok, f"{len(recs)} rows, complex genus {cx[0].genus if cx else None}"


def case_psi_genus(pmax: int = 10):
    bad = []
    for p in range(1, pmax + 1):
        for rc in real_curve_types(p):
            if rc.top_type.boundary == 0:
                continue
            if psi_image(rc).genus != 2 * p - 1:
                bad.append(str(rc.top_type))
            if p <= 8:
                n_membership_check(rc)
    return not bad, f"genus 2p-1 for p <= {pmax}" if not bad else ", ".join(bad)


def published_cases(gmax: int = 5, kmax: int = 5) -> list[tuple[str, str, Callable]]:
    return [
        ("standard epimorphism counts", "7 if k even, 3 if k odd", lambda: case_epi_counts(gmax, kmax)),
        ("standard double table", "boundary B and orientability per row", lambda: case_table_rows(gmax, kmax)),
        ("natural doubles", "genera g+k-1, g-1 (2k holes), 2g+2k-2, 2g+2k-3", lambda: case_natural_doubles(gmax, kmax)),
        ("D3 subgroup of (1;+;[3];{(3)})", "preimage of <s> is (7;-;[-];{(-)})", case_example_subgroup),
        ("Mobius band", "double of doubles is a torus", case_mobius_tower),
        ("Mobius band algebraic genus", "Euclidean case, algebraic genus 1", case_mobius_algebraic_genus),
        ("projective plane with two holes", "P2+ genus 2, DP2 genus 3", case_projective_two_holes),
        ("tower fixed curves", "st acts freely; fixed curves of s", lambda: case_tower_grid(gmax, kmax)),
        ("complex double of (2;-;3)", "genus g+k-1 = 4", case_complex_double_genus),
        ("kernel lifting", "ker theta' uniformizes DX", case_lifting),
        ("preimage of <s> is not normal", "D3 example: no kernel, no lifting", case_example_not_normal),
        ("double of doubles genus", "psi lands in genus 2p-1; free conformal and anticonformal involutions", case_psi_genus),
    ]


def run_cases(gmax: int = 5, kmax: int = 5) -> list[CaseResult]:
    results = []
    for name, source, fn in published_cases(gmax, kmax):
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashing case is a failing case
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CaseResult(name, source, bool(ok), detail))
    return results
