"""Homomorphisms from canonical presentations into finite groups."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import HomomorphismError, HypothesisError
from .permgroups import FinGroup, Perm, cyclic, direct_product, generated_subgroup, klein_four
from .signatures import (
    GenKind,
    NecSignature,
    Presentation,
    TopType,
    Word,
    canonical_presentation,
)


@dataclass(frozen=True, eq=False)
class GroupHom:
    domain: Presentation
    codomain: FinGroup
    images: dict[str, Perm]

    def __post_init__(self):
        missing = [n for n in self.domain.names if n not in self.images]
        if missing:
            raise HomomorphismError(f"no image given for generator(s) {', '.join(missing)}")
        extra = [n for n in self.images if n not in self.domain]
        if extra:
            raise HomomorphismError(f"unknown generator(s) {', '.join(extra)}")
        for name, p in self.images.items():
            if p not in self.codomain:
                raise HomomorphismError(f"image of {name} is not in {self.codomain.name}")

    def __call__(self, name: str) -> Perm:
        return self.images[name]

    @property
    def signature(self) -> NecSignature:
        return self.domain.signature

    def describe(self) -> str:
        return ", ".join(f"{n}->{self.codomain.name_of(self.images[n])}" for n in self.domain.names)


def evaluate_word(h: GroupHom, w: Word) -> Perm:
    out = h.codomain.identity
    for name, exp in w:
        try:
            img = h.images[name]
        except KeyError:
            raise HomomorphismError(f"unknown generator {name!r}") from None
        out = out * (img if exp == 1 else img.inverse())
    return out


def validate(h: GroupHom) -> list[Word]:
    """Relators not sent to the identity; empty means ``h`` is a homomorphism."""
    return [r for r in h.domain.relators if not evaluate_word(h, r).is_identity()]


def is_valid(h: GroupHom) -> bool:
    return not validate(h)


def image_subgroup(h: GroupHom):
    return generated_subgroup(h.codomain, h.images.values())


def is_surjective(h: GroupHom) -> bool:
    return image_subgroup(h).order == h.codomain.order


def trivial_hom(pres: Presentation, group: FinGroup | None = None) -> GroupHom:
    group = group or cyclic(1)
    return GroupHom(pres, group, {n: group.identity for n in pres.names})


# -- standard epimorphisms ---------------------------------------------------

@dataclass(frozen=True)
class StandardAssignment:
    """Constant values on E (boundary), C (reflections), A (handles/glides).

    ``True`` stands for the generator t of C2.
    """

    v_E: bool
    v_C: bool
    v_A: bool

    @property
    def row(self) -> int:
        return STANDARD_ROWS.index(self) + 1

    def value_for(self, kind: GenKind) -> bool:
        if kind is GenKind.BOUNDARY:
            return self.v_E
        if kind is GenKind.REFLECTION:
            return self.v_C
        if kind in (GenKind.HANDLE_A, GenKind.HANDLE_B, GenKind.GLIDE):
            return self.v_A
        raise HypothesisError(f"standard epimorphisms are defined on surface groups, not on {kind.value} generators")

    def hom(self, pres: Presentation, group: FinGroup | None = None) -> GroupHom:
        group = group or cyclic(2)
        t = group.gens["t"]
        return GroupHom(pres, group, {
            g.name: t if self.value_for(g.kind) else group.identity for g in pres.generators
        })

    def __str__(self) -> str:
        def v(b):
            return "t" if b else "1"
        return f"E->{v(self.v_E)} C->{v(self.v_C)} A->{v(self.v_A)}"


STANDARD_ROWS = (
    StandardAssignment(False, True, True),
    StandardAssignment(False, False, True),
    StandardAssignment(False, True, False),
    StandardAssignment(True, False, False),
    StandardAssignment(True, False, True),
    StandardAssignment(True, True, False),
    StandardAssignment(True, True, True),
)


def _require_bordered(t: TopType, what: str):
    if t.genus < 1:
        raise HypothesisError(f"{what} needs genus >= 1 (no handle/glide generators for genus 0), got {t}")
    if t.boundary < 1:
        raise HypothesisError(f"{what} needs a surface with non-empty boundary (k >= 1), got {t}")


def standard_epis_C2(t: TopType) -> list[StandardAssignment]:
    """All standard epimorphisms onto C2, in row order."""
    _require_bordered(t, "standard epimorphism enumeration")
    pres = canonical_presentation(t.signature())
    out = []
    for assignment in STANDARD_ROWS:
        h = assignment.hom(pres)
        if is_valid(h) and is_surjective(h):
            out.append(assignment)
    return out


def omega_dd(t: TopType) -> GroupHom:
    """The epimorphism onto C2 x C2 = <s, t>: glides -> t, boundary -> 1, reflections -> s."""
    if t.orientable or t.boundary < 1:
        raise HypothesisError(
            f"the double of doubles is defined for a non-orientable Klein surface with "
            f"non-empty boundary; got {t}"
        )
    pres = canonical_presentation(t.signature())
    return omega_hom(pres)


def omega_hom(pres: Presentation) -> GroupHom:
    v = klein_four()
    s, t = v.gens["s"], v.gens["t"]
    images = {}
    for g in pres.generators:
        if g.kind is GenKind.GLIDE:
            images[g.name] = t
        elif g.kind is GenKind.REFLECTION:
            images[g.name] = s
        elif g.kind is GenKind.BOUNDARY:
            images[g.name] = v.identity
        else:
            raise HypothesisError(f"{g.name} ({g.kind.value}) has no prescribed image under omega")
    return GroupHom(pres, v, images)


def theta_prime(delta: Presentation, theta: GroupHom, check_kernel: bool = True) -> GroupHom:
    """Lift ``theta`` to ``G x C2 x C2``.

    Second coordinate: orientation character.  Third: nontrivial exactly on
    reflection generators lying in ``ker theta``.
    """
    if validate(theta):
        raise HomomorphismError("theta does not respect the relators of its domain")
    if check_kernel:
        from .covering import CoverSpec, subgroup_signature
        from .permgroups import trivial_subgroup

        ker = subgroup_signature(CoverSpec(theta, trivial_subgroup(theta.codomain)))
        if not isinstance(ker, NecSignature):
            raise HypothesisError(f"ker theta is not connected: {ker}")
        if not ker.is_surface or ker.orientable or not ker.period_cycles:
            raise HypothesisError(
                f"ker theta must be a bordered non-orientable surface group; its signature is {ker}"
            )
    G = theta.codomain
    u, v = cyclic(2, "u"), cyclic(2, "v")
    target = direct_product(G, u, v)
    images = {}
    for g in delta.generators:
        orient = u.gens["u"] if g.kind.reverses_orientation else u.identity
        in_kernel_reflection = g.kind is GenKind.REFLECTION and theta(g.name).is_identity()
        refl = v.gens["v"] if in_kernel_reflection else v.identity
        images[g.name] = target.combine(theta(g.name), orient, refl)
    lifted = GroupHom(delta, target, images)
    bad = validate(lifted)
    if bad:
        raise HomomorphismError(f"lifted map violates relators {[str(r) for r in bad]}")
    return lifted


# -- literals and sweeps -----------------------------------------------------

def resolve_generator(pres: Presentation, name: str) -> str:
    """Accept canonical names plus the short aliases ``x``, ``e``, ``c1`` <-> ``c1.0``."""
    name = name.strip()
    if name in pres:
        return name
    if re.fullmatch(r"[abdex]", name) and f"{name}1" in pres:
        candidates = [g for g in pres.names if re.fullmatch(rf"{name}\d+", g)]
        if len(candidates) == 1:
            return candidates[0]
    m = re.fullmatch(r"c(\d+)", name)
    if m and f"c{m.group(1)}.0" in pres:
        return f"c{m.group(1)}.0"
    m = re.fullmatch(r"c(\d+)\.0", name)
    if m and f"c{m.group(1)}" in pres:
        return f"c{m.group(1)}"
    raise HomomorphismError(f"unknown generator {name!r}; generators are {', '.join(pres.names)}")


def parse_hom(pres: Presentation, group: FinGroup, text: str) -> GroupHom:
    """Parse ``"a1->st, b1->1, x1->st, e1->ts, c1.0->s, c1.1->tst"``."""
    images: dict[str, Perm] = {}
    for item in text.split(","):
        if not item.strip():
            continue
        if "->" not in item:
            raise HomomorphismError(f"expected 'generator->element', got {item.strip()!r}")
        lhs, rhs = item.split("->", 1)
        name = resolve_generator(pres, lhs)
        if name in images:
            raise HomomorphismError(f"generator {name} assigned twice")
        try:
            images[name] = group.parse_element(rhs)
        except ValueError as exc:
            raise HomomorphismError(str(exc)) from None
    return GroupHom(pres, group, images)


def enumerate_homs(pres: Presentation, group: FinGroup, surjective_only: bool = True):
    """Every homomorphism ``pres -> group``, by backtracking over generator images."""
    names = pres.names
    position = {n: i for i, n in enumerate(names)}
    # check each relator as soon as all its generators are assigned
    checks: dict[int, list[Word]] = {}
    for r in pres.relators:
        last = max((position[g] for g in r.generators()), default=0)
        checks.setdefault(last, []).append(r)

    images: dict[str, Perm] = {}

    def holds(rel: Word) -> bool:
        out = group.identity
        for g, e in rel:
            out = out * (images[g] if e == 1 else images[g].inverse())
        return out.is_identity()

    def extend(i: int):
        if i == len(names):
            h = GroupHom(pres, group, dict(images))
            if not surjective_only or is_surjective(h):
                yield h
            return
        for el in group.elements:
            images[names[i]] = el
            if all(holds(r) for r in checks.get(i, ())):
                yield from extend(i + 1)
        images.pop(names[i], None)

    yield from extend(0)
