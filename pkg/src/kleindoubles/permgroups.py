"""Small, fully enumerated permutation groups and right coset actions.

Products compose left to right: ``p * q`` applies ``p`` first, then ``q``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import lcm


class Perm:
    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(other.images[i] for i in self.images)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, n: int) -> "Perm":
        base = self if n >= 0 else self.inverse()
        out = Perm.identity(self.degree)
        for _ in range(abs(n)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.images else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"


def mulclose(gens, identity: Perm) -> list[Perm]:
    """Closure of ``gens`` under multiplication, in breadth-first order."""
    gens = list(gens)
    els = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in seen:
                    seen.add(b)
                    els.append(b)
                    nxt.append(b)
        frontier = nxt
    return els


@dataclass(frozen=True, eq=False)
class FinGroup:
    name: str
    gens: dict[str, Perm]
    elements: tuple[Perm, ...] = field(default=None)
    factors: tuple["FinGroup", ...] = ()

    def __post_init__(self):
        degree = {p.degree for p in self.gens.values()}
        if len(degree) > 1:
            raise ValueError("generators act on different point sets")
        if self.elements is None:
            n = degree.pop() if degree else 1
            object.__setattr__(self, "elements", tuple(mulclose(self.gens.values(), Perm.identity(n))))

    @property
    def identity(self) -> Perm:
        return self.elements[0]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self._element_set

    @property
    def _element_set(self) -> frozenset:
        cached = self.__dict__.get("_els")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_els", cached)
        return cached

    def parse_element(self, text: str) -> Perm:
        """Parse products of generator names, e.g. ``"tst"``, ``"s t^-1"``, ``"1"``."""
        text = text.strip()
        if text in ("", "1", "e", "id"):
            return self.identity
        names = sorted(self.gens, key=len, reverse=True)
        pattern = re.compile("(" + "|".join(map(re.escape, names)) + r")(\^-?\d+)?|1|\s+")
        out = self.identity
        pos = 0
        while pos < len(text):
            m = pattern.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse group element {text!r} at position {pos}")
            if m.group(1):
                power = int(m.group(2)[1:]) if m.group(2) else 1
                out = out * self.gens[m.group(1)] ** power
            pos = m.end()
        return out

    def name_of(self, p: Perm) -> str:
        """Shortest word in the named generators representing ``p``."""
        if p.is_identity():
            return "1"
        frontier = [(self.identity, "")]
        seen = {self.identity}
        while frontier:
            nxt = []
            for el, word in frontier:
                for name, g in self.gens.items():
                    q = el * g
                    if q in seen:
                        continue
                    if q == p:
                        return word + name
                    seen.add(q)
                    nxt.append((q, word + name))
            frontier = nxt
        raise ValueError(f"{p} is not in {self.name}")

    def combine(self, *components: Perm) -> Perm:
        """Element of a direct product from one element per factor."""
        if not self.factors:
            raise TypeError(f"{self.name} is not a direct product")
        images: list[int] = []
        offset = 0
        for factor, comp in zip(self.factors, components, strict=True):
            images += [offset + i for i in comp.images]
            offset += factor.identity.degree
        return Perm(images)

    def component(self, p: Perm, i: int) -> Perm:
        offset = sum(f.identity.degree for f in self.factors[:i])
        n = self.factors[i].identity.degree
        return Perm(j - offset for j in p.images[offset:offset + n])

    def __repr__(self) -> str:
        return f"FinGroup({self.name}, order={self.order})"


def cyclic(n: int, gen: str = "t") -> FinGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    return FinGroup(f"C{n}", {gen: Perm([(i + 1) % n for i in range(n)])})


def dihedral(n: int) -> FinGroup:
    """D_n of order 2n, generated by reflections s, t with (st)^n = 1.

    Acts faithfully on Z_n x {+1, -1} (2n points), which also covers n = 1, 2.
    """
    if n < 1:
        raise ValueError("dihedral group needs n >= 1")

    def pt(i, eps):
        return i % n + (0 if eps > 0 else n)

    s = [0] * (2 * n)
    rot = [0] * (2 * n)
    for i in range(n):
        for eps in (1, -1):
            s[pt(i, eps)] = pt(-i, -eps)
            rot[pt(i, eps)] = pt(i + 1, eps)
    s_p, r_p = Perm(s), Perm(rot)
    return FinGroup(f"D{n}", {"s": s_p, "t": s_p * r_p})


def klein_four() -> FinGroup:
    return FinGroup("C2xC2", {"s": Perm([1, 0, 3, 2]), "t": Perm([2, 3, 0, 1])})


def direct_product(*groups: FinGroup) -> FinGroup:
    degrees = [g.identity.degree for g in groups]
    gens: dict[str, Perm] = {}
    for i, grp in enumerate(groups):
        for name, g in grp.gens.items():
            parts = [Perm.identity(d) for d in degrees]
            parts[i] = g
            images: list[int] = []
            offset = 0
            for part, d in zip(parts, degrees):
                images += [offset + j for j in part.images]
                offset += d
            key = name if name not in gens else f"{name}{i}"
            gens[key] = Perm(images)
    return FinGroup("x".join(g.name for g in groups), gens, None, tuple(groups))


_NAMED = re.compile(r"^(c|d)(\d+)$")


def make_named_group(name: str) -> FinGroup:
    """``c2``, ``cN``, ``dN``, ``klein4`` / ``klein_four`` / ``c2xc2``."""
    key = name.strip().lower()
    if key in ("klein4", "klein_four", "c2xc2", "v4"):
        return klein_four()
    m = _NAMED.match(key)
    if m:
        n = int(m.group(2))
        return cyclic(n) if m.group(1) == "c" else dihedral(n)
    raise ValueError(f"unknown group {name!r}; use cN, dN or klein4")


@dataclass(frozen=True, eq=False)
class Subgroup:
    group: FinGroup
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def generated_subgroup(group: FinGroup, gens) -> Subgroup:
    gens = list(gens)
    for g in gens:
        if g not in group:
            raise ValueError(f"{g} is not an element of {group.name}")
    return Subgroup(group, frozenset(mulclose(gens, group.identity)))


def whole_group(group: FinGroup) -> Subgroup:
    return Subgroup(group, frozenset(group.elements))


def trivial_subgroup(group: FinGroup) -> Subgroup:
    return Subgroup(group, frozenset([group.identity]))


def parse_subgroup(group: FinGroup, text: str) -> Subgroup:
    """``"s"``, ``"s,t"``, ``"1"`` (trivial) or ``"all"``."""
    text = text.strip()
    if text.lower() in ("all", "*", "full"):
        return whole_group(group)
    parts = [p for p in text.split(",") if p.strip()]
    return generated_subgroup(group, [group.parse_element(p) for p in parts])


class CosetSpace:
    """Right cosets ``H q`` of ``H`` in ``Q`` with the right action of ``Q``.

    Coset 0 is ``H`` itself.
    """

    def __init__(self, group: FinGroup, subgroup: Subgroup):
        self.group = group
        self.subgroup = subgroup
        self.cosets: list[frozenset] = []
        self.reps: list[Perm] = []
        self._index: dict[Perm, int] = {}
        for q in group.elements:
            if q in self._index:
                continue
            coset = frozenset(h * q for h in subgroup.elements)
            for el in coset:
                self._index[el] = len(self.cosets)
            self.cosets.append(coset)
            self.reps.append(q)
        self._table: dict[Perm, tuple[int, ...]] = {}

    def __len__(self) -> int:
        return len(self.cosets)

    def index_of(self, q: Perm) -> int:
        return self._index[q]

    def permutation(self, q: Perm) -> tuple[int, ...]:
        table = self._table.get(q)
        if table is None:
            table = tuple(self._index[r * q] for r in self.reps)
            self._table[q] = table
        return table

    def act(self, coset: int, q: Perm) -> int:
        return self.permutation(q)[coset]


def right_cosets(group: FinGroup, subgroup: Subgroup) -> CosetSpace:
    return CosetSpace(group, subgroup)
