"""NEC signatures, topological types, canonical presentations and polygons.

A signature ``(g; +/-; [m1, ..., mr]; {(n11, ..., n1s1), ...})`` is the
universal input of the package.  Everything downstream (presentations,
fundamental polygons, covers) is derived from it with one fixed generator
ordering: elliptic generators, then boundary generators, then the
handle or glide block.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class SignatureError(ValueError):
    """A well-formed signature that violates a semantic constraint."""


class SignatureSyntaxError(ValueError):
    """Malformed signature text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class Sign(str, enum.Enum):
    PLUS = "+"
    MINUS = "-"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class NecSignature:
    genus: int
    sign: Sign
    proper_periods: tuple[int, ...] = ()
    period_cycles: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        sign = Sign(self.sign)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "proper_periods", tuple(sorted(int(m) for m in self.proper_periods)))
        object.__setattr__(
            self, "period_cycles", tuple(tuple(int(n) for n in c) for c in self.period_cycles)
        )
        if self.genus < 0:
            raise SignatureError(f"genus must be non-negative, got {self.genus}")
        if sign is Sign.MINUS and self.genus < 1:
            raise SignatureError("sign '-' requires genus >= 1 (a non-orientable surface has a crosscap)")
        for m in self.proper_periods:
            if m < 2:
                raise SignatureError(f"proper period {m} < 2")
        for cycle in self.period_cycles:
            for n in cycle:
                if n < 2:
                    raise SignatureError(f"link period {n} < 2")

    @property
    def orientable(self) -> bool:
        return self.sign is Sign.PLUS

    @property
    def is_surface(self) -> bool:
        return not self.proper_periods and all(not c for c in self.period_cycles)

    def top_type(self) -> "TopType":
        if not self.is_surface:
            raise SignatureError(f"{self} has periods; it is not a surface signature")
        return TopType(self.genus, self.orientable, len(self.period_cycles))

    def __str__(self) -> str:
        return format_signature(self)


@dataclass(frozen=True)
class TopType:
    """Topological type (genus; orientability; number of boundary circles)."""

    genus: int
    orientable: bool
    boundary: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise SignatureError("genus and boundary count must be non-negative")
        if not self.orientable and self.genus < 1:
            raise SignatureError("a non-orientable surface has genus >= 1")

    @property
    def sign(self) -> Sign:
        return Sign.PLUS if self.orientable else Sign.MINUS

    @property
    def euler_char(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus - self.boundary
        return 2 - self.genus - self.boundary

    def signature(self) -> NecSignature:
        return NecSignature(self.genus, self.sign, (), ((),) * self.boundary)

    def __str__(self) -> str:
        return f"({self.genus};{self.sign};{self.boundary})"


def top_type_from_euler(euler_char: int, orientable: bool, boundary: int) -> TopType:
    """Solve for the genus given the Euler characteristic."""
    if orientable:
        twice = 2 - euler_char - boundary
        if twice % 2:
            raise SignatureError(f"no orientable surface with chi={euler_char}, {boundary} boundary circles")
        return TopType(twice // 2, True, boundary)
    return TopType(2 - euler_char - boundary, False, boundary)


# -- parsing -----------------------------------------------------------------

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.chars = [(ch, i) for i, ch in enumerate(text) if not ch.isspace()]
        self.i = 0

    def pos(self) -> int:
        if self.i < len(self.chars):
            return self.chars[self.i][1]
        return len(self.text)

    def peek(self) -> str:
        return self.chars[self.i][0] if self.i < len(self.chars) else ""

    def fail(self, message: str):
        raise SignatureSyntaxError(message, self.pos(), self.text)

    def expect(self, ch: str):
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            self.fail(f"expected {ch!r}, got {got}")
        self.i += 1

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def integer(self) -> int:
        start = self.i
        while self.peek().isdigit():
            self.i += 1
        if start == self.i:
            self.fail("expected integer")
        return int("".join(c for c, _ in self.chars[start:self.i]))

    def int_list(self, close: str) -> tuple[int, ...]:
        if self.accept("-"):
            self.expect(close)
            return ()
        values = [self.integer()]
        while self.accept(","):
            values.append(self.integer())
        self.expect(close)
        return tuple(values)


def parse_signature(text: str) -> NecSignature:
    """Parse signature text such as ``"(1;+;[3];{(3)})"`` or ``"(2;-;[-];{(-)^3})"``."""
    sc = _Scanner(text)
    sc.expect("(")
    genus = sc.integer()
    sc.expect(";")
    sign = sc.peek()
    if sign not in ("+", "-"):
        sc.fail("expected sign '+' or '-'")
    sc.i += 1
    sc.expect(";")
    sc.expect("[")
    periods = sc.int_list("]")
    sc.expect(";")
    sc.expect("{")
    cycles: list[tuple[int, ...]] = []
    if not sc.accept("-"):
        while True:
            sc.expect("(")
            cycle = sc.int_list(")")
            reps = 1
            if sc.accept("^"):
                reps = sc.integer()
                if reps < 1:
                    sc.fail("cycle exponent must be >= 1")
            cycles.extend([cycle] * reps)
            if not sc.accept(","):
                break
    sc.expect("}")
    sc.expect(")")
    if sc.peek():
        sc.fail("trailing input")
    return NecSignature(genus, Sign(sign), periods, tuple(cycles))


_TOPTYPE_RE = re.compile(r"^\s*g\s*=\s*(\d+)\s*,\s*([+-])\s*,\s*k\s*=\s*(\d+)\s*$")
_TOPTYPE_SHORT_RE = re.compile(r"^\s*\(\s*(\d+)\s*;\s*([+-])\s*;\s*(\d+)\s*\)\s*$")


def parse_top_type(text: str) -> TopType:
    """Parse ``"g=2,-,k=3"``, ``"(2;-;3)"`` or a surface signature."""
    m = _TOPTYPE_RE.match(text) or _TOPTYPE_SHORT_RE.match(text)
    if m:
        return TopType(int(m.group(1)), m.group(2) == "+", int(m.group(3)))
    if text.strip().startswith("("):
        return parse_signature(text).top_type()
    raise SignatureSyntaxError("expected 'g=<int>,<sign>,k=<int>' or a signature", 0, text)


def _fmt_ints(values: Sequence[int]) -> str:
    return ",".join(map(str, values)) if values else "-"


def format_signature(s: NecSignature) -> str:
    runs: list[list] = []
    for cycle in s.period_cycles:
        if runs and runs[-1][0] == cycle:
            runs[-1][1] += 1
        else:
            runs.append([cycle, 1])
    if runs:
        cycles = ",".join(
            f"({_fmt_ints(c)})" + (f"^{n}" if n > 1 else "") for c, n in runs
        )
    else:
        cycles = "-"
    return f"({s.genus};{s.sign};[{_fmt_ints(s.proper_periods)}];{{{cycles}}})"


# -- numeric invariants ------------------------------------------------------

def algebraic_genus(t: TopType) -> int:
    if t.orientable:
        return 2 * t.genus + t.boundary - 1
    return t.genus + t.boundary - 1


def euler_char_orb(s: NecSignature) -> Fraction:
    alpha = 2 if s.orientable else 1
    area = Fraction(alpha * s.genus + len(s.period_cycles) - 2)
    area += sum(1 - Fraction(1, m) for m in s.proper_periods)
    area += sum((1 - Fraction(1, n) for c in s.period_cycles for n in c), Fraction(0)) / 2
    return -area


# -- words -------------------------------------------------------------------

_LETTER_RE = re.compile(r"([A-Za-z]+\d*(?:\.\d+)?)(?:\^(-?\d+))?")


@dataclass(frozen=True)
class Word:
    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for name, exp in self.letters:
            if exp not in (1, -1):
                raise ValueError(f"exponent of {name} must be +1 or -1, got {exp}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``"d1 c1 d1^-1 x1^3"``; ``"1"`` or ``""`` is the empty word."""
        letters: list[tuple[str, int]] = []
        for token in text.replace("*", " ").split():
            if token == "1":
                continue
            m = _LETTER_RE.fullmatch(token)
            if not m:
                raise ValueError(f"bad word token {token!r}")
            power = int(m.group(2)) if m.group(2) else 1
            letters += [(m.group(1), 1 if power > 0 else -1)] * abs(power)
        return cls(tuple(letters))

    @classmethod
    def power(cls, name: str, n: int) -> "Word":
        return cls(((name, 1 if n > 0 else -1),) * abs(n))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def reduced(self) -> "Word":
        out: list[tuple[str, int]] = []
        for g, e in self.letters:
            if out and out[-1] == (g, -e):
                out.pop()
            else:
                out.append((g, e))
        return Word(tuple(out))

    def generators(self) -> set[str]:
        return {g for g, _ in self.letters}

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)


# -- presentations -----------------------------------------------------------

class GenKind(enum.Enum):
    HANDLE_A = "handle_a"
    HANDLE_B = "handle_b"
    GLIDE = "glide"
    ELLIPTIC = "elliptic"
    BOUNDARY = "boundary"
    REFLECTION = "reflection"

    @property
    def reverses_orientation(self) -> bool:
        return self in (GenKind.GLIDE, GenKind.REFLECTION)


@dataclass(frozen=True)
class Generator:
    name: str
    kind: GenKind
    order: int | None = None          # elliptic order
    cycle: int | None = None          # 1-based cycle index (boundary, reflection)
    position: int | None = None       # reflection position within its cycle


@dataclass(frozen=True)
class Presentation:
    signature: NecSignature
    generators: tuple[Generator, ...]
    relators: tuple[Word, ...]
    _by_name: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_name", {g.name: g for g in self.generators})

    def __getitem__(self, name: str) -> Generator:
        return self._by_name[name]

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def of_kind(self, *kinds: GenKind) -> list[Generator]:
        return [g for g in self.generators if g.kind in kinds]

    def cycle_reflections(self, i: int) -> list[Generator]:
        refl = [g for g in self.generators if g.kind is GenKind.REFLECTION and g.cycle == i]
        return sorted(refl, key=lambda g: g.position)


def reflection_name(cycle: int, position: int, cycle_length: int) -> str:
    # empty cycles carry a single reflection, written c_i
    if cycle_length == 0:
        return f"c{cycle}"
    return f"c{cycle}.{position}"


def canonical_presentation(s: NecSignature) -> Presentation:
    gens: list[Generator] = []
    rels: list[Word] = []
    long = Word()

    for i, m in enumerate(s.proper_periods, 1):
        gens.append(Generator(f"x{i}", GenKind.ELLIPTIC, order=m))
        long = long * Word.power(f"x{i}", 1)
    for i in range(1, len(s.period_cycles) + 1):
        gens.append(Generator(f"e{i}", GenKind.BOUNDARY, cycle=i))
        long = long * Word.power(f"e{i}", 1)
    if s.orientable:
        for i in range(1, s.genus + 1):
            a, b = f"a{i}", f"b{i}"
            gens += [Generator(a, GenKind.HANDLE_A), Generator(b, GenKind.HANDLE_B)]
            long = long * Word(((a, 1), (b, 1), (a, -1), (b, -1)))
    else:
        for i in range(1, s.genus + 1):
            gens.append(Generator(f"d{i}", GenKind.GLIDE))
            long = long * Word.power(f"d{i}", 2)
    rels.append(long)

    for i, m in enumerate(s.proper_periods, 1):
        rels.append(Word.power(f"x{i}", m))

    for i, cycle in enumerate(s.period_cycles, 1):
        names = [reflection_name(i, j, len(cycle)) for j in range(len(cycle) + 1)]
        for j, name in enumerate(names):
            gens.append(Generator(name, GenKind.REFLECTION, cycle=i, position=j))
            rels.append(Word.power(name, 2))
        for j, n in enumerate(cycle, 1):
            rels.append(Word(((names[j - 1], 1), (names[j], 1))) ** n)
        e = f"e{i}"
        rels.append(Word(((e, 1), (names[0], 1), (e, -1), (names[-1], -1))))

    return Presentation(s, tuple(gens), tuple(rels))


def orientation_character(s: NecSignature | Presentation) -> dict[str, int]:
    """Generator name -> 0 (preserves orientation) or 1 (reverses)."""
    pres = s if isinstance(s, Presentation) else canonical_presentation(s)
    return {g.name: int(g.kind.reverses_orientation) for g in pres.generators}


def word_character(character: dict[str, int], word: Word) -> int:
    """Extend a generator-level map to C2 = {0, 1} to a word."""
    try:
        return sum(character[g] for g, _ in word) % 2
    except KeyError as exc:
        raise KeyError(f"unknown generator {exc.args[0]!r}") from None


# -- fundamental polygon -----------------------------------------------------

class SideRole(enum.Enum):
    SOURCE = "source"    # the side g carries onto its partner
    TARGET = "target"
    MIRROR = "mirror"


@dataclass(frozen=True)
class Side:
    label: str
    generator: str
    role: SideRole
    preserving: bool = True   # orientation behaviour of the pairing

    @property
    def is_mirror(self) -> bool:
        return self.role is SideRole.MIRROR


def fundamental_polygon(s: NecSignature) -> list[Side]:
    """Sides of the fundamental polygon in boundary order.

    Walking once around the main vertex reads the long relator letter for
    letter, the junction vertex of cycle i reads ``e_i c_i0 e_i^-1 c_is``
    (up to rotation), so covers built from this polygon realise the
    canonical presentation exactly.
    """
    sides: list[Side] = []
    for i, _ in enumerate(s.proper_periods, 1):
        x = f"x{i}"
        sides += [Side(f"ξ{i}'", x, SideRole.SOURCE), Side(f"ξ{i}", x, SideRole.TARGET)]
    for i, cycle in enumerate(s.period_cycles, 1):
        e = f"e{i}"
        sides.append(Side(f"ε{i}'", e, SideRole.SOURCE))
        for j in reversed(range(len(cycle) + 1)):
            name = reflection_name(i, j, len(cycle))
            sides.append(Side("γ" + name[1:], name, SideRole.MIRROR, preserving=False))
        sides.append(Side(f"ε{i}", e, SideRole.TARGET))
    if s.orientable:
        for i in range(1, s.genus + 1):
            a, b = f"a{i}", f"b{i}"
            sides += [
                Side(f"α{i}'", a, SideRole.SOURCE),
                Side(f"β{i}", b, SideRole.TARGET),
                Side(f"α{i}", a, SideRole.TARGET),
                Side(f"β{i}'", b, SideRole.SOURCE),
            ]
    else:
        for i in range(1, s.genus + 1):
            d = f"d{i}"
            sides += [
                Side(f"α{i}*", d, SideRole.SOURCE, preserving=False),
                Side(f"α{i}", d, SideRole.TARGET, preserving=False),
            ]
    return sides


def surface_symbol(s: NecSignature) -> list[tuple[str, str]]:
    """(side label, mark) pairs; the mark says how the side is identified.

    ``"a1(α1')=α1"`` on a source side, ``"fixed by c1"`` on a mirror side,
    an empty mark on target sides.
    """
    out = []
    for side in fundamental_polygon(s):
        if side.role is SideRole.MIRROR:
            out.append((side.label, f"fixed by {side.generator}"))
        elif side.role is SideRole.SOURCE:
            target = side.label.rstrip("'*")
            out.append((side.label, f"{side.generator}({side.label})={target}"))
        else:
            out.append((side.label, ""))
    return out


def symbol_string(s: NecSignature) -> str:
    return "".join(label for label, _ in surface_symbol(s))


def signature_grid(max_genus: int = 2, max_periods: int = 2, max_cycles: int = 2,
                   values: Iterable[int] = (2, 3)) -> list[NecSignature]:
    """A small deterministic family of signatures for sweeps."""
    import itertools

    values = tuple(values)
    period_lists = [()] + [(m,) for m in values] + [tuple(p) for p in itertools.combinations_with_replacement(values, 2)]
    period_lists = [p for p in period_lists if len(p) <= max_periods]
    cycle_shapes = [(), (2,), (3, 2)]
    out = []
    for g in range(max_genus + 1):
        for sign in (Sign.PLUS, Sign.MINUS):
            if sign is Sign.MINUS and g == 0:
                continue
            for periods in period_lists:
                for ncyc in range(max_cycles + 1):
                    for shape in itertools.product(cycle_shapes, repeat=ncyc):
                        out.append(NecSignature(g, sign, periods, shape))
    return out
