"""Closed-form classification of standard and natural doubles."""

from __future__ import annotations

from dataclasses import dataclass

from .covering import CoverSpec, cover_report
from .errors import HypothesisError
from .homomorphisms import StandardAssignment, standard_epis_C2
from .permgroups import trivial_subgroup
from .signatures import TopType, algebraic_genus, canonical_presentation, top_type_from_euler

# boundary count of the double per row, as a multiple of k
ROW_BOUNDARY_FACTOR = {1: 0, 2: 2, 3: 0, 4: 1, 5: 1, 6: 0, 7: 0}
ROW_ORIENTABLE = {
    # row: (double orientable when X non-orientable, when X orientable)
    1: (True, False),
    2: (True, True),
    3: (False, True),
    4: (False, True),
    5: (False, True),
    6: (False, False),
    7: (False, False),
}


@dataclass(frozen=True)
class DoubleRecord:
    row: int
    assignment: StandardAssignment
    boundary: int
    orientable: bool
    genus: int
    label: str          # complex | orienting | schottky | plain
    components: int = 1

    @property
    def top_type(self) -> TopType:
        return TopType(self.genus, self.orientable, self.boundary)

    def as_dict(self) -> dict:
        return {
            "row": self.row,
            "assignment": str(self.assignment),
            "B": self.boundary,
            "orientability": "+" if self.orientable else "-",
            "genus": self.genus,
            "label": self.label,
            "type": str(self.top_type),
        }


def _label(row: int, x_orientable: bool) -> str:
    if x_orientable:
        # the Schottky double of an orientable surface is its complex double
        return "complex" if row == 3 else "plain"
    return {1: "complex", 2: "orienting", 3: "schottky"}.get(row, "plain")


def classify_standard_doubles(t: TopType) -> list[DoubleRecord]:
    records = []
    for assignment in standard_epis_C2(t):
        row = assignment.row
        b = ROW_BOUNDARY_FACTOR[row] * t.boundary
        orientable = ROW_ORIENTABLE[row][1 if t.orientable else 0]
        double = top_type_from_euler(2 * t.euler_char, orientable, b)
        records.append(DoubleRecord(row, assignment, b, orientable, double.genus, _label(row, t.orientable)))
    return records


def engine_double(t: TopType, assignment: StandardAssignment) -> TopType:
    """The double for ``assignment``, computed by building the cover."""
    h = assignment.hom(canonical_presentation(t.signature()))
    report = cover_report(CoverSpec(h, trivial_subgroup(h.codomain)))
    return report.signature.top_type()


def complex_double(t: TopType) -> TopType:
    return TopType(algebraic_genus(t), True, 0)


def orienting_double(t: TopType) -> tuple[TopType, int]:
    if t.orientable:
        return TopType(t.genus, True, t.boundary), 2
    if t.boundary == 0:
        return complex_double(t), 1
    return TopType(t.genus - 1, True, 2 * t.boundary), 1


def schottky_double(t: TopType) -> tuple[TopType, int]:
    if t.orientable:
        return complex_double(t), 1
    if t.boundary == 0:
        return TopType(t.genus, False, 0), 2
    return TopType(2 * t.genus + 2 * t.boundary - 2, False, 0), 1


def dd_type(t: TopType) -> TopType:
    """Type of the double of doubles: closed orientable of genus 2g + 2k - 3."""
    if t.orientable or t.boundary < 1:
        raise HypothesisError(
            f"the double of doubles needs a non-orientable Klein surface with non-empty boundary; got {t}"
        )
    return TopType(2 * t.genus + 2 * t.boundary - 3, True, 0)
