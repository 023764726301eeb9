import pytest

from kleindoubles.catalog import (
    classify_standard_doubles,
    complex_double,
    dd_type,
    engine_double,
    orienting_double,
    schottky_double,
)
from kleindoubles.errors import HypothesisError
from kleindoubles.signatures import TopType, algebraic_genus

from .conftest import bordered_grid


def test_two_holed_klein_bottle_table():
    recs = classify_standard_doubles(TopType(2, False, 3))
    assert [(r.row, r.label, str(r.top_type)) for r in recs] == [
        (1, "complex", "(4;+;0)"),
        (2, "orienting", "(1;+;6)"),
        (3, "schottky", "(8;-;0)"),
    ]


def test_two_holed_projective_plane_rows():
    recs = classify_standard_doubles(TopType(1, False, 2))
    assert [str(r.top_type) for r in recs] == [
        "(2;+;0)", "(0;+;4)", "(4;-;0)", "(2;-;2)", "(2;-;2)", "(4;-;0)", "(4;-;0)",
    ]
    assert [r.label for r in recs][3:] == ["plain"] * 4


@pytest.mark.parametrize("t", bordered_grid(4, 4) + bordered_grid(3, 3, orientable=True))
def test_catalog_matches_engine(t):
    for rec in classify_standard_doubles(t):
        assert engine_double(t, rec.assignment) == rec.top_type


@pytest.mark.parametrize("t", bordered_grid(4, 4) + bordered_grid(3, 3, orientable=True))
def test_unique_complex_label(t):
    recs = classify_standard_doubles(t)
    complex_rows = [r for r in recs if r.label == "complex"]
    closed_orientable = [r for r in recs if r.boundary == 0 and r.orientable]
    assert len(complex_rows) == 1 and complex_rows == closed_orientable
    assert complex_rows[0].top_type == complex_double(t)
    assert all(r.top_type.euler_char == 2 * t.euler_char for r in recs)


@pytest.mark.parametrize(
    "t, expected",
    [(TopType(1, False, 2), TopType(2, True, 0)), (TopType(1, False, 1), TopType(1, True, 0)),
     (TopType(0, True, 1), TopType(0, True, 0)), (TopType(3, False, 0), TopType(2, True, 0))],
)
def test_complex_double(t, expected):
    assert complex_double(t) == expected
    assert complex_double(t).genus == algebraic_genus(t)


def test_orienting_double_cases():
    assert orienting_double(TopType(2, False, 3)) == (TopType(1, True, 6), 1)
    assert orienting_double(TopType(1, True, 2)) == (TopType(1, True, 2), 2)
    assert orienting_double(TopType(3, False, 0)) == (TopType(2, True, 0), 1)


def test_schottky_double_cases():
    assert schottky_double(TopType(2, False, 3)) == (TopType(8, False, 0), 1)
    assert schottky_double(TopType(1, True, 1)) == (TopType(2, True, 0), 1)
    assert schottky_double(TopType(3, False, 0)) == (TopType(3, False, 0), 2)


@pytest.mark.parametrize(
    "t, expected",
    [(TopType(1, False, 1), TopType(1, True, 0)), (TopType(1, False, 2), TopType(3, True, 0)),
     (TopType(3, False, 2), TopType(7, True, 0))],
)
def test_dd_type(t, expected):
    assert dd_type(t) == expected
    assert dd_type(t).genus == 2 * algebraic_genus(t) - 1


@pytest.mark.parametrize("t", [TopType(1, True, 1), TopType(2, False, 0)])
def test_dd_type_refuses(t):
    with pytest.raises(HypothesisError, match="non-empty boundary"):
        dd_type(t)


def test_as_dict_columns():
    row = classify_standard_doubles(TopType(1, False, 1))[0].as_dict()
    assert {"row", "assignment", "B", "orientability", "genus", "label"} <= set(row)
