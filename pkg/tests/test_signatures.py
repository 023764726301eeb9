from fractions import Fraction

import pytest

from kleindoubles.covering import vertex_cycle_words
from kleindoubles.homomorphisms import trivial_hom
from kleindoubles.signatures import (
    NecSignature,
    Sign,
    SignatureError,
    SignatureSyntaxError,
    TopType,
    GenKind,
    Word,
    algebraic_genus,
    canonical_presentation,
    euler_char_orb,
    format_signature,
    orientation_character,
    parse_signature,
    parse_top_type,
    signature_grid,
    surface_symbol,
    word_character,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("(1;+;[3];{(3)})", NecSignature(1, Sign.PLUS, (3,), ((3,),))),
        ("(2;-;[-];{(-)^3})", NecSignature(2, Sign.MINUS, (), ((), (), ()))),
        ("(2;-;[-];{(-),(-),(-)})", NecSignature(2, Sign.MINUS, (), ((), (), ()))),
        ("(0;+;[3,2];{(2,3,4)})", NecSignature(0, Sign.PLUS, (2, 3), ((2, 3, 4),))),
        (" ( 1 ; - ; [ - ] ; { - } ) ", NecSignature(1, Sign.MINUS, (), ())),
    ],
)
def test_parse_examples(text, expected):
    assert parse_signature(text) == expected


def test_non_orientable_genus_zero_is_rejected():
    with pytest.raises(SignatureError):
        parse_signature("(0;-;[-];{(-)})")


@pytest.mark.parametrize("text", ["(1;+;[3]", "(1;*;[-];{-})", "(1;+;[1];{-})x", "1;+;[-];{-}"])
def test_syntax_errors_carry_position(text):
    with pytest.raises((SignatureSyntaxError, SignatureError)):
        parse_signature(text)


def test_period_one_is_a_domain_error():
    with pytest.raises(SignatureError):
        parse_signature("(1;+;[1];{-})")


@pytest.mark.parametrize("s", signature_grid(2, 2, 2))
def test_format_roundtrip(s):
    assert parse_signature(format_signature(s)) == s


def test_shorthand_printing():
    assert str(parse_signature("(2;-;[-];{(-),(-),(-)})")) == "(2;-;[-];{(-)^3})"


@pytest.mark.parametrize(
    "text, chi",
    [("(1;+;[3];{(3)})", Fraction(-2)), ("(0;+;[-];{(-)})", Fraction(1)),
     ("(1;-;[-];{(-)})", Fraction(0)), ("(0;+;[2,3];{(2,3,4)})", Fraction(-9, 8)),
     ("(0;+;[3];{-})", Fraction(4, 3))],
)
def test_orbifold_euler_char(text, chi):
    got = euler_char_orb(parse_signature(text))
    assert isinstance(got, Fraction) and got == chi


@pytest.mark.parametrize("g", range(0, 4))
@pytest.mark.parametrize("k", range(0, 4))
@pytest.mark.parametrize("orientable", [True, False])
def test_surface_chi_is_one_minus_algebraic_genus(g, k, orientable):
    if not orientable and g == 0:
        return
    t = TopType(g, orientable, k)
    assert euler_char_orb(t.signature()) == 1 - algebraic_genus(t)


@pytest.mark.parametrize(
    "t, p",
    [(TopType(1, False, 1), 1), (TopType(1, False, 2), 2), (TopType(2, False, 3), 4),
     (TopType(0, True, 1), 0), (TopType(2, True, 0), 3), (TopType(3, False, 0), 2)],
)
def test_algebraic_genus(t, p):
    assert algebraic_genus(t) == p


def test_top_type_forms():
    assert parse_top_type("g=2,-,k=3") == TopType(2, False, 3)
    assert parse_top_type("(2;-;3)") == TopType(2, False, 3)
    assert parse_top_type("(2;-;[-];{(-)^3})") == TopType(2, False, 3)
    with pytest.raises(SignatureSyntaxError):
        parse_top_type("genus two")


def test_example_presentation():
    pres = canonical_presentation(parse_signature("(1;+;[3];{(3)})"))
    assert pres.names == ["x1", "e1", "a1", "b1", "c1.0", "c1.1"]
    rels = {str(r) for r in pres.relators}
    assert {"x1 x1 x1", "c1.0 c1.0", "c1.1 c1.1", "e1 c1.0 e1^-1 c1.1^-1"} <= rels
    assert "c1.0 c1.1 c1.0 c1.1 c1.0 c1.1" in rels


@pytest.mark.parametrize("s", signature_grid(2, 2, 2))
def test_relator_count(s):
    pres = canonical_presentation(s)
    # long relation, x^m, then per cycle: c^2 for s+1 reflections, s links, one e-conjugation
    expected = 1 + len(s.proper_periods) + sum(2 * len(c) + 2 if c else 2 for c in s.period_cycles)
    assert len(pres.relators) == expected


@pytest.mark.parametrize("s", signature_grid(2, 2, 2))
def test_orientation_character_kills_relators(s):
    pres = canonical_presentation(s)
    chi = orientation_character(pres)
    assert all(word_character(chi, r) == 0 for r in pres.relators)


@pytest.mark.parametrize("s", signature_grid(2, 2, 2))
def test_trivial_hom_validates(s):
    from kleindoubles.homomorphisms import is_valid

    assert is_valid(trivial_hom(canonical_presentation(s)))


def _normalized(word):
    # reflections are involutions, so c^-1 reads as c
    return tuple((g, 1 if g.startswith("c") else e) for g, e in word.reduced())


def _cyclic_forms(word):
    out = set()
    for w in (word, word.inverse()):
        seq = list(_normalized(w))
        out |= {tuple(seq[i:] + seq[:i]) for i in range(max(len(seq), 1))}
    return out


@pytest.mark.parametrize("s", signature_grid(2, 2, 2))
def test_vertex_cycles_read_relators(s):
    """Each vertex of the polygon reads a relator, or the root of a power relator."""
    pres = canonical_presentation(s)
    candidates = [pres.relators[0]] + [r for r in pres.relators[1:] if len(r.generators()) > 1]
    candidates += [Word.parse(g.name) for g in pres.of_kind(GenKind.ELLIPTIC)]
    for i, cycle in enumerate(s.period_cycles, start=1):
        refl = [g.name for g in pres.cycle_reflections(i)]
        candidates += [Word.parse(f"{a} {b}") for a, b in zip(refl, refl[1:])]
    forms = [_cyclic_forms(c) for c in candidates]
    hit_long = False
    for _, word in vertex_cycle_words(s):
        norm = _normalized(word)
        matches = [i for i, f in enumerate(forms) if norm in f]
        assert matches, f"{s}: vertex word {word} matches no relator"
        hit_long |= 0 in matches
    assert hit_long or not pres.relators[0].letters


def test_surface_symbol_marks():
    sym = surface_symbol(parse_signature("(1;-;[-];{(-)})"))
    assert sum(1 for _, mark in sym if "fixed by" in mark) == 1
    sources = [mark for _, mark in sym if "=" in mark]
    assert len(sources) == 2   # the glide block and the boundary generator each pair two sides


def test_word_algebra():
    w = Word.parse("d1 c1 d1^-1 x1^3")
    assert str(w.inverse().inverse()) == str(w)
    assert (w * w.inverse()).reduced().letters == ()
    assert Word.parse("1").letters == ()
