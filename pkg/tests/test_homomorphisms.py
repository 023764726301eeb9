import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kleindoubles.casebook import example_theta
from kleindoubles.errors import HomomorphismError, HypothesisError
from kleindoubles.homomorphisms import (
    STANDARD_ROWS,
    GroupHom,
    StandardAssignment,
    enumerate_homs,
    evaluate_word,
    is_surjective,
    is_valid,
    omega_dd,
    omega_hom,
    parse_hom,
    standard_epis_C2,
    theta_prime,
    trivial_hom,
    validate,
)
from kleindoubles.permgroups import cyclic, klein_four, make_named_group
from kleindoubles.signatures import (
    GenKind,
    TopType,
    Word,
    canonical_presentation,
    orientation_character,
    parse_signature,
    word_character,
)


def test_example_theta_evaluations():
    theta = example_theta()
    d3 = theta.codomain
    pres = theta.domain
    assert evaluate_word(theta, pres.relators[0]).is_identity()
    assert evaluate_word(theta, Word(())).is_identity()
    assert evaluate_word(theta, Word.parse("e1 c1.0 e1^-1")) == d3.parse_element("tst")
    assert validate(theta) == [] and is_surjective(theta)


def test_standard_row_violating_long_relator():
    pres = canonical_presentation(TopType(1, False, 3).signature())
    h = StandardAssignment(True, False, False).hom(pres)
    bad = validate(h)
    assert bad == [pres.relators[0]]
    assert not evaluate_word(h, pres.relators[0]).is_identity()


def test_trivial_map_valid_but_not_onto():
    h = trivial_hom(canonical_presentation(TopType(2, False, 2).signature()), cyclic(2))
    assert is_valid(h) and not is_surjective(h)


def test_unknown_generator_is_rejected():
    h = example_theta()
    with pytest.raises(HomomorphismError):
        evaluate_word(h, Word.parse("d7"))


def test_missing_image_is_rejected():
    pres = canonical_presentation(parse_signature("(1;+;[3];{(3)})"))
    with pytest.raises(HomomorphismError):
        parse_hom(pres, make_named_group("d3"), "x->st")


def test_aliases():
    pres = canonical_presentation(parse_signature("(1;+;[3];{(3)})"))
    h = parse_hom(pres, make_named_group("d3"), "x->st,e->ts,a->1,b->1,c1->s,c1.1->tst")
    assert h.images == example_theta().images


@pytest.mark.parametrize("g", range(1, 7))
@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("orientable", [False, True])
def test_standard_counts(g, k, orientable):
    epis = standard_epis_C2(TopType(g, orientable, k))
    assert len(epis) == (7 if k % 2 == 0 else 3)
    assert [a.row for a in epis] == sorted(a.row for a in epis)


def test_odd_k_survivors_are_first_three_rows():
    assert [a.row for a in standard_epis_C2(TopType(1, False, 3))] == [1, 2, 3]
    assert all(not a.v_E for a in standard_epis_C2(TopType(2, False, 3)))


def test_even_k_is_all_rows():
    assert standard_epis_C2(TopType(1, False, 2)) == list(STANDARD_ROWS)


@pytest.mark.parametrize("t", [TopType(0, True, 2), TopType(2, False, 0)])
def test_standard_epis_refuse_degenerate_input(t):
    with pytest.raises(HypothesisError):
        standard_epis_C2(t)


def test_omega_on_mobius():
    h = omega_dd(TopType(1, False, 1))
    v = h.codomain
    assert h("d1") == v.gens["t"] and h("c1") == v.gens["s"] and h("e1").is_identity()
    assert is_valid(h) and is_surjective(h)


@pytest.mark.parametrize("t", [TopType(1, True, 1), TopType(2, False, 0)])
def test_omega_refuses(t):
    with pytest.raises(HypothesisError, match="non-empty boundary"):
        omega_dd(t)


def test_omega_like_map_on_closed_surface_is_not_onto():
    pres = canonical_presentation(TopType(2, False, 0).signature())
    assert is_valid(omega_hom(pres)) and not is_surjective(omega_hom(pres))


_PRES = canonical_presentation(TopType(2, False, 3).signature())
_OMEGA = omega_dd(TopType(2, False, 3))
_V = klein_four()
_words = st.lists(
    st.tuples(st.sampled_from(_PRES.names), st.sampled_from([1, -1])), max_size=30
).map(lambda letters: Word(tuple(letters)))


@settings(max_examples=200, deadline=None)
@given(_words)
def test_omega_components_are_letter_parities(w):
    value = evaluate_word(_OMEGA, w)
    s, t = _V.gens["s"], _V.gens["t"]
    s_part = value in (s, s * t)
    t_part = value in (t, s * t)
    reflections = sum(1 for g, _ in w if _PRES[g].kind is GenKind.REFLECTION) % 2
    orient = word_character(orientation_character(_PRES), w)
    assert s_part == bool(reflections)
    assert t_part == bool(orient ^ reflections)


def _coords(h, name):
    target = h.codomain
    return tuple(int(not target.component(h(name), i).is_identity()) for i in (1, 2))


def test_theta_prime_of_trivial_map_is_omega():
    t = TopType(1, False, 1)
    pres = canonical_presentation(t.signature())
    lifted = theta_prime(pres, trivial_hom(pres))
    omega = omega_dd(t)
    s, tt = omega.codomain.gens["s"], omega.codomain.gens["t"]
    for g in pres.names:
        u, v = _coords(lifted, g)
        # change of basis s = uv, t = u
        assert omega(g) == (s ** v) * (tt ** ((u + v) % 2))


def test_theta_prime_link_conjugacy():
    sig = parse_signature("(1;-;[-];{(3,3)})")
    pres = canonical_presentation(sig)
    c2 = cyclic(2)
    theta = GroupHom(pres, c2, {g: c2.gens["t"] if g == "d1" else c2.identity for g in pres.names})
    assert is_valid(theta)
    lifted = theta_prime(pres, theta, check_kernel=False)
    values = {_coords(lifted, g.name) for g in pres.cycle_reflections(1)}
    assert len(values) == 1
    assert is_valid(lifted)


def test_theta_prime_refuses_orientable_kernel():
    with pytest.raises(HypothesisError, match=r"\(7;\+"):
        theta_prime(example_theta().domain, example_theta())


def test_enumerate_homs_recovers_standard_rows():
    t = TopType(1, False, 2)
    pres = canonical_presentation(t.signature())
    found = list(enumerate_homs(pres, cyclic(2)))
    assert all(is_valid(h) and is_surjective(h) for h in found)
    standard = {tuple(sorted((k, v.images) for k, v in a.hom(pres).images.items()))
                for a in standard_epis_C2(t)}
    all_found = {tuple(sorted((k, v.images) for k, v in h.images.items())) for h in found}
    assert standard <= all_found
    # 5 generators, images in C2; surjective valid maps are all non-trivial ones
    assert len(found) == 2 ** (len(pres.names) - 1) - 1
