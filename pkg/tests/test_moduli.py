import pytest

from kleindoubles.errors import HypothesisError
from kleindoubles.moduli import RealCurveType, n_membership_check, psi_image, real_curve_types
from kleindoubles.signatures import TopType


@pytest.mark.parametrize("p", range(1, 11))
def test_real_curve_types(p):
    types = real_curve_types(p)
    assert len(types) == p + 1 == len({rc.top_type for rc in types})
    for rc in types:
        if rc.top_type.boundary:
            assert psi_image(rc).genus == 2 * p - 1


def test_psi_examples():
    assert psi_image(RealCurveType(TopType(1, False, 1), 1)) == TopType(1, True, 0)
    assert psi_image(RealCurveType(TopType(1, False, 2), 2)) == TopType(3, True, 0)


def test_psi_refuses_closed():
    with pytest.raises(HypothesisError):
        psi_image(RealCurveType(TopType(3, False, 0), 2))


def test_real_curve_type_validation():
    with pytest.raises(HypothesisError):
        RealCurveType(TopType(1, True, 1), 2)
    with pytest.raises(ValueError):
        RealCurveType(TopType(1, False, 1), 3)
    with pytest.raises(HypothesisError):
        real_curve_types(0)


@pytest.mark.parametrize("p", range(1, 9))
def test_membership_sweep(p):
    for rc in real_curve_types(p):
        if rc.top_type.boundary == 0:
            continue
        report = n_membership_check(rc)
        assert report.dx.genus == 2 * p - 1
        assert report.free_conformal_quotient == TopType(p, True, 0)
        assert not report.free_anticonformal_quotient.orientable
