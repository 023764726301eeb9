"""Doubles of Klein surfaces, computed by explicit coverings of NEC groups."""

from .catalog import (
    DoubleRecord,
    classify_standard_doubles,
    complex_double,
    dd_type,
    orienting_double,
    schottky_double,
)
from .covering import CoverReport, CoverSpec, cover_report, signatures_equal, subgroup_signature
from .errors import HomomorphismError, HypothesisError, InconsistentComplex
from .homomorphisms import GroupHom, omega_dd, parse_hom, standard_epis_C2, theta_prime
from .moduli import RealCurveType, n_membership_check, psi_image, real_curve_types
from .permgroups import FinGroup, Perm, generated_subgroup, make_named_group
from .signatures import (
    NecSignature,
    SignatureError,
    SignatureSyntaxError,
    TopType,
    algebraic_genus,
    canonical_presentation,
    euler_char_orb,
    parse_signature,
    parse_top_type,
)
from .tower import TowerReport, build_tower, dd_monodromy, lifting_kernel_type

__all__ = [
    "CoverReport", "CoverSpec", "DoubleRecord", "FinGroup", "GroupHom", "HomomorphismError",
    "HypothesisError", "InconsistentComplex", "NecSignature", "Perm", "RealCurveType",
    "SignatureError", "SignatureSyntaxError", "TopType", "TowerReport", "algebraic_genus",
    "build_tower", "canonical_presentation", "classify_standard_doubles", "complex_double",
    "cover_report", "dd_monodromy", "dd_type", "euler_char_orb", "generated_subgroup",
    "lifting_kernel_type", "make_named_group", "n_membership_check", "omega_dd",
    "orienting_double", "parse_hom", "parse_signature", "parse_top_type", "psi_image",
    "real_curve_types", "schottky_double", "signatures_equal", "standard_epis_C2",
    "subgroup_signature", "theta_prime",
]
