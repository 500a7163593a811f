"""Exact-arithmetic cohomology calculus for complex surfaces.

Integral exterior algebras on the degree-one classes, the bigraded
product-with-torus calculus, pushforward Chern characters with their
closed forms, curve-induced transport of moment sequences, and the
adjunction-side integer arithmetic.  Everything is exact: coefficients
are int or fractions.Fraction, never floats.
"""

from .errors import (
    CheckResult,
    ConsistencyError,
    DegreeError,
    FormatError,
    HypothesisWarning,
    IntegralityError,
    ParityError,
    SurfaceDataError,
    SurfcohError,
)
from .extalg import DUAL, PRIMAL, ExtForm, contract, exp2, pairing, truncate, wedge
from .kunneth import BigradedClass, chern_from_ch, slant, todd_factor
from .lattice import Lattice, LatticeClass
from .relations import (
    AdjunctionVerdict,
    CoefficientPolynomial,
    MomentSequence,
    PoincarePair,
    adjunction_check,
    apply_curve_relation,
    assemble_minus,
    assemble_plus,
    check_relation_consistency,
    coefficient_class,
    n_down,
    n_down_variant,
    n_up,
    push_down,
    push_up,
)
from .riemann_roch import (
    PushforwardCharacter,
    ch_pushforward,
    closed_form_ch,
    difference_character,
    difference_chern,
    universal_exponent,
    verify_character,
)
from .spinc import (
    EmbeddedSurfaceData,
    SpincClass,
    bound_equivalence,
    bound_equivalence_arith,
    check_theta_kappa,
    embedded_data_for_class,
    genus_selfintersection,
    spinc_chern,
    theta_sigma,
)
from .surface import (
    CohClass,
    SurfaceTopology,
    abelian_surface,
    kappa,
    q0_surface,
    theta,
    xi,
)
from .surfacefile import (
    ParsedSurface,
    form_terms_to_str,
    parse_form_terms,
    parse_surface_file,
    parse_surface_text,
    serialize,
)

__version__ = "0.1.0"

__all__ = [
    "AdjunctionVerdict",
    "BigradedClass",
    "CheckResult",
    "CoefficientPolynomial",
    "CohClass",
    "ConsistencyError",
    "DUAL",
    "DegreeError",
    "EmbeddedSurfaceData",
    "ExtForm",
    "FormatError",
    "HypothesisWarning",
    "IntegralityError",
    "Lattice",
    "LatticeClass",
    "MomentSequence",
    "PRIMAL",
    "ParityError",
    "ParsedSurface",
    "PoincarePair",
    "PushforwardCharacter",
    "SpincClass",
    "SurfaceDataError",
    "SurfaceTopology",
    "SurfcohError",
    "abelian_surface",
    "adjunction_check",
    "apply_curve_relation",
    "assemble_minus",
    "assemble_plus",
    "bound_equivalence",
    "bound_equivalence_arith",
    "ch_pushforward",
    "check_relation_consistency",
    "check_theta_kappa",
    "chern_from_ch",
    "closed_form_ch",
    "coefficient_class",
    "contract",
    "difference_character",
    "difference_chern",
    "embedded_data_for_class",
    "exp2",
    "form_terms_to_str",
    "genus_selfintersection",
    "kappa",
    "n_down",
    "n_down_variant",
    "n_up",
    "pairing",
    "parse_form_terms",
    "parse_surface_file",
    "parse_surface_text",
    "push_down",
    "push_up",
    "q0_surface",
    "serialize",
    "slant",
    "spinc_chern",
    "theta",
    "theta_sigma",
    "todd_factor",
    "truncate",
    "universal_exponent",
    "verify_character",
    "wedge",
    "xi",
]
