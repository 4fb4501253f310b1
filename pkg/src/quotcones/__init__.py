"""Exact nef/effective cone computations for quotient sheaves on the line.

The library computes the rank-2 Picard lattice cones of the scheme
parametrizing degree-d, rank-r quotient sheaves of a trivial rank-n bundle
on the projective line, recovers splitting types of kernels and cokernels of
explicit polynomial matrices, and verifies every intersection-number formula
by independent exact linear algebra on one-parameter matrix families.
"""

from .chow import CurvePairing, LineBundleOnS, SurfaceClass, alpha_DY, beta_DY, chern_total, whitney_quotient
from .cones import (
    Cone2,
    DivisorClass,
    EffectiveCone,
    QuotParams,
    balanced_partition,
    boundary_slopes,
    cone_contains,
    cone_subset,
    effective_cone,
    make_params,
    nef_cone,
    stromme_to_DY,
    DY_to_stromme,
)
from .errors import QuotconesError
from .families import (
    CurveFamily,
    TrialReport,
    closed_form_prop42,
    measure_alpha_Ddeg,
    measure_beta_Dunb,
    sample_alpha_family,
    sample_beta_family,
)
from .fields import DEFAULT_PRIME, ModInt, PrimeField, RationalField
from .forms import BinaryForm, ParamPoly, bf_discriminant, bf_divide_exact, bf_gcd, bf_resultant
from .polymatrix import PolyMatrix, RowPolyMatrix, generic_rank, polymat_det
from .solver import CurveData, Theorem1Report, solve_class, spanning_consistency, theorem1_report
from .splitting import (
    LinearSubspace,
    SplittingType,
    criterion_det,
    directrix_meets,
    is_locally_free,
    is_unbalanced,
    kernel_splitting,
    left_nullity,
    quotient_splitting,
    right_nullity,
    scroll_degenerate,
    torsion_support_distinct,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "Cone2",
    "CurveData",
    "CurveFamily",
    "CurvePairing",
    "DEFAULT_PRIME",
    "DivisorClass",
    "DY_to_stromme",
    "EffectiveCone",
    "LineBundleOnS",
    "LinearSubspace",
    "ModInt",
    "ParamPoly",
    "PolyMatrix",
    "PrimeField",
    "QuotParams",
    "QuotconesError",
    "RationalField",
    "RowPolyMatrix",
    "SplittingType",
    "SurfaceClass",
    "Theorem1Report",
    "TrialReport",
    "alpha_DY",
    "balanced_partition",
    "beta_DY",
    "bf_discriminant",
    "bf_divide_exact",
    "bf_gcd",
    "bf_resultant",
    "boundary_slopes",
    "chern_total",
    "closed_form_prop42",
    "cone_contains",
    "cone_subset",
    "criterion_det",
    "directrix_meets",
    "effective_cone",
    "generic_rank",
    "is_locally_free",
    "is_unbalanced",
    "kernel_splitting",
    "left_nullity",
    "make_params",
    "measure_alpha_Ddeg",
    "measure_beta_Dunb",
    "nef_cone",
    "polymat_det",
    "quotient_splitting",
    "right_nullity",
    "sample_alpha_family",
    "sample_beta_family",
    "scroll_degenerate",
    "solve_class",
    "spanning_consistency",
    "stromme_to_DY",
    "theorem1_report",
    "torsion_support_distinct",
    "whitney_quotient",
]
