"""Exact Fubini-type, Bernoulli, Cauchy and Euler numbers by several independent routes."""

from .families import FamilyError, FamilyId, family
from .hessenberg import (
    HypothesisError,
    RProfile,
    char_poly,
    det_fraction_free,
    det_via_theorem1,
    family_profile,
    inversion_R_from_alpha,
    number_from_determinant,
    principal_minor,
    principal_minor_sum,
    toeplitz_hessenberg,
    unit_lower_toeplitz_inverse,
)
from .power_series import TruncatedEGF, family_egf, number_from_egf
from .trudi import number_via_trudi, partitions_fixed_weight, trudi_det

__version__ = "0.1.0"

__all__ = [
    "FamilyError",
    "FamilyId",
    "family",
    "HypothesisError",
    "RProfile",
    "char_poly",
    "det_fraction_free",
    "det_via_theorem1",
    "family_profile",
    "inversion_R_from_alpha",
    "number_from_determinant",
    "principal_minor",
    "principal_minor_sum",
    "toeplitz_hessenberg",
    "unit_lower_toeplitz_inverse",
    "TruncatedEGF",
    "family_egf",
    "number_from_egf",
    "number_via_trudi",
    "partitions_fixed_weight",
    "trudi_det",
]
