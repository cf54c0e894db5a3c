"""Exact formulas for collinear configurations: potential, inertia, lambda, derivatives, normalizations."""

from src.core.errors import (
    CheckFailure,
    CollisionError,
    DimensionMismatch,
    EmptyInput,
    IncompatibleOrderings,
    InvalidEpsilon,
    InvalidInputError,
    InvalidMass,
    InvalidOrdering,
    MoultonError,
    NoConvergence,
    NotNormalized,
    NumericalError,
    RootBracketFailure,
    SizeLimit,
    SizeMismatch,
    SpectrumIncomplete,
    SymmetricPair,
    ZeroConfiguration,
)
from src.core.formulas import (
    PHI_CONSTANT,
    as_masses,
    center_of_mass,
    central_residual,
    grad_w,
    hessian_form,
    hessian_w,
    in_cone,
    inertia,
    inertia_about_com,
    lambda_of,
    normalize_inertia,
    normalized_potential,
    objective,
    phi_map,
    potential,
    rescale_to_unit_lambda,
)
from src.core.models import MassVector, NormalizationKind, split_items

__all__ = [
    "CheckFailure",
    "CollisionError",
    "DimensionMismatch",
    "EmptyInput",
    "IncompatibleOrderings",
    "InvalidEpsilon",
    "InvalidInputError",
    "InvalidMass",
    "InvalidOrdering",
    "MoultonError",
    "NoConvergence",
    "NotNormalized",
    "NumericalError",
    "RootBracketFailure",
    "SizeLimit",
    "SizeMismatch",
    "SpectrumIncomplete",
    "SymmetricPair",
    "ZeroConfiguration",
    "PHI_CONSTANT",
    "as_masses",
    "center_of_mass",
    "central_residual",
    "grad_w",
    "hessian_form",
    "hessian_w",
    "in_cone",
    "inertia",
    "inertia_about_com",
    "lambda_of",
    "normalize_inertia",
    "normalized_potential",
    "objective",
    "phi_map",
    "potential",
    "rescale_to_unit_lambda",
    "MassVector",
    "NormalizationKind",
    "split_items",
]
