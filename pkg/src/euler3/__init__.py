"""Three bodies on a line: Euler's quintic and the symmetric closed forms."""

from src.euler3.quintic import (
    EXACT_ROOT_MU,
    SYMMETRIC_MU,
    TRIAL_UPPER_BOUND,
    EulerQuintic,
    euler_configuration,
    euler_quintic,
    euler_root,
    euler_unit_configuration,
    euler_value,
    l3bp_gap,
    mass_for_root,
    middle_end_gap,
    symmetric_value,
)

__all__ = [
    "EXACT_ROOT_MU",
    "SYMMETRIC_MU",
    "TRIAL_UPPER_BOUND",
    "EulerQuintic",
    "euler_configuration",
    "euler_quintic",
    "euler_root",
    "euler_unit_configuration",
    "euler_value",
    "l3bp_gap",
    "mass_for_root",
    "middle_end_gap",
    "symmetric_value",
]
