"""Euler's quintic for three bodies on a line.

For masses (m1, m2, m3) in the order 1, 2, 3 a central configuration is,
up to translation and scale, (0, 1, 1 + s) where s is the unique positive root of

    p(s) = -(m1+m2) s^5 - (3m1+2m2) s^4 - (3m1+m2) s^3
           + (m2+3m3) s^2 + (2m2+3m3) s + (m2+m3)

The coefficients change sign exactly once, so Descartes' rule gives one positive root.
"""

import logging
import math

from typing import Tuple

import numpy as np

from numpy.polynomial import Polynomial
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.optimize import bisect

from src.core.errors import CheckFailure, InvalidInputError, InvalidMass, RootBracketFailure
from src.core.formulas import Masses, as_masses, inertia_about_com, normalize_inertia, potential


logger = logging.getLogger(__name__)

SYMMETRIC_MU = 9.0
# Middle mass for which s = 2 is the root with masses (1, 1, mu): p(2) = 19 mu - 167.
EXACT_ROOT_MU = 167.0 / 19.0
# U at (0, 1, 3) scaled to unit inertia for masses (1, 1, 9); bounds their critical value from above.
TRIAL_UPPER_BOUND = 51.0 / 6.0 * math.sqrt(118.0 / 11.0)
MIN_MIDDLE_END_GAP = 1.6

BISECTION_XTOL = 1e-10
POLISH_STEPS = 2


class EulerQuintic(BaseModel):
    """Coefficients of p, highest degree first."""

    model_config = ConfigDict(frozen=True)

    coefficients: Tuple[float, ...] = Field(..., description="Coefficients of s^5 down to s^0")

    @field_validator("coefficients")
    @classmethod
    def validate_coefficients(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        """Validate the degree and the three-negative, three-positive sign pattern."""
        if len(v) != 6:
            raise ValueError(f"a quintic has 6 coefficients, got {len(v)}")
        if any(c >= 0 for c in v[:3]) or any(c <= 0 for c in v[3:]):
            raise ValueError(f"coefficients must be three negative then three positive, got {list(v)}")
        return v

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial(self.coefficients[::-1])

    def __call__(self, s: float) -> float:
        return float(self.polynomial(s))

    @property
    def sign_changes(self) -> int:
        signs = np.sign(self.coefficients)
        return int(np.count_nonzero(signs[1:] != signs[:-1]))

    def scale(self, s: float) -> float:
        """Size of the terms of p at s, for relative residual checks."""
        return float(sum(abs(c) * max(1.0, s) ** (5 - k) for k, c in enumerate(self.coefficients)))

    def root_bound(self) -> float:
        """Upper bound 1 + sum|c| / |leading| for the positive root."""
        return 1.0 + sum(abs(c) for c in self.coefficients) / abs(self.coefficients[0])


def _coefficients(m1: float, m2: float, m3: float) -> Tuple[float, ...]:
    return (
        -(m1 + m2),
        -(3 * m1 + 2 * m2),
        -(3 * m1 + m2),
        m2 + 3 * m3,
        2 * m2 + 3 * m3,
        m2 + m3,
    )


def _three_masses(m: Masses) -> np.ndarray:
    masses = as_masses(m)
    if masses.size != 3:
        raise InvalidMass(f"Euler's quintic needs exactly three masses, got {masses.size}")
    return masses


def euler_quintic(m: Masses) -> EulerQuintic:
    """Euler's quintic for the masses m = (m1, m2, m3).

    Raises:
        InvalidMass: If m is not three strictly positive masses.
    """
    m1, m2, m3 = _three_masses(m)
    return EulerQuintic(coefficients=_coefficients(float(m1), float(m2), float(m3)))


def euler_root(m: Masses) -> float:
    """The unique positive root of Euler's quintic, by bisection and Newton polish.

    Raises:
        InvalidMass: If m is not three strictly positive masses.
        RootBracketFailure: If p does not change sign on [0, root_bound].
    """
    quintic = euler_quintic(m)
    p = quintic.polynomial
    dp = p.deriv()
    upper = quintic.root_bound()

    try:
        root = bisect(p, 0.0, upper, xtol=BISECTION_XTOL, maxiter=200)
    except ValueError as e:
        logger.error(f"quintic {quintic.coefficients} has no sign change on [0, {upper}]")
        raise RootBracketFailure(f"no sign change of Euler's quintic on [0, {upper}]") from e

    for _ in range(POLISH_STEPS):
        slope = dp(root)
        if slope == 0:
            break
        polished = root - p(root) / slope
        if polished <= 0:
            break
        root = float(polished)

    residual = abs(quintic(root))
    if residual > 1e-12 * quintic.scale(root):
        logger.warning(f"Euler root {root!r} has residual {residual:.3e}")
    return float(root)


def euler_configuration(m: Masses) -> np.ndarray:
    """The configuration (0, 1, 1 + s) for masses m in the order 1, 2, 3."""
    return np.array([0.0, 1.0, 1.0 + euler_root(m)])


def euler_unit_configuration(m: Masses) -> np.ndarray:
    """Euler's configuration translated to zero center of mass and scaled to unit inertia."""
    masses = _three_masses(m)
    x = euler_configuration(masses)
    return normalize_inertia(x - np.dot(masses, x) / masses.sum(), masses)


def euler_value(m: Masses) -> float:
    """Critical value of the identity ordering, U * I_G**(1/2) at Euler's configuration."""
    masses = _three_masses(m)
    x = euler_configuration(masses)
    return potential(x, masses) * math.sqrt(inertia_about_com(x, masses))


def symmetric_value(mu: float) -> float:
    """Critical value of the identity ordering for masses (1, mu, 1): sqrt(2)/2 + 2 sqrt(2) mu.

    Raises:
        InvalidMass: If mu is not strictly positive.
    """
    if not mu > 0:
        raise InvalidMass(f"mu must be strictly positive, got {mu}")
    return math.sqrt(2.0) / 2.0 + 2.0 * math.sqrt(2.0) * mu


def mass_for_root(s: float) -> float:
    """The mass mu for which s is the positive root of Euler's quintic with masses (1, 1, mu).

    p is affine in mu, p(s) = a(s) + mu b(s), so this is an exact linear solve.

    Raises:
        InvalidInputError: If no positive mu makes s a root.
    """
    base = Polynomial(_coefficients(1.0, 1.0, 0.0)[::-1])
    unit = Polynomial(_coefficients(1.0, 1.0, 1.0)[::-1])
    slope = float(unit(s) - base(s))
    if not s > 0 or slope == 0:
        raise InvalidInputError(f"no mass makes s = {s} a root")
    mu = -float(base(s)) / slope
    if mu <= 0:
        raise InvalidInputError(f"s = {s} is a root only for mu = {mu}, which is not a positive mass")
    return mu


def middle_end_gap(mu: float = SYMMETRIC_MU) -> Tuple[float, float]:
    """Critical values of the identity ordering for masses (1, mu, 1) and (1, 1, mu).

    The first is the mass-in-the-middle value, the second the mass-at-the-end value,
    which also equals the critical value of the ordering (1, 3, 2) for (1, mu, 1).

    Raises:
        CheckFailure: If at the default mu the two values are not separated by MIN_MIDDLE_END_GAP.
    """
    middle = symmetric_value(mu)
    end = euler_value((1.0, 1.0, mu))
    if mu == SYMMETRIC_MU and abs(end - middle) <= MIN_MIDDLE_END_GAP:
        raise CheckFailure("middle-end-gap", f"values {middle!r} and {end!r} are closer than {MIN_MIDDLE_END_GAP}")
    return middle, end


# Gap of the limiting three-body problem, under its short name.
l3bp_gap = middle_end_gap
