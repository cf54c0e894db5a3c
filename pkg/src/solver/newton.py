"""Damped Newton minimization of W = U + I on an ordering cone.

W is proper and strictly convex on every cone, with Hessian spectrum bounded
below by 2 min(m), so it has exactly one critical point there: the Moulton
central configuration normalized by lambda = 1. Rescaling it to unit inertia
gives the configuration whose potential is the critical value of the cone.
"""

import logging

from typing import List, Optional

import numpy as np

from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.linalg import cho_factor, cho_solve

from src.core.errors import DimensionMismatch, InvalidInputError, NoConvergence
from src.core.formulas import (
    Masses,
    as_masses,
    grad_w,
    hessian_w,
    in_cone,
    lambda_of,
    normalize_inertia,
    objective,
    potential,
    rescale_to_unit_lambda,
)
from src.core.models import MassVector, NormalizationKind
from src.permutations.orderings import Ordering


logger = logging.getLogger(__name__)


class SolverOptions(BaseModel):
    """Configuration for the Newton iteration."""

    model_config = ConfigDict(frozen=True)

    gradient_tolerance: float = Field(
        default=1e-12,
        description="Stopping tolerance on the gradient max-norm, relative to the initial gradient",
        gt=0,
        lt=1,
    )
    absolute_floor: float = Field(
        default=1e-13,
        description="Smallest absolute gradient tolerance",
        gt=0,
    )
    max_iterations: int = Field(
        default=200,
        description="Maximum number of Newton steps",
        ge=1,
    )
    boundary_fraction: float = Field(
        default=0.9,
        description="Fraction of the distance to the cone boundary a step may cover",
        gt=0,
        lt=1,
    )
    armijo: float = Field(
        default=1e-4,
        description="Sufficient-decrease constant of the backtracking line search",
        gt=0,
        lt=0.5,
    )
    max_backtracks: int = Field(
        default=60,
        description="Maximum number of step halvings per iteration",
        ge=1,
    )


class CentralConfigSolution(BaseModel):
    """A solved Moulton configuration with its critical value and diagnostics."""

    model_config = ConfigDict(frozen=True)

    configuration: List[float] = Field(..., description="Position of each body, in body-label order")
    ordering: Ordering = Field(..., description="Ordering cone the configuration lies in")
    masses: MassVector
    normalization: NormalizationKind
    critical_value: float = Field(..., description="Potential at the unit-inertia representative")
    lambda_value: float = Field(..., description="U / 2I at this configuration", serialization_alias="lambda")
    inertia_value: float = Field(..., description="Moment of inertia about the origin", serialization_alias="inertia")
    com_residual: float = Field(..., description="|sum m_i r_i| / (sum m * diameter)")
    iterations: int
    final_gradient_norm: float
    objective_history: List[float] = Field(default_factory=list, exclude=True)

    @model_validator(mode="after")
    def validate_cone(self) -> "CentralConfigSolution":
        """Validate that the configuration lies strictly inside its ordering cone."""
        if not in_cone(self.configuration, self.ordering.places):
            raise ValueError(f"configuration is outside the cone of ordering {self.ordering}")
        return self

    @property
    def positions(self) -> np.ndarray:
        return np.asarray(self.configuration, dtype=np.float64)


def initial_configuration(sigma: Ordering, m: Masses) -> np.ndarray:
    """Bodies equally spaced on [-1, 1] in the order of sigma, shifted to zero center of mass."""
    masses = as_masses(m)
    positions = np.empty(sigma.size)
    positions[np.asarray(sigma.places) - 1] = np.linspace(-1.0, 1.0, sigma.size)
    return positions - np.dot(masses, positions) / masses.sum()


def random_feasible_start(
    sigma: Ordering, rng: np.random.Generator, scale: float = 3.0, min_gap: float = 0.05
) -> np.ndarray:
    """A random point inside the cone of sigma, coordinates in [-scale, scale], gaps above min_gap * scale."""
    while True:
        values = np.sort(rng.uniform(-scale, scale, size=sigma.size))
        if np.all(np.diff(values) > min_gap * scale):
            break
    positions = np.empty(sigma.size)
    positions[np.asarray(sigma.places) - 1] = values
    return positions


def _boundary_step(positions: np.ndarray, direction: np.ndarray, sigma: Ordering, fraction: float) -> float:
    index = np.asarray(sigma.places) - 1
    gaps = np.diff(positions[index])
    closing = np.diff(direction[index])
    shrinking = closing < 0
    if not np.any(shrinking):
        return 1.0
    return min(1.0, fraction * float(np.min(gaps[shrinking] / -closing[shrinking])))


def _com_residual(positions: np.ndarray, masses: np.ndarray) -> float:
    diameter = positions.max() - positions.min()
    return float(abs(np.dot(masses, positions)) / (masses.sum() * diameter))


def minimize_W(
    m: Masses,
    sigma: Ordering,
    opts: Optional[SolverOptions] = None,
    start: Optional[ArrayLike] = None,
) -> CentralConfigSolution:
    """Find the unique critical point of W = U + I in the cone of sigma.

    Args:
        m: Masses of the bodies.
        sigma: Ordering whose cone is searched.
        opts: Solver options. If None, uses default options.
        start: Optional strictly feasible starting configuration.

    Returns:
        The lambda = 1 central configuration of the cone.

    Raises:
        InvalidMass: If a mass is not strictly positive.
        DimensionMismatch: If sigma and m have different sizes.
        NoConvergence: If the gradient tolerance is not reached.
    """
    opts = opts or SolverOptions()
    masses = as_masses(m)
    if sigma.size != masses.size:
        raise DimensionMismatch(f"ordering has {sigma.size} bodies but there are {masses.size} masses")

    if start is None:
        x = initial_configuration(sigma, masses)
    else:
        x = np.array(start, dtype=np.float64)
        if x.shape != masses.shape or not in_cone(x, sigma.places):
            raise InvalidInputError(f"starting configuration is not strictly inside the cone of {sigma}")

    value = objective(x, masses)
    gradient = grad_w(x, masses)
    tolerance = max(opts.gradient_tolerance * float(np.max(np.abs(gradient))), opts.absolute_floor)
    history = [value]
    iteration = 0

    while True:
        gradient_norm = float(np.max(np.abs(gradient)))
        if gradient_norm <= tolerance:
            break
        if iteration >= opts.max_iterations:
            logger.error(f"Newton stopped after {iteration} iterations for ordering {sigma}, |g| = {gradient_norm:.3e}")
            raise NoConvergence(
                f"no convergence in {iteration} iterations for ordering {sigma} (gradient norm {gradient_norm:.3e})",
                configuration=x,
                gradient_norm=gradient_norm,
                iterations=iteration,
            )

        direction = cho_solve(cho_factor(hessian_w(x, masses)), -gradient)
        slope = float(np.dot(gradient, direction))
        step = _boundary_step(x, direction, sigma, opts.boundary_fraction)
        slack = 16.0 * np.finfo(float).eps * abs(value)

        for _ in range(opts.max_backtracks):
            trial = x + step * direction
            if in_cone(trial, sigma.places):
                trial_value = objective(trial, masses)
                if trial_value <= value + opts.armijo * step * slope + slack:
                    break
            step *= 0.5
        else:
            raise NoConvergence(
                f"line search failed at iteration {iteration} for ordering {sigma}",
                configuration=x,
                gradient_norm=gradient_norm,
                iterations=iteration,
            )

        x, value = trial, trial_value
        gradient = grad_w(x, masses)
        history.append(value)
        iteration += 1
        logger.debug(f"iteration {iteration}: W = {value:.17g}, step = {step:.3e}, |g| = {gradient_norm:.3e}")

    # U = 2I holds at the critical point up to the gradient residual; fix it to rounding.
    configuration = rescale_to_unit_lambda(x, masses)
    unit = normalize_inertia(configuration, masses)
    logger.debug(f"ordering {sigma} converged in {iteration} iterations")

    return CentralConfigSolution(
        configuration=configuration.tolist(),
        ordering=sigma,
        masses=MassVector(masses=tuple(masses.tolist())),
        normalization=NormalizationKind.UNIT_LAMBDA,
        critical_value=potential(unit, masses),
        lambda_value=lambda_of(configuration, masses),
        inertia_value=float(np.dot(masses, configuration**2)),
        com_residual=_com_residual(configuration, masses),
        iterations=iteration,
        final_gradient_norm=gradient_norm,
        objective_history=history,
    )


def moulton_configuration(
    m: Masses,
    sigma: Ordering,
    opts: Optional[SolverOptions] = None,
    start: Optional[ArrayLike] = None,
) -> CentralConfigSolution:
    """The unique unit-inertia central configuration in the cone of sigma.

    Equals sqrt(2) * c * U(c)**(-1/2) for the lambda = 1 solution c, since U(c) = 2 I(c).
    """
    solution = minimize_W(m, sigma, opts, start)
    masses = solution.masses.array
    unit = normalize_inertia(solution.positions, masses)
    return solution.model_copy(
        update={
            "configuration": unit.tolist(),
            "normalization": NormalizationKind.UNIT_INERTIA,
            "lambda_value": lambda_of(unit, masses),
            "inertia_value": float(np.dot(masses, unit**2)),
            "com_residual": _com_residual(unit, masses),
        }
    )


def critical_value(m: Masses, sigma: Ordering, opts: Optional[SolverOptions] = None) -> float:
    """Minimum of U over the unit-inertia configurations ordered by sigma."""
    return moulton_configuration(m, sigma, opts).critical_value
