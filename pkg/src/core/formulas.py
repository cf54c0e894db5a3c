"""Potential, moment of inertia and their derivatives for bodies on a line.

All functions are pure: they take a configuration ``x`` (one coordinate per body)
and a mass vector ``m`` and return floats or fresh arrays.

    U(x) = sum_{i<j} m_i m_j / r_ij          I(x) = sum_i m_i r_i^2
    W(x) = U(x) + I(x)                       lambda(x) = U(x) / 2 I(x)
"""

from typing import Sequence, Tuple, Union

import numpy as np

from numpy.typing import ArrayLike

from src.core.errors import (
    CollisionError,
    DimensionMismatch,
    InvalidMass,
    NotNormalized,
    ZeroConfiguration,
)
from src.core.models import MassVector

# Pairwise distances below this fraction of the diameter count as collisions.
COLLISION_RTOL = 1e-13
UNIT_INERTIA_TOL = 1e-10

# U(x) = PHI_CONSTANT * W(phi(x))**1.5 on the unit-inertia ellipsoid.
PHI_CONSTANT = 2.0 * 3.0 ** -1.5

Masses = Union[MassVector, Sequence[float], np.ndarray]


def as_masses(m: Masses) -> np.ndarray:
    """Validate masses and return them as a float array.

    Raises:
        InvalidMass: If fewer than two masses are given or any is not strictly positive.
    """
    if isinstance(m, MassVector):
        return m.array
    arr = np.asarray(m, dtype=np.float64)
    if arr.ndim != 1 or arr.size < 2:
        raise InvalidMass(f"expected at least two masses, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise InvalidMass(f"masses must be finite and strictly positive, got {arr.tolist()}")
    return arr


def _prepare(x: ArrayLike, m: Masses) -> Tuple[np.ndarray, np.ndarray]:
    masses = as_masses(m)
    positions = np.asarray(x, dtype=np.float64)
    if positions.ndim != 1 or positions.size != masses.size:
        raise DimensionMismatch(
            f"configuration has {positions.size} coordinates but there are {masses.size} masses"
        )
    return positions, masses


def _check_collisions(positions: np.ndarray) -> None:
    ordered = np.sort(positions)
    diameter = ordered[-1] - ordered[0]
    gaps = np.diff(ordered)
    if diameter <= 0 or gaps.min() < COLLISION_RTOL * diameter:
        raise CollisionError(f"configuration has colliding bodies: {positions.tolist()}")


def _separations(positions: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Return (r_i - r_k) and |r_i - r_k|**3 with ones on the diagonal of the latter."""
    diff = positions[:, None] - positions[None, :]
    cube = np.abs(diff) ** 3
    np.fill_diagonal(cube, 1.0)
    return diff, cube


def potential(x: ArrayLike, m: Masses) -> float:
    """Newtonian potential U(x) = sum over pairs of m_i m_j / r_ij.

    Raises:
        CollisionError: If two bodies coincide.
        DimensionMismatch: If x and m have different lengths.
    """
    positions, masses = _prepare(x, m)
    _check_collisions(positions)
    i, j = np.triu_indices(positions.size, k=1)
    return float(np.sum(masses[i] * masses[j] / np.abs(positions[i] - positions[j])))


def inertia(x: ArrayLike, m: Masses) -> float:
    """Moment of inertia about the origin, I(x) = sum m_i r_i^2."""
    positions, masses = _prepare(x, m)
    return float(np.sum(masses * positions**2))


def center_of_mass(x: ArrayLike, m: Masses) -> float:
    positions, masses = _prepare(x, m)
    return float(np.sum(masses * positions) / np.sum(masses))


def inertia_about_com(x: ArrayLike, m: Masses) -> float:
    """Moment of inertia about the center of mass, in Leibniz's pairwise form.

    I_G = (1 / sum m) * sum_{i<j} m_i m_j r_ij^2, which is translation invariant.
    """
    positions, masses = _prepare(x, m)
    i, j = np.triu_indices(positions.size, k=1)
    return float(np.sum(masses[i] * masses[j] * (positions[i] - positions[j]) ** 2) / np.sum(masses))


def lambda_of(x: ArrayLike, m: Masses) -> float:
    """Multiplier lambda = U / 2I of the relation grad U + lambda grad I = 0.

    Homogeneous of degree -3: lambda_of(mu * x) == mu**-3 * lambda_of(x).

    Raises:
        CollisionError: If two bodies coincide.
        ZeroConfiguration: If the moment of inertia vanishes.
    """
    value = inertia(x, m)
    if value <= 0:
        raise ZeroConfiguration("lambda is undefined for a configuration with zero moment of inertia")
    return potential(x, m) / (2.0 * value)


def objective(x: ArrayLike, m: Masses) -> float:
    """W(x) = U(x) + I(x), strictly convex on each ordering cone."""
    return potential(x, m) + inertia(x, m)


def normalized_potential(x: ArrayLike, m: Masses) -> float:
    """U * I**(1/2), the scale-invariant potential whose critical points are central configurations."""
    return potential(x, m) * np.sqrt(inertia(x, m))


def grad_w(x: ArrayLike, m: Masses) -> np.ndarray:
    """Gradient of W: component i is 2 m_i r_i - sum_k m_i m_k (r_i - r_k) / r_ik^3."""
    positions, masses = _prepare(x, m)
    _check_collisions(positions)
    diff, cube = _separations(positions)
    attraction = masses * ((diff / cube) @ masses)
    return 2.0 * masses * positions - attraction


def hessian_w(x: ArrayLike, m: Masses) -> np.ndarray:
    """Hessian of W; symmetric positive definite with spectrum bounded below by 2 min(m)."""
    positions, masses = _prepare(x, m)
    _check_collisions(positions)
    _, cube = _separations(positions)
    coupling = 2.0 * np.outer(masses, masses) / cube
    np.fill_diagonal(coupling, 0.0)
    hessian = -coupling
    hessian[np.diag_indices_from(hessian)] = 2.0 * masses + coupling.sum(axis=1)
    return hessian


def hessian_form(x: ArrayLike, m: Masses, y: ArrayLike) -> float:
    """<y, D^2 W(x) y> = 2 sum_{i<j} m_i m_j r_ij^-3 (s_i - s_j)^2 + 2 I(y), evaluated pairwise."""
    positions, masses = _prepare(x, m)
    direction, _ = _prepare(y, masses)
    _check_collisions(positions)
    i, j = np.triu_indices(positions.size, k=1)
    pairs = masses[i] * masses[j] * (direction[i] - direction[j]) ** 2 / np.abs(positions[i] - positions[j]) ** 3
    return float(2.0 * np.sum(pairs) + 2.0 * np.sum(masses * direction**2))


def central_residual(x: ArrayLike, m: Masses) -> float:
    """Max-norm of grad U + lambda grad I with lambda = U / 2I; zero exactly at central configurations."""
    positions, masses = _prepare(x, m)
    multiplier = lambda_of(positions, masses)
    diff, cube = _separations(positions)
    grad_u = -masses * ((diff / cube) @ masses)
    return float(np.max(np.abs(grad_u + multiplier * 2.0 * masses * positions)))


def normalize_inertia(x: ArrayLike, m: Masses) -> np.ndarray:
    """Rescale x onto the ellipsoid I = 1.

    Raises:
        ZeroConfiguration: If I(x) is zero.
    """
    positions, masses = _prepare(x, m)
    value = float(np.sum(masses * positions**2))
    if value <= 0:
        raise ZeroConfiguration("cannot normalize a configuration with zero moment of inertia")
    return positions / np.sqrt(value)


def rescale_to_unit_lambda(x: ArrayLike, m: Masses) -> np.ndarray:
    """Rescale x so that lambda = 1, i.e. U = 2I."""
    positions, masses = _prepare(x, m)
    return positions * lambda_of(positions, masses) ** (1.0 / 3.0)


def phi_map(x: ArrayLike, m: Masses) -> np.ndarray:
    """Map a unit-inertia configuration x to (U(x)/2)**(1/3) * x, where lambda = 1.

    Raises:
        CollisionError: If two bodies coincide.
        NotNormalized: If I(x) differs from 1 by more than UNIT_INERTIA_TOL.
    """
    positions, masses = _prepare(x, m)
    value = float(np.sum(masses * positions**2))
    if abs(value - 1.0) > UNIT_INERTIA_TOL:
        raise NotNormalized(f"phi_map requires I(x) = 1, got {value!r}")
    return (potential(positions, masses) / 2.0) ** (1.0 / 3.0) * positions


def in_cone(x: ArrayLike, places: Sequence[int]) -> bool:
    """Whether x lies strictly inside the cone r_{places[0]} < ... < r_{places[-1]} (1-based bodies)."""
    positions = np.asarray(x, dtype=np.float64)
    index = np.asarray(places, dtype=np.intp) - 1
    if index.size != positions.size:
        raise DimensionMismatch(f"ordering of size {index.size} for configuration of size {positions.size}")
    return bool(np.all(np.diff(positions[index]) > 0))
