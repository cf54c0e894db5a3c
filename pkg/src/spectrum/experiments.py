"""Critical-value spectra over reversal classes and the experiments built on them.

For masses m the critical values of U * I**(1/2) are the potentials of the
unit-inertia Moulton configurations, one per reversal class of orderings.
For generic masses the N!/2 values are pairwise distinct, so a single class
attains the minimum.
"""

import logging
import math

from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np

from joblib import Parallel, delayed
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.core.errors import (
    DimensionMismatch,
    EmptyInput,
    IncompatibleOrderings,
    InvalidEpsilon,
    InvalidInputError,
    InvalidMass,
    NoConvergence,
    SizeLimit,
    SizeMismatch,
    SpectrumIncomplete,
    SymmetricPair,
)
from src.core.formulas import Masses, as_masses, normalize_inertia, potential
from src.core.models import MassVector
from src.euler3.quintic import SYMMETRIC_MU
from src.permutations.orderings import (
    Ordering,
    betweenness_witness,
    canonical_classes,
    inverse,
    is_compatible,
    restrict,
)
from src.solver.newton import SolverOptions, moulton_configuration


logger = logging.getLogger(__name__)

DEFAULT_DISTINCT_TOL = 1e-9


class SpectrumEntry(BaseModel):
    """Critical value of one reversal class with its solver diagnostics."""

    model_config = ConfigDict(frozen=True)

    ordering: Ordering = Field(..., description="Canonical representative of the reversal class")
    critical_value: float
    iterations: int
    final_gradient_norm: float
    converged: bool = True


class SpectrumReport(BaseModel):
    """Critical values of all reversal classes for one mass vector."""

    model_config = ConfigDict(frozen=True)

    mass_vector: MassVector
    entries: List[SpectrumEntry]
    distinct_count: int = Field(..., ge=1)
    distinctness_tolerance: float = Field(..., gt=0)
    min_value: float
    min_class: Ordering
    min_is_unique: bool

    @model_validator(mode="after")
    def validate_entries(self) -> "SpectrumReport":
        """Validate that there is one entry per reversal class."""
        expected = math.factorial(self.mass_vector.size) // 2
        if len(self.entries) != expected:
            raise ValueError(f"expected {expected} entries, got {len(self.entries)}")
        if self.distinct_count > expected:
            raise ValueError(f"distinct_count {self.distinct_count} exceeds {expected}")
        return self

    @property
    def values(self) -> List[float]:
        return [entry.critical_value for entry in self.entries]


class SamplerSpec(BaseModel):
    """Distribution of mass vectors for a scan."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["log-uniform", "equal", "two-equal"] = Field(
        default="log-uniform",
        description="Independent log-uniform masses, all masses equal, or the first two equal",
    )
    low: float = Field(default=0.1, description="Smallest mass", gt=0)
    high: float = Field(default=10.0, description="Largest mass", gt=0)

    @model_validator(mode="after")
    def validate_range(self) -> "SamplerSpec":
        """Validate that the mass range is nonempty."""
        if not self.low < self.high:
            raise ValueError(f"low must be smaller than high, got [{self.low}, {self.high}]")
        return self

    def draw(self, rng: np.random.Generator, n: int) -> Tuple[float, ...]:
        """Draw one mass vector of n bodies."""
        logs = rng.uniform(math.log(self.low), math.log(self.high), size=n)
        masses = np.exp(logs)
        if self.kind == "equal":
            masses[:] = masses[0]
        elif self.kind == "two-equal":
            masses[1] = masses[0]
        return tuple(masses.tolist())


class DegenerateSample(BaseModel):
    model_config = ConfigDict(frozen=True)

    masses: MassVector
    distinct_count: int


class ScanReport(BaseModel):
    """Outcome of scanning random mass vectors for full spectra."""

    model_config = ConfigDict(frozen=True)

    N: int = Field(..., ge=3)
    samples: int = Field(..., ge=1)
    seed: int
    sampler: SamplerSpec
    distinctness_tolerance: float = Field(..., gt=0)
    full_spectrum_fraction: float = Field(..., ge=0.0, le=1.0)
    distinct_counts: List[Optional[int]] = Field(..., description="Per sample; None when the spectrum is incomplete")
    sample_masses: List[MassVector]
    degenerate_samples: List[DegenerateSample]
    incomplete_samples: int = Field(default=0, ge=0)


class PerturbationTable(BaseModel):
    """Critical values of an extended ordering as the extra masses vanish.

    values[k] is the critical value of extended_ordering for the masses
    (base, epsilons[k] * extra_masses); limit_value the critical value of
    base_ordering for base_masses. projected_values[k] is the potential of the
    base bodies of that solution, rescaled to unit inertia (between the limit and
    the value); trial_values[k] the potential of the base solution with the extra
    bodies inserted, rescaled to unit inertia (at least the value).
    """

    model_config = ConfigDict(frozen=True)

    base_masses: MassVector
    base_ordering: Ordering
    extended_ordering: Ordering
    extra_masses: List[float]
    epsilons: List[float]
    values: List[float]
    projected_values: List[float]
    trial_values: List[float]
    limit_value: float
    strictly_above: bool = Field(..., description="Every value exceeds the limit")
    monotone: bool = Field(..., description="Distance to the limit decreases along the epsilons")

    @property
    def final_gap(self) -> float:
        return self.values[-1] - self.limit_value


def distinct_count(values: Sequence[float], tol: float = DEFAULT_DISTINCT_TOL) -> int:
    """Number of clusters after sorting and merging neighbors within relative gap tol.

    Raises:
        EmptyInput: If values is empty.
        InvalidInputError: If tol is not positive.
    """
    if len(values) == 0:
        raise EmptyInput("distinct_count needs at least one value")
    if not tol > 0:
        raise InvalidInputError(f"tolerance must be positive, got {tol}")
    ordered = np.sort(np.asarray(values, dtype=np.float64))
    gaps = np.diff(ordered)
    scale = np.maximum(np.abs(ordered[:-1]), np.abs(ordered[1:]))
    return 1 + int(np.count_nonzero(gaps > tol * scale))


def _solve_class(masses: Tuple[float, ...], sigma: Ordering, opts: SolverOptions) -> SpectrumEntry:
    try:
        solution = moulton_configuration(masses, sigma, opts)
    except NoConvergence as e:
        logger.warning(f"class {sigma} did not converge: {e}")
        return SpectrumEntry(
            ordering=sigma,
            critical_value=float("nan"),
            iterations=e.iterations,
            final_gradient_norm=e.gradient_norm,
            converged=False,
        )
    return SpectrumEntry(
        ordering=sigma,
        critical_value=solution.critical_value,
        iterations=solution.iterations,
        final_gradient_norm=solution.final_gradient_norm,
    )


def compute_spectrum(
    m: Masses,
    opts: Optional[SolverOptions] = None,
    tol: float = DEFAULT_DISTINCT_TOL,
    n_jobs: int = 1,
) -> SpectrumReport:
    """Solve every reversal class and count the distinct critical values.

    Args:
        m: Masses of the bodies.
        opts: Solver options. If None, uses default options.
        tol: Relative tolerance under which two critical values count as equal.
        n_jobs: Worker processes; capped at the number of classes.

    Returns:
        The spectrum report, entries in canonical-class order.

    Raises:
        SpectrumIncomplete: If any class failed to converge.
    """
    opts = opts or SolverOptions()
    masses = tuple(as_masses(m).tolist())
    classes = canonical_classes(len(masses))
    workers = max(1, min(n_jobs, len(classes)))
    logger.info(f"solving {len(classes)} classes for masses {masses} with {workers} worker(s)")

    entries = Parallel(n_jobs=workers)(delayed(_solve_class)(masses, sigma, opts) for sigma in classes)

    failed = [str(entry.ordering) for entry in entries if not entry.converged]
    if failed:
        raise SpectrumIncomplete(
            f"{len(failed)} of {len(entries)} classes did not converge for masses {masses}",
            failed=failed,
            entries=[entry for entry in entries if entry.converged],
        )

    values = np.array([entry.critical_value for entry in entries])
    best = int(np.argmin(values))
    min_value = float(values[best])
    return SpectrumReport(
        mass_vector=MassVector(masses=masses),
        entries=entries,
        distinct_count=distinct_count(values, tol),
        distinctness_tolerance=tol,
        min_value=min_value,
        min_class=entries[best].ordering,
        min_is_unique=int(np.count_nonzero(values <= min_value + tol * abs(min_value))) == 1,
    )


def _scan_sample(
    masses: Tuple[float, ...], opts: SolverOptions, tol: float
) -> Optional[int]:
    try:
        return compute_spectrum(masses, opts, tol).distinct_count
    except SpectrumIncomplete as e:
        logger.warning(f"incomplete spectrum for masses {masses}: {e}")
        return None


def scan_masses(
    N: int,
    samples: int,
    seed: int,
    sampler: Optional[SamplerSpec] = None,
    opts: Optional[SolverOptions] = None,
    tol: float = DEFAULT_DISTINCT_TOL,
    n_jobs: int = 1,
) -> ScanReport:
    """Draw random mass vectors and record how often all N!/2 critical values are distinct.

    All masses are drawn from one seeded generator before any solve, so the
    report depends only on the arguments.

    Raises:
        SizeLimit: If N < 3.
        InvalidInputError: If samples < 1.
    """
    if N < 3:
        raise SizeLimit(f"a scan needs N >= 3, got {N}")
    if samples < 1:
        raise InvalidInputError(f"samples must be at least 1, got {samples}")
    sampler = sampler or SamplerSpec()
    opts = opts or SolverOptions()

    rng = np.random.default_rng(seed)
    draws = [sampler.draw(rng, N) for _ in range(samples)]
    counts = Parallel(n_jobs=max(1, min(n_jobs, samples)))(
        delayed(_scan_sample)(masses, opts, tol) for masses in draws
    )

    full = math.factorial(N) // 2
    complete = [count for count in counts if count is not None]
    degenerate = [
        DegenerateSample(masses=MassVector(masses=masses), distinct_count=count)
        for masses, count in zip(draws, counts)
        if count is not None and count < full
    ]
    if degenerate:
        logger.info(f"{len(degenerate)} of {samples} samples have fewer than {full} critical values")

    return ScanReport(
        N=N,
        samples=samples,
        seed=seed,
        sampler=sampler,
        distinctness_tolerance=tol,
        full_spectrum_fraction=(len(complete) - len(degenerate)) / len(complete) if complete else 0.0,
        distinct_counts=counts,
        sample_masses=[MassVector(masses=masses) for masses in draws],
        degenerate_samples=degenerate,
        incomplete_samples=samples - len(complete),
    )


def insert_bodies(base: np.ndarray, tau: Ordering) -> np.ndarray:
    """Place the extra bodies of tau among the base configuration, respecting tau.

    Extra bodies between two base bodies are spread evenly across the gap; those
    beyond either end are spread over one minimal base gap.
    """
    n = base.size
    spacing = float(np.min(np.diff(np.sort(base))))
    positions = np.empty(tau.size)
    pending: List[int] = []
    previous: Optional[float] = None

    for body in tau.places:
        if body > n:
            pending.append(body)
            continue
        current = float(base[body - 1])
        count = len(pending)
        for t, extra in enumerate(pending, start=1):
            if previous is None:
                positions[extra - 1] = current - spacing * (count + 1 - t) / (count + 1)
            else:
                positions[extra - 1] = previous + (current - previous) * t / (count + 1)
        positions[body - 1] = current
        pending = []
        previous = current

    for t, extra in enumerate(pending, start=1):
        positions[extra - 1] = previous + spacing * t / (len(pending) + 1)
    return positions


def _validate_epsilons(epsilons: Sequence[float]) -> List[float]:
    values = [float(eps) for eps in epsilons]
    if not values:
        raise InvalidEpsilon("at least one epsilon is required")
    if any(not eps > 0 for eps in values):
        raise InvalidEpsilon(f"epsilons must be strictly positive, got {values}")
    if any(b >= a for a, b in zip(values, values[1:])):
        raise InvalidEpsilon(f"epsilons must be strictly decreasing, got {values}")
    return values


def perturb_experiment(
    base: Masses,
    sigma0: Ordering,
    tau: Ordering,
    extra: Sequence[float],
    epsilons: Sequence[float],
    opts: Optional[SolverOptions] = None,
) -> PerturbationTable:
    """Critical values of tau for masses (base, eps * extra) as eps decreases.

    They converge to the critical value of sigma0 for the base masses and stay
    strictly above it.

    Raises:
        DimensionMismatch: If sigma0 and base have different sizes.
        SizeMismatch: If tau does not have one more body per extra mass than sigma0.
        InvalidMass: If an extra mass is not strictly positive.
        IncompatibleOrderings: If tau does not restrict to sigma0.
        InvalidEpsilon: If epsilons are empty, not positive or not strictly decreasing.
        NoConvergence: If a solve fails.
    """
    opts = opts or SolverOptions()
    base_masses = as_masses(base)
    extra_masses = np.asarray(extra, dtype=np.float64)
    n = base_masses.size
    if sigma0.size != n:
        raise DimensionMismatch(f"base ordering has {sigma0.size} bodies but there are {n} base masses")
    if extra_masses.size < 1 or tau.size != n + extra_masses.size:
        raise SizeMismatch(
            f"extended ordering has {tau.size} bodies; expected {n} base plus at least one extra body"
        )
    if not np.all(np.isfinite(extra_masses)) or np.any(extra_masses <= 0):
        raise InvalidMass(f"extra masses must be strictly positive, got {extra_masses.tolist()}")
    if not is_compatible(tau, sigma0):
        raise IncompatibleOrderings(f"ordering {tau} is not compatible with {sigma0}")
    eps_values = _validate_epsilons(epsilons)

    limit = moulton_configuration(base_masses, sigma0, opts)
    values, projected, trial = [], [], []
    for eps in eps_values:
        masses = np.concatenate([base_masses, eps * extra_masses])
        solution = moulton_configuration(masses, tau, opts)
        values.append(solution.critical_value)

        head = normalize_inertia(solution.positions[:n], base_masses)
        projected.append(potential(head, base_masses))

        inserted = normalize_inertia(insert_bodies(limit.positions, tau), masses)
        trial.append(potential(inserted, masses))
        logger.info(f"eps = {eps:.3e}: value = {solution.critical_value:.17g}")

    gaps = [value - limit.critical_value for value in values]
    strictly_above = all(gap > 0 for gap in gaps)
    monotone = all(b < a for a, b in zip(gaps, gaps[1:]))
    if not strictly_above:
        logger.error(f"values {values} do not all exceed the limit {limit.critical_value!r}")
    if not monotone:
        logger.warning(f"distance to the limit is not monotone along epsilons: {gaps}")

    return PerturbationTable(
        base_masses=MassVector(masses=tuple(base_masses.tolist())),
        base_ordering=sigma0,
        extended_ordering=tau,
        extra_masses=extra_masses.tolist(),
        epsilons=eps_values,
        values=values,
        projected_values=projected,
        trial_values=trial,
        limit_value=limit.critical_value,
        strictly_above=strictly_above,
        monotone=monotone,
    )


class WitnessOutcome(BaseModel):
    """Result of running both experiments of a witness plan."""

    model_config = ConfigDict(frozen=True)

    sigma_limit: float
    tau_limit: float
    sigma_table: Optional[PerturbationTable] = None
    tau_table: Optional[PerturbationTable] = None
    limits_separate: bool
    values_separate: bool = Field(..., description="At the smallest epsilon the two critical values differ")
    separating_masses: List[float] = Field(
        ..., description="Masses of the original bodies at the smallest epsilon, where the values are compared"
    )


class ExperimentPlan(BaseModel):
    """Two perturbation experiments separating the critical values of sigma and tau.

    The witness bodies are relabeled 1, 2, 3 in the order sigma places them, the
    middle one gets mass mu and the outer ones mass 1; remaining bodies get mass eps.
    Under sigma the heavy body sits between the other two, under tau it does not,
    so the two limits are the mass-in-the-middle and mass-at-the-end values.
    """

    model_config = ConfigDict(frozen=True)

    sigma: Ordering
    tau: Ordering
    triple: Tuple[int, int, int] = Field(..., description="Bodies (i, j, k) of the betweenness witness")
    relabeling: List[int] = Field(..., description="New label of each original body")
    relabeled_sigma: Ordering
    relabeled_tau: Ordering
    sigma_base: Ordering
    tau_base: Ordering
    mu: float = Field(..., gt=0)
    base_masses: MassVector
    extra_masses: List[float]

    @field_validator("relabeling")
    @classmethod
    def validate_relabeling(cls, v: List[int]) -> List[int]:
        """Validate that the relabeling is a permutation."""
        if sorted(v) != list(range(1, len(v) + 1)):
            raise ValueError(f"relabeling must be a permutation, got {v}")
        return v

    def masses_for(self, eps: float) -> List[float]:
        """Mass of each original body for a given eps."""
        relabeled = list(self.base_masses.masses) + [eps * value for value in self.extra_masses]
        return [relabeled[label - 1] for label in self.relabeling]

    def run(
        self,
        epsilons: Sequence[float],
        opts: Optional[SolverOptions] = None,
        tol: float = DEFAULT_DISTINCT_TOL,
    ) -> WitnessOutcome:
        """Run both experiments; with three bodies only the limits are computed."""
        opts = opts or SolverOptions()
        base = self.base_masses.array
        sigma_limit = moulton_configuration(base, self.sigma_base, opts).critical_value
        tau_limit = moulton_configuration(base, self.tau_base, opts).critical_value
        limits_separate = distinct_count([sigma_limit, tau_limit], tol) == 2

        if not self.extra_masses:
            return WitnessOutcome(
                sigma_limit=sigma_limit,
                tau_limit=tau_limit,
                limits_separate=limits_separate,
                values_separate=limits_separate,
                separating_masses=self.masses_for(0.0),
            )

        sigma_table = perturb_experiment(
            base, self.sigma_base, self.relabeled_sigma, self.extra_masses, epsilons, opts
        )
        tau_table = perturb_experiment(base, self.tau_base, self.relabeled_tau, self.extra_masses, epsilons, opts)
        return WitnessOutcome(
            sigma_limit=sigma_limit,
            tau_limit=tau_limit,
            sigma_table=sigma_table,
            tau_table=tau_table,
            limits_separate=limits_separate,
            values_separate=distinct_count([sigma_table.values[-1], tau_table.values[-1]], tol) == 2,
            separating_masses=self.masses_for(sigma_table.epsilons[-1]),
        )


def theorem_witness(sigma: Ordering, tau: Ordering, mu: float = SYMMETRIC_MU) -> ExperimentPlan:
    """Plan the experiment showing that sigma and tau have different critical values for some masses.

    The betweenness trichotomy is applied to the inverse orderings (body -> place),
    whose non-witness cases are exactly sigma == tau and sigma == reverse(tau).

    Raises:
        SizeMismatch: If the orderings have different sizes.
        SizeLimit: If there are fewer than three bodies.
        InvalidMass: If mu is not strictly positive.
        SymmetricPair: If sigma and tau are equal or mirror images.
    """
    if sigma.size != tau.size:
        raise SizeMismatch(f"orderings of sizes {sigma.size} and {tau.size} cannot be compared")
    if sigma.size < 3:
        raise SizeLimit(f"a witness needs at least three bodies, got {sigma.size}")
    if not mu > 0:
        raise InvalidMass(f"mu must be strictly positive, got {mu}")

    result = betweenness_witness(inverse(sigma), inverse(tau))
    if result.kind != "witness":
        raise SymmetricPair(f"orderings {sigma} and {tau} are {result.kind}; their critical values always agree")

    i, j, k = result.triple
    first, last = sorted((j, k), key=sigma.place_of)
    others = [body for body in range(1, sigma.size + 1) if body not in (first, i, last)]
    relabeling = [0] * sigma.size
    for label, body in enumerate([first, i, last] + others, start=1):
        relabeling[body - 1] = label

    relabeled_sigma = Ordering(places=tuple(relabeling[body - 1] for body in sigma.places))
    relabeled_tau = Ordering(places=tuple(relabeling[body - 1] for body in tau.places))
    logger.info(f"witness bodies {(i, j, k)} for {sigma} vs {tau}")

    return ExperimentPlan(
        sigma=sigma,
        tau=tau,
        triple=(i, j, k),
        relabeling=relabeling,
        relabeled_sigma=relabeled_sigma,
        relabeled_tau=relabeled_tau,
        sigma_base=restrict(relabeled_sigma, 3),
        tau_base=restrict(relabeled_tau, 3),
        mu=mu,
        base_masses=MassVector(masses=(1.0, mu, 1.0)),
        extra_masses=[1.0] * (sigma.size - 3),
    )
