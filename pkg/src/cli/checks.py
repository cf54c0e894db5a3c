"""Invariant checks runnable from the command line.

Each check returns the number of assertions it made and raises CheckFailure
on the first one that does not hold.
"""

import itertools
import logging
import math
import time

from typing import Callable, List, Tuple

import numpy as np

from pydantic import BaseModel, Field
from scipy.linalg import eigvalsh

from src.core.errors import CheckFailure
from src.core.formulas import grad_w, hessian_form, hessian_w, objective
from src.euler3 import euler_root, euler_unit_configuration, mass_for_root, middle_end_gap, symmetric_value
from src.permutations import (
    betweenness_witness,
    canonical_classes,
    enumerate_orderings,
    identity,
    is_between,
)
from src.solver import critical_value, moulton_configuration, random_feasible_start
from src.spectrum import compute_spectrum, perturb_experiment


logger = logging.getLogger(__name__)

SEED = 20240229


class CheckResult(BaseModel):
    name: str
    assertions: int = Field(..., ge=1)
    seconds: float


class CheckReport(BaseModel):
    quick: bool
    checks: List[CheckResult]

    @property
    def total_assertions(self) -> int:
        return sum(result.assertions for result in self.checks)


def _expect(name: str, condition: bool, detail: str) -> int:
    if not condition:
        raise CheckFailure(name, detail)
    return 1


def _random_point(rng: np.random.Generator, n: int) -> Tuple[np.ndarray, np.ndarray]:
    masses = np.exp(rng.uniform(math.log(0.1), math.log(10.0), size=n))
    sigma = enumerate_orderings(n)[int(rng.integers(math.factorial(n)))]
    return random_feasible_start(sigma, rng), masses


def check_gradient(points: int) -> int:
    """grad W against central differences of W."""
    rng = np.random.default_rng(SEED)
    step = 1e-6
    count = 0
    for _ in range(points):
        x, masses = _random_point(rng, int(rng.integers(2, 7)))
        analytic = grad_w(x, masses)
        numeric = np.empty_like(x)
        for i in range(x.size):
            e = np.zeros_like(x)
            e[i] = step
            numeric[i] = (objective(x + e, masses) - objective(x - e, masses)) / (2 * step)
        error = np.max(np.abs(analytic - numeric)) / max(1.0, np.max(np.abs(analytic)))
        count += _expect("gradient", error <= 1e-6, f"relative error {error:.3e} at {x.tolist()}")
    return count


def check_hessian(points: int) -> int:
    """Quadratic-form identity and the 2 min(m) spectral floor."""
    rng = np.random.default_rng(SEED + 1)
    count = 0
    for _ in range(points):
        x, masses = _random_point(rng, int(rng.integers(2, 7)))
        y = rng.normal(size=x.size)
        hessian = hessian_w(x, masses)
        direct = float(y @ hessian @ y)
        identity_form = hessian_form(x, masses, y)
        count += _expect(
            "hessian",
            abs(direct - identity_form) <= 1e-12 * abs(identity_form),
            f"quadratic forms {direct!r} and {identity_form!r} differ",
        )
        floor = float(eigvalsh(hessian)[0])
        count += _expect(
            "hessian", floor >= 2 * masses.min() - 1e-9, f"smallest eigenvalue {floor!r} below 2 min(m)"
        )
    return count


def check_trichotomy() -> int:
    """Exactly one alternative for each pair in S_4 x S_4, witnesses verified independently."""
    count = 0
    orderings = enumerate_orderings(4)
    for sigma, tau in itertools.product(orderings, orderings):
        result = betweenness_witness(sigma, tau)
        if result.kind == "witness":
            i, j, k = result.triple
            holds = is_between(sigma.places, i, j, k) and not is_between(tau.places, i, j, k)
            count += _expect("trichotomy", holds, f"witness {result.triple} fails for {sigma}, {tau}")
        else:
            count += _expect("trichotomy", result.kind in ("equal", "reversed"), f"unexpected {result.kind}")
    return count


def check_classes() -> int:
    return _expect("classes", len(canonical_classes(6)) == 360, "S_6 does not have 360 reversal classes")


def check_three_body() -> int:
    """The three-body closed forms against the solver."""
    count = 0
    value = critical_value((1.0, 9.0, 1.0), identity(3))
    count += _expect("three-body", abs(value / (37 / math.sqrt(2)) - 1) <= 1e-9, f"M(id, (1,9,1)) = {value!r}")
    count += _expect("three-body", abs(value / symmetric_value(9.0) - 1) <= 1e-10, "symmetric closed form disagrees")
    count += _expect("three-body", abs(mass_for_root(2.0) - 167 / 19) <= 1e-12, "p(2) = 0 does not give mu = 167/19")
    count += _expect("three-body", abs(euler_root((1.0, 1.0, 167 / 19)) - 2.0) <= 1e-10, "root for (1,1,167/19) is not 2")
    middle, end = middle_end_gap()
    count += _expect("three-body", end - middle > 1.6, f"gap {end - middle!r} too small")
    return count


def check_euler_oracle(triples: int) -> int:
    """Euler's configuration against the convex solver for random triples."""
    rng = np.random.default_rng(SEED + 2)
    count = 0
    for _ in range(triples):
        masses = np.exp(rng.uniform(math.log(0.1), math.log(10.0), size=3))
        oracle = euler_unit_configuration(masses)
        solved = moulton_configuration(masses, identity(3)).positions
        error = float(np.max(np.abs(oracle - solved)))
        count += _expect("euler-oracle", error <= 1e-8, f"masses {masses.tolist()} differ by {error:.3e}")
    return count


def check_equal_masses() -> int:
    report = compute_spectrum((1.0, 1.0, 1.0, 1.0))
    return _expect("equal-masses", report.distinct_count == 1, f"{report.distinct_count} distinct values")


def check_perturbation() -> int:
    table = perturb_experiment(
        (1.0, 9.0, 1.0), identity(3), identity(4), [1.0], [10.0**-k for k in range(1, 7)]
    )
    count = _expect("perturbation", table.strictly_above, "a value does not exceed the limit")
    return count + _expect("perturbation", abs(table.final_gap) <= 1e-3, f"final gap {table.final_gap!r}")


def registry(quick: bool) -> List[Tuple[str, Callable[[], int]]]:
    """Checks to run, in order; the quick subset uses fewer random points."""
    points = 10 if quick else 100
    checks: List[Tuple[str, Callable[[], int]]] = [
        ("gradient", lambda: check_gradient(points)),
        ("hessian", lambda: check_hessian(points)),
        ("trichotomy", check_trichotomy),
        ("classes", check_classes),
        ("three-body", check_three_body),
        ("euler-oracle", lambda: check_euler_oracle(points)),
    ]
    if not quick:
        checks += [("equal-masses", check_equal_masses), ("perturbation", check_perturbation)]
    return checks


def run_checks(quick: bool = False) -> CheckReport:
    """Run the suite, stopping at the first failing check.

    Raises:
        CheckFailure: Naming the first check that failed.
    """
    results = []
    for name, check in registry(quick):
        started = time.perf_counter()
        assertions = check()
        results.append(CheckResult(name=name, assertions=assertions, seconds=time.perf_counter() - started))
        logger.info(f"check {name}: {assertions} assertions passed")
    return CheckReport(quick=quick, checks=results)
