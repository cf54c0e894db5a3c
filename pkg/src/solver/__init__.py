"""Moulton central configurations by convex minimization on ordering cones."""

from src.solver.newton import (
    CentralConfigSolution,
    SolverOptions,
    critical_value,
    initial_configuration,
    minimize_W,
    moulton_configuration,
    random_feasible_start,
)

__all__ = [
    "CentralConfigSolution",
    "SolverOptions",
    "critical_value",
    "initial_configuration",
    "minimize_W",
    "moulton_configuration",
    "random_feasible_start",
]
