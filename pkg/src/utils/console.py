"""Interactive console with preloaded modules for exploring central configurations."""

from src.core import MassVector, grad_w, hessian_w, lambda_of, normalize_inertia, phi_map, potential # noqa: F401
from src.euler3 import euler_quintic, euler_root, euler_value, symmetric_value # noqa: F401
from src.permutations import betweenness_witness, canonical_classes, identity, parse_ordering # noqa: F401
from src.solver import SolverOptions, critical_value, minimize_W, moulton_configuration # noqa: F401
from src.spectrum import compute_spectrum, perturb_experiment, scan_masses, theorem_witness # noqa: F401
from src.utils.explorer import show_solution, show_spectrum, show_witness # noqa: F401

print("Console ready")
