"""Critical-value spectra, mass-space scans and perturbation experiments."""

from src.spectrum.experiments import (
    DEFAULT_DISTINCT_TOL,
    DegenerateSample,
    ExperimentPlan,
    PerturbationTable,
    SamplerSpec,
    ScanReport,
    SpectrumEntry,
    SpectrumReport,
    WitnessOutcome,
    compute_spectrum,
    distinct_count,
    insert_bodies,
    perturb_experiment,
    scan_masses,
    theorem_witness,
)
from src.spectrum.export import (
    perturbation_csv,
    scan_csv,
    spectrum_csv,
    to_json,
    to_payload,
)

__all__ = [
    "DEFAULT_DISTINCT_TOL",
    "DegenerateSample",
    "ExperimentPlan",
    "PerturbationTable",
    "SamplerSpec",
    "ScanReport",
    "SpectrumEntry",
    "SpectrumReport",
    "WitnessOutcome",
    "compute_spectrum",
    "distinct_count",
    "insert_bodies",
    "perturb_experiment",
    "scan_masses",
    "theorem_witness",
    "perturbation_csv",
    "scan_csv",
    "spectrum_csv",
    "to_json",
    "to_payload",
]
