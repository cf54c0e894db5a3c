"""JSON payloads and flat CSV tables for reports."""

import csv
import io
import json

from typing import Any, Dict, List, Sequence

from pydantic import BaseModel

from src.spectrum.experiments import PerturbationTable, ScanReport, SpectrumReport


def to_payload(model: BaseModel) -> Dict[str, Any]:
    """JSON-ready dict with the documented field names; orderings as "2,1,3" strings."""
    return model.model_dump(mode="json", by_alias=True)


def to_json(payload: Any) -> str:
    """Serialize a payload; floats use the shortest repr that round-trips exactly."""
    return json.dumps(payload, indent=2)


def _csv(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def spectrum_csv(report: SpectrumReport) -> str:
    """One row per reversal class."""
    rows = [
        [
            str(entry.ordering),
            repr(entry.critical_value),
            entry.iterations,
            repr(entry.final_gradient_norm),
            str(entry.ordering == report.min_class).lower(),
        ]
        for entry in report.entries
    ]
    return _csv(["ordering", "critical_value", "iterations", "final_gradient_norm", "is_min"], rows)


def scan_csv(report: ScanReport) -> str:
    """One row per sample; distinct_count is empty when the spectrum was incomplete."""
    rows = [
        [index, str(masses), "" if count is None else count]
        for index, (masses, count) in enumerate(zip(report.sample_masses, report.distinct_counts))
    ]
    return _csv(["sample", "masses", "distinct_count"], rows)


def perturbation_csv(table: PerturbationTable) -> str:
    """One row per epsilon."""
    rows = [
        [repr(eps), repr(value), repr(value - table.limit_value), repr(projected), repr(trial)]
        for eps, value, projected, trial in zip(
            table.epsilons, table.values, table.projected_values, table.trial_values
        )
    ]
    return _csv(["epsilon", "value", "gap_to_limit", "projected_value", "trial_value"], rows)
