import json

from src.permutations import identity
from src.spectrum import (
    compute_spectrum,
    perturb_experiment,
    perturbation_csv,
    scan_csv,
    scan_masses,
    spectrum_csv,
    to_json,
    to_payload,
)


def test_spectrum_payload():
    report = compute_spectrum([1.0, 9.0, 1.0])
    payload = to_payload(report)
    assert payload["mass_vector"] == [1.0, 9.0, 1.0]
    assert payload["min_class"] == "1,2,3"
    assert [entry["ordering"] for entry in payload["entries"]] == ["1,2,3", "1,3,2", "2,1,3"]


def test_json_round_trips_floats():
    report = compute_spectrum([1.0, 2.0, 3.0])
    parsed = json.loads(to_json(to_payload(report)))
    assert [entry["critical_value"] for entry in parsed["entries"]] == report.values


def test_spectrum_csv():
    report = compute_spectrum([1.0, 9.0, 1.0])
    lines = spectrum_csv(report).splitlines()
    assert lines[0] == "ordering,critical_value,iterations,final_gradient_norm,is_min"
    assert len(lines) == 4
    assert lines[1].startswith('"1,2,3",')
    assert lines[1].endswith(",true")
    assert lines[2].endswith(",false")


def test_scan_csv():
    report = scan_masses(3, 2, seed=3)
    lines = scan_csv(report).splitlines()
    assert lines[0] == "sample,masses,distinct_count"
    assert len(lines) == 3
    assert lines[1].startswith("0,")
    assert lines[1].endswith(",3")


def test_perturbation_csv():
    table = perturb_experiment([1.0, 9.0, 1.0], identity(3), identity(4), [1.0], [0.1, 0.01])
    lines = perturbation_csv(table).splitlines()
    assert lines[0] == "epsilon,value,gap_to_limit,projected_value,trial_value"
    assert lines[1].startswith("0.1,")
    assert len(lines) == 3
