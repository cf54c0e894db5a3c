import pytest

from unittest.mock import patch

from src.cli import checks
from src.core import CheckFailure, NumericalError
from src.core.formulas import hessian_w


class TestIndividualChecks:

    def test_gradient(self):
        assert checks.check_gradient(5) == 5

    def test_hessian(self):
        assert checks.check_hessian(5) == 10

    def test_trichotomy(self):
        assert checks.check_trichotomy() == 24 * 24

    def test_classes(self):
        assert checks.check_classes() == 1

    def test_three_body(self):
        assert checks.check_three_body() == 5

    def test_euler_oracle(self):
        assert checks.check_euler_oracle(3) == 3

    def test_equal_masses(self):
        assert checks.check_equal_masses() == 1

    def test_perturbation(self):
        assert checks.check_perturbation() == 2


class TestRegistry:

    def test_quick_subset(self):
        names = [name for name, _ in checks.registry(quick=True)]
        assert names == ["gradient", "hessian", "trichotomy", "classes", "three-body", "euler-oracle"]

    def test_full_suite(self):
        names = [name for name, _ in checks.registry(quick=False)]
        assert names[-2:] == ["equal-masses", "perturbation"]


class TestRunChecks:

    def test_quick_run(self):
        report = checks.run_checks(quick=True)
        assert report.quick
        assert len(report.checks) == 6
        assert report.total_assertions == 10 + 20 + 576 + 1 + 5 + 10

    def test_negated_hessian_is_caught(self):
        with patch("src.cli.checks.hessian_w", side_effect=lambda x, m: -hessian_w(x, m)):
            with pytest.raises(CheckFailure) as exc_info:
                checks.run_checks(quick=True)
        assert exc_info.value.check == "hessian"
        assert isinstance(exc_info.value, NumericalError)
        assert str(exc_info.value).startswith("check 'hessian' failed")
