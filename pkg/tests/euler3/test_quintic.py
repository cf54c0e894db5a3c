import math
import numpy as np
import pytest

from pydantic import ValidationError

from src.core import InvalidInputError, InvalidMass, inertia
from src.euler3 import (
    EXACT_ROOT_MU,
    SYMMETRIC_MU,
    TRIAL_UPPER_BOUND,
    EulerQuintic,
    euler_configuration,
    euler_quintic,
    euler_root,
    euler_unit_configuration,
    euler_value,
    l3bp_gap,
    mass_for_root,
    middle_end_gap,
    symmetric_value,
)
from src.permutations import Ordering, identity
from src.solver import critical_value, moulton_configuration


class TestEulerQuintic:

    def test_coefficients(self):
        quintic = euler_quintic([1.0, 1.0, 9.0])
        assert quintic.coefficients == (-2.0, -5.0, -4.0, 28.0, 29.0, 10.0)
        assert quintic.sign_changes == 1

    def test_evaluation(self):
        quintic = euler_quintic([1.0, 1.0, 9.0])
        assert quintic(0.0) == 10.0
        assert quintic(2.0) == pytest.approx(4.0)

    def test_rejects_wrong_sign_pattern(self):
        with pytest.raises(ValidationError):
            EulerQuintic(coefficients=(1.0, -5.0, -4.0, 28.0, 29.0, 10.0))

    def test_rejects_wrong_degree(self):
        with pytest.raises(ValidationError):
            EulerQuintic(coefficients=(-1.0, 1.0))

    def test_needs_three_masses(self):
        with pytest.raises(InvalidMass):
            euler_quintic([1.0, 2.0])

    def test_rejects_non_positive_mass(self):
        with pytest.raises(InvalidMass):
            euler_quintic([1.0, 0.0, 2.0])


class TestEulerRoot:

    def test_heavy_end(self):
        root = euler_root([1.0, 1.0, 9.0])
        assert 2.0 < root < 2.02
        quintic = euler_quintic([1.0, 1.0, 9.0])
        assert abs(quintic(root)) <= 1e-12 * quintic.scale(root)

    def test_symmetric_masses_give_unit_ratio(self):
        assert euler_root([1.0, 9.0, 1.0]) == pytest.approx(1.0, abs=1e-12)

    def test_exact_root(self):
        assert euler_root([1.0, 1.0, EXACT_ROOT_MU]) == pytest.approx(2.0, abs=1e-10)

    def test_mass_for_root(self):
        assert mass_for_root(2.0) == pytest.approx(167.0 / 19.0, rel=1e-14)
        for mu in (0.5, 3.0, 20.0):
            assert mass_for_root(euler_root([1.0, 1.0, mu])) == pytest.approx(mu, rel=1e-8)

    @pytest.mark.parametrize("s", [-1.0, 0.0, 0.1])
    def test_mass_for_root_without_positive_mass(self, s):
        with pytest.raises(InvalidInputError):
            mass_for_root(s)

    def test_configuration(self):
        x = euler_configuration([1.0, 2.0, 3.0])
        assert x[0] == 0.0 and x[1] == 1.0
        assert x[2] == pytest.approx(1.0 + euler_root([1.0, 2.0, 3.0]))


class TestEulerValues:

    def test_unit_configuration(self):
        masses = np.array([0.3, 2.0, 5.0])
        x = euler_unit_configuration(masses)
        assert inertia(x, masses) == pytest.approx(1.0, abs=1e-14)
        assert abs(np.dot(masses, x)) < 1e-13

    def test_matches_solver(self):
        rng = np.random.default_rng(99)
        for _ in range(10):
            masses = np.exp(rng.uniform(math.log(0.1), math.log(10.0), size=3))
            solved = moulton_configuration(masses, identity(3))
            np.testing.assert_allclose(euler_unit_configuration(masses), solved.positions, atol=1e-8)
            assert euler_value(masses) == pytest.approx(solved.critical_value, rel=1e-10)

    def test_heavy_end_value(self):
        value = euler_value([1.0, 1.0, 9.0])
        assert value == pytest.approx(critical_value([1.0, 1.0, 9.0], identity(3)), rel=1e-10)
        assert value <= TRIAL_UPPER_BOUND
        assert value == pytest.approx(TRIAL_UPPER_BOUND, rel=1e-3)

    def test_exact_root_closed_form(self):
        mu = EXACT_ROOT_MU
        expected = (1.0 + 5.0 * mu / 6.0) * math.sqrt((1.0 + 13.0 * mu) / (2.0 + mu))
        assert euler_value([1.0, 1.0, mu]) == pytest.approx(expected, rel=1e-10)

    def test_symmetric_value(self):
        assert symmetric_value(SYMMETRIC_MU) == pytest.approx(37.0 / math.sqrt(2.0), rel=1e-15)
        assert symmetric_value(1.0) == pytest.approx(euler_value([1.0, 1.0, 1.0]), rel=1e-12)

    def test_symmetric_value_invalid(self):
        with pytest.raises(InvalidMass):
            symmetric_value(0.0)

    def test_middle_end_gap(self):
        middle, end = middle_end_gap()
        assert middle == pytest.approx(26.162950903902254, rel=1e-14)
        assert end - middle > 1.6
        assert end == pytest.approx(critical_value([1.0, 9.0, 1.0], Ordering(places=(1, 3, 2))), rel=1e-10)

    def test_l3bp_gap_is_middle_end_gap(self):
        assert l3bp_gap is middle_end_gap
        assert l3bp_gap(3.0) == middle_end_gap(3.0)

    def test_heavy_body_swapped_to_the_end(self):
        rng = np.random.default_rng(41)
        swapped = Ordering(places=(1, 3, 2))
        for mu in np.exp(rng.uniform(math.log(0.1), math.log(20.0), size=6)):
            end_value = critical_value([1.0, 1.0, mu], identity(3))
            assert critical_value([1.0, mu, 1.0], swapped) == pytest.approx(end_value, rel=1e-10)
            assert euler_value([1.0, 1.0, mu]) == pytest.approx(end_value, rel=1e-10)
