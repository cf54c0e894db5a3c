import itertools
import math
import numpy as np
import pytest

from pydantic import ValidationError

from src.core import InvalidOrdering, SizeLimit, SizeMismatch, in_cone
from src.permutations import (
    Ordering,
    betweenness_witness,
    canonical_class,
    canonical_classes,
    complement,
    enumerate_orderings,
    identity,
    inverse,
    is_between,
    is_compatible,
    parse_ordering,
    restrict,
    reverse,
)


class TestOrdering:

    def test_parse(self):
        sigma = parse_ordering("2,1,3")
        assert sigma.places == (2, 1, 3)
        assert sigma.size == 3
        assert str(sigma) == "2,1,3"

    def test_coerces_string_and_sequence(self):
        assert Ordering.model_validate("3,1,2") == Ordering(places=(3, 1, 2))
        assert Ordering.model_validate([3, 1, 2]) == Ordering(places=(3, 1, 2))

    def test_serializes_as_string(self):
        assert Ordering(places=(2, 1, 3)).model_dump() == "2,1,3"

    @pytest.mark.parametrize("text", ["1,1,2", "0,1,2", "1,2,4", "a,b", "", "1,,2,3", "1,2,", ",1,2"])
    def test_parse_rejects_non_permutations(self, text):
        with pytest.raises(InvalidOrdering):
            parse_ordering(text)

    def test_model_rejects_non_permutation(self):
        with pytest.raises(ValidationError) as exc_info:
            Ordering(places=(1, 3))
        assert "permutation" in str(exc_info.value)

    def test_place_of(self):
        sigma = Ordering(places=(3, 1, 2))
        assert [sigma.place_of(body) for body in (1, 2, 3)] == [2, 3, 1]

    def test_hashable_and_ordered(self):
        a, b = Ordering(places=(1, 2, 3)), Ordering(places=(1, 3, 2))
        assert len({a, b, Ordering(places=(1, 2, 3))}) == 2
        assert a < b
        assert min(b, a) == a


class TestEnumeration:

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_counts(self, n):
        assert len(enumerate_orderings(n)) == math.factorial(n)
        assert len(canonical_classes(n)) == math.factorial(n) // 2

    def test_lexicographic(self):
        orderings = enumerate_orderings(3)
        assert orderings[0] == identity(3)
        assert orderings == sorted(orderings)

    def test_six_bodies_have_360_classes(self):
        assert len(canonical_classes(6)) == 360

    @pytest.mark.parametrize("n", [1, 10])
    def test_size_limit(self, n):
        with pytest.raises(SizeLimit):
            enumerate_orderings(n)

    def test_classes_are_canonical(self):
        for sigma in canonical_classes(4):
            assert canonical_class(sigma) == sigma
            assert not reverse(sigma) < sigma

    def test_every_ordering_has_one_class(self):
        classes = set(canonical_classes(4))
        for sigma in enumerate_orderings(4):
            assert canonical_class(sigma) in classes
            assert canonical_class(reverse(sigma)) == canonical_class(sigma)


class TestTransforms:

    def test_reverse(self):
        assert reverse(Ordering(places=(2, 1, 3))) == Ordering(places=(3, 1, 2))

    def test_inverse(self):
        sigma = Ordering(places=(3, 1, 2))
        assert inverse(sigma) == Ordering(places=(2, 3, 1))
        assert inverse(inverse(sigma)) == sigma

    def test_complement(self):
        assert complement(Ordering(places=(1, 3, 2))) == Ordering(places=(3, 1, 2))

    def test_complement_is_reverse_of_inverse_under_inversion(self):
        for sigma in enumerate_orderings(4):
            assert inverse(reverse(sigma)) == complement(inverse(sigma))

    def test_restrict(self):
        assert restrict(Ordering(places=(4, 2, 1, 3)), 3) == Ordering(places=(2, 1, 3))

    def test_restrict_too_large(self):
        with pytest.raises(SizeMismatch):
            restrict(identity(3), 4)

    def test_compatible(self):
        assert is_compatible(Ordering(places=(1, 4, 2, 3)), identity(3))
        assert is_compatible(Ordering(places=(4, 1, 3, 2)), Ordering(places=(1, 3, 2)))
        assert not is_compatible(Ordering(places=(2, 4, 1, 3)), identity(3))

    def test_compatible_matches_restriction(self):
        for tau in enumerate_orderings(4):
            for sigma0 in enumerate_orderings(3):
                assert is_compatible(tau, sigma0) == (restrict(tau, 3) == sigma0)

    def test_compatible_matches_sampled_configurations(self):
        rng = np.random.default_rng(7)
        for tau in enumerate_orderings(5):
            samples = []
            for _ in range(10):
                x = np.empty(5)
                x[np.asarray(tau.places) - 1] = np.cumsum(rng.uniform(0.1, 1.0, size=5))
                samples.append(x)
            for sigma0 in enumerate_orderings(3):
                projected = all(in_cone(x[:3], sigma0.places) for x in samples)
                assert is_compatible(tau, sigma0) == projected

    def test_compatible_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            is_compatible(identity(2), identity(3))


class TestBetweenness:

    def test_is_between(self):
        assert is_between((1, 2, 3), 2, 1, 3)
        assert is_between((1, 2, 3), 2, 3, 1)
        assert not is_between((1, 2, 3), 1, 2, 3)

    def test_equal(self):
        result = betweenness_witness(identity(4), identity(4))
        assert result.kind == "equal"
        assert result.triple is None

    def test_reversed(self):
        sigma = Ordering(places=(2, 4, 1, 3))
        result = betweenness_witness(sigma, complement(sigma))
        assert result.kind == "reversed"
        assert result.triple is None

    def test_witness_is_first_triple(self):
        result = betweenness_witness(identity(4), Ordering(places=(1, 3, 2, 4)))
        assert result.kind == "witness"
        assert result.triple == (2, 1, 3)

    def test_trichotomy_on_four_bodies(self):
        orderings = enumerate_orderings(4)
        for sigma, tau in itertools.product(orderings, orderings):
            result = betweenness_witness(sigma, tau)
            if sigma == tau:
                assert result.kind == "equal"
            elif sigma == complement(tau):
                assert result.kind == "reversed"
            else:
                assert result.kind == "witness"
                i, j, k = result.triple
                assert is_between(sigma.places, i, j, k)
                assert not is_between(tau.places, i, j, k)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            betweenness_witness(identity(3), identity(4))
