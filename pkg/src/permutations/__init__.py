"""Orderings of bodies on the line, reversal classes and the betweenness trichotomy."""

from src.permutations.orderings import (
    MAX_ORDERING_SIZE,
    Ordering,
    TrichotomyResult,
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

__all__ = [
    "MAX_ORDERING_SIZE",
    "Ordering",
    "TrichotomyResult",
    "betweenness_witness",
    "canonical_class",
    "canonical_classes",
    "complement",
    "enumerate_orderings",
    "identity",
    "inverse",
    "is_between",
    "is_compatible",
    "parse_ordering",
    "restrict",
    "reverse",
]
