"""Orderings of bodies on the oriented line.

An ordering is stored as a place -> body map: ``places[p - 1]`` is the body
occupying place p from left to right, so the cone of an ordering is
``{x | x[places[0]] < x[places[1]] < ...}`` (1-based bodies).
"""

import itertools

from typing import Any, List, Literal, Optional, Sequence, Tuple

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_serializer,
    model_validator,
)

from src.core.errors import InvalidOrdering, SizeLimit, SizeMismatch
from src.core.models import split_items

MIN_ORDERING_SIZE = 2
MAX_ORDERING_SIZE = 9


class Ordering(BaseModel):
    """A permutation of bodies 1..N assigning a body to each place on the line."""

    model_config = ConfigDict(frozen=True)

    places: Tuple[int, ...] = Field(..., description="Body at each place, left to right (1-based)")

    @model_validator(mode="before")
    @classmethod
    def coerce_places(cls, data: Any) -> Any:
        """Accept "2,1,3" or a plain sequence of bodies in place of a mapping."""
        if isinstance(data, str):
            return {"places": tuple(int(item) for item in split_items(data))}
        if isinstance(data, (list, tuple)):
            return {"places": tuple(data)}
        return data

    @model_serializer
    def serialize(self) -> str:
        return str(self)

    @field_validator("places")
    @classmethod
    def validate_places(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        """Validate that places is a bijection of {1..N}, N >= 1."""
        if not v:
            raise ValueError("an ordering needs at least one body")
        if sorted(v) != list(range(1, len(v) + 1)):
            raise ValueError(f"places must be a permutation of 1..{len(v)}, got {list(v)}")
        return v

    @property
    def size(self) -> int:
        return len(self.places)

    def place_of(self, body: int) -> int:
        """Place (1-based) occupied by a body."""
        return self.places.index(body) + 1

    def __lt__(self, other: "Ordering") -> bool:
        return self.places < other.places

    def __str__(self) -> str:
        return ",".join(str(body) for body in self.places)


class TrichotomyResult(BaseModel):
    """Outcome of comparing two orderings: equal, mirror images, or separated by a triple."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["equal", "reversed", "witness"] = Field(..., description="Which alternative holds")
    triple: Optional[Tuple[int, int, int]] = Field(
        None, description="Indices (i, j, k) with sigma(i) between sigma(j), sigma(k) but tau(i) not"
    )


def parse_ordering(text: str) -> Ordering:
    """Parse a comma-separated 1-based body list such as "2,1,3".

    Raises:
        InvalidOrdering: If the text is not a permutation of 1..N.
    """
    try:
        return Ordering(places=tuple(int(item) for item in split_items(text)))
    except (ValueError, ValidationError) as e:
        raise InvalidOrdering(f"invalid ordering {text!r}: {e}") from e


def identity(n: int) -> Ordering:
    return Ordering(places=tuple(range(1, n + 1)))


def enumerate_orderings(n: int) -> List[Ordering]:
    """All n! orderings in lexicographic order.

    Raises:
        SizeLimit: If n is outside [MIN_ORDERING_SIZE, MAX_ORDERING_SIZE].
    """
    if not MIN_ORDERING_SIZE <= n <= MAX_ORDERING_SIZE:
        raise SizeLimit(f"can enumerate orderings for {MIN_ORDERING_SIZE} <= N <= {MAX_ORDERING_SIZE}, got {n}")
    return [Ordering(places=p) for p in itertools.permutations(range(1, n + 1))]


def reverse(sigma: Ordering) -> Ordering:
    """Mirror image on the line: reverse(sigma)(k) = sigma(N + 1 - k)."""
    return Ordering(places=sigma.places[::-1])


def inverse(sigma: Ordering) -> Ordering:
    """The body -> place map, viewed as an ordering."""
    places = [0] * sigma.size
    for place, body in enumerate(sigma.places, start=1):
        places[body - 1] = place
    return Ordering(places=tuple(places))


def complement(sigma: Ordering) -> Ordering:
    """Value reversal: complement(sigma)(k) = N + 1 - sigma(k)."""
    return Ordering(places=tuple(sigma.size + 1 - body for body in sigma.places))


def canonical_class(sigma: Ordering) -> Ordering:
    """Lexicographically smaller of sigma and its mirror image; labels the reversal class."""
    return min(sigma, reverse(sigma))


def canonical_classes(n: int) -> List[Ordering]:
    """One representative per reversal class, n!/2 of them, in lexicographic order."""
    return [sigma for sigma in enumerate_orderings(n) if canonical_class(sigma) == sigma]


def restrict(tau: Ordering, n: int) -> Ordering:
    """Left-to-right order of bodies 1..n inside tau."""
    if n > tau.size:
        raise SizeMismatch(f"cannot restrict an ordering of size {tau.size} to {n} bodies")
    return Ordering(places=tuple(body for body in tau.places if body <= n))


def is_compatible(tau: Ordering, sigma0: Ordering) -> bool:
    """Whether every configuration ordered by tau projects, on its first N bodies, to the cone of sigma0.

    Equivalently, body -> place in tau composed with sigma0 is increasing.

    Raises:
        SizeMismatch: If tau has fewer bodies than sigma0.
    """
    if tau.size < sigma0.size:
        raise SizeMismatch(f"extended ordering has {tau.size} bodies, base ordering has {sigma0.size}")
    positions = [tau.place_of(body) for body in sigma0.places]
    return all(a < b for a, b in zip(positions, positions[1:]))


def is_between(values: Sequence[int], i: int, j: int, k: int) -> bool:
    """Whether values(i) lies strictly between values(j) and values(k) (1-based indices)."""
    a, b, c = values[i - 1], values[j - 1], values[k - 1]
    return b < a < c or c < a < b


def betweenness_witness(sigma: Ordering, tau: Ordering) -> TrichotomyResult:
    """Decide which alternative of the betweenness trichotomy holds for sigma and tau.

    Betweenness is taken on the values sigma(i); it is preserved exactly when tau
    equals sigma or its value complement, so those are the two non-witness cases.
    The witness is the lexicographically first ordered triple.

    Raises:
        SizeMismatch: If the orderings have different sizes.
    """
    if sigma.size != tau.size:
        raise SizeMismatch(f"orderings of sizes {sigma.size} and {tau.size} cannot be compared")
    if sigma == tau:
        return TrichotomyResult(kind="equal")
    if sigma == complement(tau):
        return TrichotomyResult(kind="reversed")

    for i, j, k in itertools.permutations(range(1, sigma.size + 1), 3):
        if is_between(sigma.places, i, j, k) and not is_between(tau.places, i, j, k):
            return TrichotomyResult(kind="witness", triple=(i, j, k))

    raise RuntimeError(f"no betweenness witness for {sigma} and {tau}")
