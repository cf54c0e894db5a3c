"""Domain records for masses and normalizations."""

import math

from enum import Enum
from typing import Any, List, Tuple

import numpy as np

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_serializer, model_validator

from src.core.errors import InvalidMass


def split_items(text: str) -> List[str]:
    """Split a comma-separated list, refusing empty items such as the middle of "1,,2"."""
    items = [item.strip() for item in text.split(",")]
    if not all(items):
        raise ValueError(f"empty item in list {text!r}")
    return items


class NormalizationKind(str, Enum):
    """The two ways of fixing the size of a central configuration."""

    UNIT_INERTIA = "unit-inertia"
    UNIT_LAMBDA = "unit-lambda"


class MassVector(BaseModel):
    """Positive masses m_1..m_N of the bodies, N >= 2."""

    model_config = ConfigDict(frozen=True)

    masses: Tuple[float, ...] = Field(..., description="Mass of each body, in body-label order")

    @model_validator(mode="before")
    @classmethod
    def coerce_masses(cls, data: Any) -> Any:
        """Accept a plain sequence of masses in place of a mapping."""
        if isinstance(data, (list, tuple)):
            return {"masses": tuple(data)}
        return data

    @model_serializer
    def serialize(self) -> List[float]:
        return list(self.masses)

    @field_validator("masses")
    @classmethod
    def validate_masses(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        """Validate that there are at least two finite, strictly positive masses."""
        if len(v) < 2:
            raise ValueError("at least two masses are required")
        for value in v:
            if not math.isfinite(value) or value <= 0:
                raise ValueError(f"masses must be finite and strictly positive, got {value}")
        return v

    @classmethod
    def parse(cls, text: str) -> "MassVector":
        """Build a mass vector from a comma-separated list such as "1,9,1".

        Raises:
            InvalidMass: If an item is empty, not a number, or not strictly positive.
        """
        try:
            return cls(masses=tuple(float(item) for item in split_items(text)))
        except (ValueError, ValidationError) as e:
            raise InvalidMass(f"invalid masses {text!r}: {e}") from e

    @property
    def size(self) -> int:
        return len(self.masses)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.masses, dtype=np.float64)

    def __str__(self) -> str:
        return ",".join(repr(value) for value in self.masses)
