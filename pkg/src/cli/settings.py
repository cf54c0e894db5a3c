"""Defaults for command-line runs, overridable through the environment."""

import os

from typing import Mapping, Optional

from pydantic import BaseModel, Field, field_validator

from src.spectrum import DEFAULT_DISTINCT_TOL


TOL_ENV = "MOULTON_DEFAULT_TOL"
LOG_LEVEL_ENV = "MOULTON_LOG_LEVEL"


class RunSettings(BaseModel):
    """Configuration shared by every command."""

    distinct_tolerance: float = Field(
        default=DEFAULT_DISTINCT_TOL,
        description="Relative tolerance under which critical values count as equal",
        gt=0,
        lt=1,
    )
    log_level: str = Field(
        default="WARNING",
        description="Logging level for diagnostics on standard error"
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate that log_level is a valid logging level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v_upper = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(f"log_level must be one of {valid_levels}")
        return v_upper

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "RunSettings":
        """Read MOULTON_DEFAULT_TOL and MOULTON_LOG_LEVEL, keeping defaults for unset variables."""
        environ = os.environ if environ is None else environ
        values = {}
        if environ.get(TOL_ENV):
            values["distinct_tolerance"] = environ[TOL_ENV]
        if environ.get(LOG_LEVEL_ENV):
            values["log_level"] = environ[LOG_LEVEL_ENV]
        return cls(**values)
