"""Run configuration: validated model, range parsing and config files."""

import logging
from pathlib import Path
from typing import Literal

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

from delannoy_schroder.core.checks.models import OutputFormat, Suite
from delannoy_schroder.core.config.config import DEFAULT_JOBS, DEFAULT_REPORT_FORMAT

logger = logging.getLogger(__name__)

DEFAULT_SUITES = [Suite.IDENTITIES, Suite.CONGRUENCES, Suite.CONJECTURES]


def parse_range(text: str) -> tuple[int, int]:
    """'LO..HI' as an inclusive pair; a single integer N means N..N."""
    lo, sep, hi = str(text).partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError as e:
        raise ValueError(f"Expected LO..HI, got {text!r}") from e
    if bounds[0] > bounds[1]:
        raise ValueError(f"Empty range {text!r}")
    return bounds


def parse_grid_item(text: str) -> tuple[str, tuple[int, int]]:
    """'key=lo..hi' as (key, (lo, hi))."""
    key, sep, bounds = text.partition("=")
    if not sep or not key:
        raise ValueError(f"Expected key=lo..hi, got {text!r}")
    return key.strip(), parse_range(bounds)


class RunConfig(BaseModel):
    """Everything that determines a run; echoed into the report header."""

    command: Literal["verify", "bigprime", "list"] = "verify"
    suites: list[Suite] = Field(default_factory=lambda: list(DEFAULT_SUITES))
    ids: list[str] = Field(default_factory=list)
    n_max: int | None = None
    primes: tuple[int, int] | None = None
    grid: dict[str, tuple[int, int]] = Field(default_factory=dict)
    # Not echoed into the report
    jobs: int = Field(default=DEFAULT_JOBS, exclude=True)
    format: OutputFormat = OutputFormat(DEFAULT_REPORT_FORMAT)
    out: str | None = None
    timings: bool = False
    strict_conjectures: bool = False
    extended: bool = False
    p: int | None = None
    y: int | None = None
    debug: bool = Field(default=False, exclude=True)

    @field_validator("primes", mode="before")
    @classmethod
    def _parse_primes(cls, value):
        return parse_range(value) if isinstance(value, str) else value

    @field_validator("grid", mode="before")
    @classmethod
    def _parse_grid(cls, value):
        if isinstance(value, list):
            return dict(parse_grid_item(item) for item in value)
        if isinstance(value, dict):
            return {
                k: parse_range(v) if isinstance(v, str) else v for k, v in value.items()
            }
        return value

    @field_validator("suites", "ids", mode="before")
    @classmethod
    def _split_commas(cls, value):
        if isinstance(value, str):
            return [v.strip() for v in value.split(",") if v.strip()]
        return value

    @model_validator(mode="after")
    def _check_bounds(self) -> "RunConfig":
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")
        if self.n_max is not None and self.n_max < 1:
            raise ValueError(f"n_max must be at least 1, got {self.n_max}")
        for key, (lo, hi) in self.grid.items():
            if lo > hi:
                raise ValueError(f"Empty grid range for {key}: {lo}..{hi}")
        if not self.suites:
            raise ValueError("No suite selected")
        return self


def normalize_keys(data: dict) -> dict:
    """Config-file keys with dashes or underscores map to the same field."""
    return {str(k).replace("-", "_"): v for k, v in data.items()}


def load_config_file(path: str | Path) -> dict:
    """Parse a YAML or JSON config file into RunConfig field values."""
    path = Path(path)
    logger.debug("Loading run configuration from '%s'", path)
    with open(path, encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"Config file {path} must hold a mapping")
    return normalize_keys(data)
