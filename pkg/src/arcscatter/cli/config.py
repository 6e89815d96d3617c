"""Run configuration: key=value files, command-line overrides and validation."""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, ValidationInfo, field_validator

from arcscatter.models.core import ArcFamily, BoundaryCondition, Formulation


class Command(str, Enum):
    """Experiments the CLI can run."""

    SOLVE = "solve"
    SPECTRUM = "spectrum"
    SWEEP = "sweep"
    VERIFY = "verify"


class SpectrumTarget(str, Enum):
    """Operators the spectrum command can analyse."""

    NS = "NS"
    S = "S"
    N = "N"
    J0 = "J0"
    J0_TAU = "J0tau"
    K = "K"


class ConfigError(ValueError):
    """A configuration key is missing, unknown or invalid.

    Attributes:
        key: The offending key, or None for file-level problems.
    """

    def __init__(self, message: str, key: str | None = None) -> None:
        super().__init__(message)
        self.key = key


class RunConfig(BaseModel):
    """Validated configuration of one CLI run.

    Dotted keys from config files map onto the underscored field names
    through aliases; both spellings are accepted.
    """

    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    command: Command = Command.SOLVE
    arc_family: ArcFamily = Field(ArcFamily.PERTURBED, alias="arc.family")
    arc_param1: float | None = Field(None, alias="arc.param1")
    arc_param2: float | None = Field(None, alias="arc.param2")
    k: float = Field(5.0, ge=0)
    k_values: list[float] = Field(default_factory=list)
    bc: BoundaryCondition = BoundaryCondition.DIRICHLET
    formulation: Formulation = Formulation.SECOND_KIND_NS
    size: int = Field(64, alias="N", ge=8, le=4096)
    tol: float = Field(1e-10, gt=1e-14, lt=1e-2)
    max_iter: int | None = Field(None, ge=1)
    solver: Literal["gmres", "direct"] = "gmres"
    operator: SpectrumTarget = SpectrumTarget.NS
    sobolev_s: float = Field(1.0, gt=0)
    field_radius: float = Field(3.0, gt=0)
    field_points: int = Field(64, ge=0)
    far_field_points: int = Field(360, ge=0)
    workers: int = Field(1, ge=1)
    adaptive_size: bool = False
    out_dir: Path = Path("arcscatter-out")
    incident_angle: float = Field(0.0, alias="incident.angle")
    incident_amplitude: float = Field(1.0, alias="incident.amplitude")

    @field_validator("k_values", mode="before")
    @classmethod
    def _split_list(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        return value

    @field_validator("k_values")
    @classmethod
    def _non_negative(cls, value: list[float]) -> list[float]:
        if any(k < 0 for k in value):
            raise ValueError("wavenumbers must be non-negative")
        return value

    @field_validator("formulation")
    @classmethod
    def _matches_bc(cls, value: Formulation, info: ValidationInfo) -> Formulation:
        bc = info.data.get("bc")
        if value == Formulation.FIRST_KIND_S and bc not in (None, BoundaryCondition.DIRICHLET):
            raise ValueError("formulation s requires bc=dirichlet")
        if value == Formulation.FIRST_KIND_N and bc not in (None, BoundaryCondition.NEUMANN):
            raise ValueError("formulation n requires bc=neumann")
        return value

    @field_validator("max_iter", "arc_param1", "arc_param2", mode="before")
    @classmethod
    def _none_string(cls, value: Any) -> Any:
        if isinstance(value, str) and value.strip().lower() in ("", "none"):
            return None
        return value

    @property
    def wavenumbers(self) -> list[float]:
        """Sweep wavenumbers, falling back to the single ``k``."""
        return list(self.k_values) or [self.k]


def parse_line(line: str) -> tuple[str, str] | None:
    """Split ``key = value``; blank lines and ``#`` comments give None."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    if "=" not in stripped:
        raise ConfigError(f"Expected KEY=VALUE, got {stripped!r}")
    key, value = stripped.split("=", 1)
    key = key.strip()
    if not key:
        raise ConfigError(f"Missing key in {stripped!r}")
    return key, value.strip()


def load_config_file(path: Path | str) -> dict[str, str]:
    """Read a flat key=value configuration file.

    Raises:
        ConfigError: If the file cannot be read or a line is malformed.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"Cannot read config file {path}: {e}") from e

    values: dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        try:
            parsed = parse_line(line)
        except ConfigError as e:
            raise ConfigError(f"{path}:{number}: {e}") from e
        if parsed is not None:
            values[parsed[0]] = parsed[1]
    return values


def parse_overrides(items: tuple[str, ...] | list[str]) -> dict[str, str]:
    """Parse repeated ``KEY=VALUE`` overrides."""
    values: dict[str, str] = {}
    for item in items:
        parsed = parse_line(item)
        if parsed is None:
            raise ConfigError(f"Empty override {item!r}")
        values[parsed[0]] = parsed[1]
    return values


def build_config(
    command: Command | str,
    file_values: dict[str, str] | None = None,
    overrides: dict[str, str] | None = None,
) -> RunConfig:
    """Merge file values and overrides into a validated RunConfig.

    Raises:
        ConfigError: Naming the first offending key.
    """
    merged: dict[str, Any] = dict(file_values or {})
    merged.update(overrides or {})
    merged["command"] = Command(command).value
    try:
        return RunConfig.model_validate(merged)
    except ValidationError as e:
        error = e.errors()[0]
        key = ".".join(str(part) for part in error["loc"]) or None
        raise ConfigError(f"Invalid configuration key {key!r}: {error['msg']}", key=key) from e
