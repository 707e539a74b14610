"""Run configuration: a flat ``key = value unit`` text format.

Example::

    # individual actuator
    L = 145 mm
    D = 17 mm
    N = 16
    t_k = 1 mm
    n = 1, 2, 4, 8

Every dimensional value carries its unit.  Unknown keys are an error.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .units import ANGLE, DIMENSIONLESS, LENGTH, PRESSURE, format_si, parse_quantity

INT = "int"
INT_LIST = "int_list"
CHOICE = "choice"

POLICIES = ("relative", "absolute")
FORMATS = ("pretty", "csv", "json")

_KINDS = {
    "L": LENGTH,
    "D": LENGTH,
    "N": DIMENSIONLESS,
    "theta": ANGLE,
    "t_k": LENGTH,
    "t_hat": DIMENSIONLESS,
    "n": INT_LIST,
    "policy": CHOICE,
    "theta1": ANGLE,
    "theta2": ANGLE,
    "pressure": PRESSURE,
    "tolerance": DIMENSIONLESS,
    "theta_min": ANGLE,
    "theta_max": ANGLE,
    "theta_count": INT,
    "theta_step": ANGLE,
    "t_hat_min": DIMENSIONLESS,
    "t_hat_max": DIMENSIONLESS,
    "t_hat_count": INT,
    "t_hat_step": DIMENSIONLESS,
    "format": CHOICE,
    "out": "path",
}

_CHOICES = {"policy": POLICIES, "format": FORMATS}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    """All inputs of a CLI run, in SI.  Defaults are the self-consistent
    individual actuator with a 1 mm wall."""

    L: float = 0.145
    D: float = 0.017
    N: float = 16.0
    theta: Optional[float] = None
    t_k: Optional[float] = 1e-3
    t_hat: Optional[float] = None
    n: tuple[int, ...] = (1, 2, 4, 8, 16, 32, 64)
    policy: str = "relative"
    theta1: Optional[float] = None
    theta2: float = math.radians(70.0)
    pressure: float = 1e3
    tolerance: float = 1e-3
    theta_min: float = math.radians(45.0)
    theta_max: float = math.radians(90.0)
    theta_count: Optional[int] = 46
    theta_step: Optional[float] = None
    t_hat_min: float = 0.0
    t_hat_max: float = 0.5
    t_hat_count: Optional[int] = 11
    t_hat_step: Optional[float] = None
    format: str = "pretty"
    out: Optional[str] = None

    def replace(self, **values) -> "RunConfig":
        """Override fields; ``t_k`` and ``t_hat`` displace each other."""
        values = {k: v for k, v in values.items() if v is not None}
        unknown = set(values) - set(_KINDS)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "t_k" in values and "t_hat" in values:
            raise ConfigError("give only one of t_k and t_hat")
        if "t_k" in values:
            values["t_hat"] = None
        elif "t_hat" in values:
            values["t_k"] = None
        if "theta_step" in values:
            values["theta_count"] = None
        if "t_hat_step" in values:
            values["t_hat_count"] = None
        for key, value in values.items():
            if key in _CHOICES and value not in _CHOICES[key]:
                raise ConfigError(f"{key}={value!r} not one of {_CHOICES[key]}")
        if "n" in values:
            values["n"] = tuple(values["n"])
        return dataclasses.replace(self, **values)

    @classmethod
    def from_text(cls, text: str) -> "RunConfig":
        return cls().replace(**parse_text(text))

    @classmethod
    def load(cls, path) -> "RunConfig":
        return cls.from_text(Path(path).read_text())

    def to_text(self) -> str:
        lines = []
        for key, kind in _KINDS.items():
            value = getattr(self, key)
            if value is None:
                continue
            if kind == INT_LIST:
                lines.append(f"{key} = {', '.join(str(i) for i in value)}")
            elif kind in (INT, CHOICE, "path"):
                lines.append(f"{key} = {value}")
            else:
                lines.append(f"{key} = {format_si(value, kind)}")
        return "\n".join(lines) + "\n"


def parse_value(key: str, text: str):
    if key not in _KINDS:
        raise ConfigError(f"unknown config key {key!r}")
    kind = _KINDS[key]
    text = text.strip()
    try:
        if kind == INT_LIST:
            return tuple(int(item) for item in text.split(","))
        if kind == INT:
            return int(text)
        if kind in (CHOICE, "path"):
            return text
        return parse_quantity(text, kind)
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from exc


def parse_text(text: str) -> dict:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        values[key] = parse_value(key, value)
    return values
