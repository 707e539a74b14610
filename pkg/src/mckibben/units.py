"""Unit-suffixed quantity parsing.  Everything is converted to SI on entry."""

from __future__ import annotations

import math
import re

LENGTH = "length"
ANGLE = "angle"
PRESSURE = "pressure"
DIMENSIONLESS = "dimensionless"

_FACTORS = {
    LENGTH: {"m": 1.0, "cm": 1e-2, "mm": 1e-3},
    PRESSURE: {"Pa": 1.0, "kPa": 1e3, "MPa": 1e6},
    ANGLE: {"rad": 1.0, "deg": None},  # degrees go through math.radians
    DIMENSIONLESS: {"": 1.0},
}

SI_UNIT = {LENGTH: "m", ANGLE: "rad", PRESSURE: "Pa", DIMENSIONLESS: ""}

_QUANTITY = re.compile(
    r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*([A-Za-z]*)\s*$"
)


class UnitError(ValueError):
    pass


def parse_quantity(text: str, kind: str) -> float:
    """Parse ``"145mm"``, ``"75.2 deg"``, ``"1kPa"`` ... into SI.

    Dimensional kinds require an explicit unit.
    """
    match = _QUANTITY.match(str(text))
    if not match:
        raise UnitError(f"cannot parse {text!r} as a {kind}")
    number, unit = match.groups()
    table = _FACTORS[kind]
    if unit not in table:
        allowed = ", ".join(u for u in table if u) or "no unit"
        raise UnitError(f"{text!r}: {kind} needs a unit from ({allowed})")
    value = float(number)
    if kind == ANGLE and unit == "deg":
        return math.radians(value)
    return value * table[unit]


def format_si(value: float, kind: str) -> str:
    """Exact textual form that :func:`parse_quantity` reads back unchanged."""
    unit = SI_UNIT[kind]
    return f"{value!r} {unit}".rstrip()
