"""Braid kinematics for a cylindrical McKibben muscle.

The braid is described by its unwound fiber length ``b`` and the number of
turns ``N`` the fibers make around the axis.  Both are fixed at fabrication;
the braid angle ``theta`` (measured from the long axis) is the only
configuration variable.  All quantities are SI: metres and radians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional


HALF_PI = 0.5 * math.pi

#: default tolerance for measured (user supplied) parameter sets
MEASURED_TOLERANCE = 1e-3
#: default tolerance for parameter sets generated by this package
GENERATED_TOLERANCE = 1e-9


class DomainError(ValueError):
    """An input lies outside the domain of the model."""


def check_angle(theta: float, name: str = "theta") -> float:
    if not (0.0 < theta < HALF_PI):
        raise DomainError(
            f"{name}={theta!r} rad is outside the open interval (0, pi/2)"
        )
    return theta


def _check_positive(value: float, name: str) -> float:
    if not value > 0.0:
        raise DomainError(f"{name}={value!r} must be positive")
    return value


@dataclass(frozen=True)
class BraidSpec:
    """Actuation-invariant braid: fiber length ``b`` [m] and turn count ``N``.

    ``N`` is a real number; fractional turns are allowed.
    """

    b: float
    N: float

    def __post_init__(self):
        _check_positive(self.b, "b")
        _check_positive(self.N, "N")

    @property
    def d0(self) -> float:
        """Diameter the braid would reach at theta = 90 degrees."""
        return self.b / (self.N * math.pi)


@dataclass(frozen=True)
class GeometryState:
    braid: BraidSpec
    theta: float

    def __post_init__(self):
        check_angle(self.theta)

    @property
    def length(self) -> float:
        return length_of(self.braid, self.theta)

    @property
    def diameter(self) -> float:
        return diameter_of(self.braid, self.theta)

    @property
    def area(self) -> float:
        """External cross-sectional area."""
        return 0.25 * math.pi * self.diameter**2


@dataclass(frozen=True)
class RawParameterSet:
    """Parameters as quoted on a datasheet, possibly inconsistent."""

    L: float
    D: float
    N: float
    theta: Optional[float] = None

    def __post_init__(self):
        _check_positive(self.L, "L")
        _check_positive(self.D, "D")
        _check_positive(self.N, "N")
        if self.theta is not None:
            check_angle(self.theta)


@dataclass(frozen=True)
class ConsistencyReport:
    """Fiber length computed three independent ways from a parameter set.

    ``b_from_length`` and ``b_from_diameter`` are ``None`` when no angle was
    supplied; the verdict then rests on the Pythagorean estimate alone.
    """

    b_from_length: Optional[float]
    b_from_diameter: Optional[float]
    b_from_pythagoras: float
    max_relative_spread: float
    tolerance: float
    consistent: bool
    theta: Optional[float] = None

    @property
    def theta_absent(self) -> bool:
        return self.theta is None


@dataclass(frozen=True)
class StrokeSpec:
    """A stroke from ``theta_1`` to ``theta_2``.

    Extension of an extending muscle means ``theta_2 < theta_1``.
    """

    theta_1: float
    theta_2: float

    def __post_init__(self):
        check_angle(self.theta_1, "theta_1")
        check_angle(self.theta_2, "theta_2")

    @property
    def gamma(self) -> float:
        return gamma_of(self)

    @property
    def is_extension(self) -> bool:
        return self.theta_2 < self.theta_1


def length_of(braid: BraidSpec, theta: float) -> float:
    check_angle(theta)
    return braid.b * math.cos(theta)


def diameter_of(braid: BraidSpec, theta: float) -> float:
    check_angle(theta)
    return braid.d0 * math.sin(theta)


def fiber_length_from(L: float, D: float, N: float) -> float:
    """Unwound fiber length from the outer dimensions and turn count.

    ``D = 0`` is accepted as the degenerate straight-fiber case.
    """
    _check_positive(L, "L")
    _check_positive(N, "N")
    if D < 0.0:
        raise DomainError(f"D={D!r} must be non-negative")
    return math.hypot(L, D * math.pi * N)


def theta_from_length(braid: BraidSpec, L: float) -> float:
    if not (0.0 < L < braid.b):
        raise DomainError(f"L={L!r} must lie in (0, b={braid.b!r})")
    return math.acos(L / braid.b)


def theta_from_diameter(braid: BraidSpec, D: float) -> float:
    d0 = braid.d0
    if not (0.0 < D < d0):
        raise DomainError(f"D={D!r} must lie in (0, D0={d0!r})")
    return math.asin(D / d0)


def check_consistency(
    raw: RawParameterSet, tolerance: float = MEASURED_TOLERANCE
) -> ConsistencyReport:
    """Compare the fiber lengths implied by the length, diameter and
    Pythagorean relations.

    The spread is ``(max - min) / max`` over the available estimates.
    """
    if not tolerance > 0.0:
        raise DomainError(f"tolerance={tolerance!r} must be positive")
    b_pyth = fiber_length_from(raw.L, raw.D, raw.N)
    if raw.theta is None:
        return ConsistencyReport(None, None, b_pyth, 0.0, tolerance, True)

    b_len = raw.L / math.cos(raw.theta)
    b_dia = raw.D * raw.N * math.pi / math.sin(raw.theta)
    estimates = (b_len, b_dia, b_pyth)
    spread = max(abs(x - y) for x, y in combinations(estimates, 2)) / max(estimates)
    return ConsistencyReport(
        b_len, b_dia, b_pyth, spread, tolerance, spread <= tolerance, raw.theta
    )


def resolve(L: float, D: float, N: float) -> tuple[BraidSpec, float]:
    """Self-consistent braid and angle from measured ``L``, ``D`` and ``N``.

    Any separately measured angle is ignored: ``b`` comes from the
    Pythagorean relation and ``theta`` is the angle that satisfies both the
    length and diameter relations with that ``b``.
    """
    b = fiber_length_from(L, D, N)
    braid = BraidSpec(b, N)
    # atan2 stays well conditioned at both ends of (0, pi/2), unlike acos/asin
    theta = math.atan2(D * math.pi * N, L)
    check_angle(theta)
    # residuals scaled by b and D0: cos/sin lose relative accuracy near the ends
    if not (
        math.isclose(length_of(braid, theta), L, rel_tol=1e-12, abs_tol=1e-12 * b)
        and math.isclose(diameter_of(braid, theta), D, rel_tol=1e-12, abs_tol=1e-12 * braid.d0)
    ):
        raise ArithmeticError(f"resolved braid does not reproduce L={L!r}, D={D!r}")
    return braid, theta


def gamma_of(stroke: StrokeSpec) -> float:
    """Diameter ratio ``D2 / D1`` across a stroke."""
    return math.sin(stroke.theta_2) / math.sin(stroke.theta_1)
