"""Force laws for a McKibben muscle at constant gauge pressure.

Sign convention: positive force is tensile (the muscle contracts).  An
extending muscle, braid angle above ``ZERO_FORCE_ANGLE_THIN``, produces
negative values.  "Larger" force in reports means larger magnitude.

Only the volumetric effect of the elastomer wall is modelled.  Elastic
restoring forces of the bladder are NOT included, so every number here is
an upper bound on what a real actuator delivers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .geometry import HALF_PI, BraidSpec, DomainError, check_angle

#: thin-wall zero-force angle, arccos(1/sqrt(3)) ~ 54.7356 degrees
ZERO_FORCE_ANGLE_THIN = math.acos(1.0 / math.sqrt(3.0))

MAX_RELATIVE_THICKNESS = 0.5


def _check_pressure(pressure: float) -> float:
    if not pressure >= 0.0:
        raise DomainError(f"gauge pressure {pressure!r} Pa must be non-negative")
    return pressure


def _check_relative(t_hat: float) -> float:
    if not (0.0 <= t_hat <= MAX_RELATIVE_THICKNESS):
        raise DomainError(
            f"relative wall thickness {t_hat!r} outside [0, {MAX_RELATIVE_THICKNESS}]"
        )
    return t_hat


@dataclass(frozen=True)
class WallSpec:
    """Elastomer wall, stored either as absolute or relative thickness.

    Relative thickness is ``t_k / D`` with ``D`` the current external
    diameter, which changes with the braid angle.  Conversions therefore
    always take the diameter explicitly.
    """

    thickness: Optional[float] = None
    relative: Optional[float] = None

    def __post_init__(self):
        if (self.thickness is None) == (self.relative is None):
            raise ValueError("give exactly one of thickness or relative")
        if self.thickness is not None and not self.thickness >= 0.0:
            raise DomainError(f"wall thickness {self.thickness!r} m must be >= 0")
        if self.relative is not None:
            _check_relative(self.relative)

    @classmethod
    def from_thickness(cls, t_k: float) -> "WallSpec":
        return cls(thickness=t_k)

    @classmethod
    def from_relative(cls, t_hat: float) -> "WallSpec":
        return cls(relative=t_hat)

    def thickness_at(self, diameter: float) -> float:
        if self.thickness is not None:
            return self.thickness
        return self.relative * diameter

    def relative_at(self, diameter: float) -> float:
        if self.relative is not None:
            return self.relative
        return self.thickness / diameter


def _wall_thickness(braid: BraidSpec, theta: float, wall: WallSpec) -> float:
    diameter = braid.d0 * math.sin(theta)
    t_k = wall.thickness_at(diameter)
    if t_k / diameter > MAX_RELATIVE_THICKNESS:
        raise DomainError(
            f"wall exceeds radius: t_k={t_k!r} m at D={diameter!r} m "
            f"(t_hat={t_k / diameter!r})"
        )
    return t_k


def force_thin(braid: BraidSpec, theta: float, pressure: float) -> float:
    """Thin-wall force [N] at gauge pressure ``pressure`` [Pa]."""
    check_angle(theta)
    _check_pressure(pressure)
    return 0.25 * math.pi * pressure * braid.d0**2 * (3.0 * math.cos(theta) ** 2 - 1.0)


def force_thick(
    braid: BraidSpec, theta: float, wall: WallSpec, pressure: float
) -> float:
    """Force [N] including the volume taken up by the elastomer wall.

    Parameterized by the invariant ``D0``.
    """
    check_angle(theta)
    _check_pressure(pressure)
    t_k = _wall_thickness(braid, theta, wall)
    d0 = braid.d0
    s = math.sin(theta)
    thin = 0.25 * math.pi * pressure * d0**2 * (3.0 * math.cos(theta) ** 2 - 1.0)
    return thin + math.pi * pressure * (d0 * t_k * (2.0 * s - 1.0 / s) - t_k**2)


def force_thick_per_pressure_from_diameter(
    diameter: float, theta: float, t_k: float
) -> float:
    """Thick-wall force per unit pressure written in the instantaneous
    external diameter rather than ``D0``.

    Only valid with the ``diameter`` belonging to ``theta``; this form hides
    that ``diameter`` itself moves during actuation.
    """
    csc2 = 1.0 / math.sin(theta) ** 2
    return 0.25 * math.pi * diameter**2 * (2.0 * csc2 - 3.0) + math.pi * (
        diameter * t_k * (2.0 - csc2) - t_k**2
    )


def normalized_force(theta: float, t_hat: float) -> float:
    """Force divided by pressure and current external area.

    Defined on ``0 < theta <= pi/2``: the cosecant is finite at 90 degrees,
    where the thin-wall value is -1 (a piston of the same area).
    """
    if not (0.0 < theta <= HALF_PI):
        raise DomainError(f"theta={theta!r} rad is outside (0, pi/2]")
    _check_relative(t_hat)
    csc2 = 1.0 / math.sin(theta) ** 2
    return -4.0 * t_hat**2 + (8.0 - 4.0 * csc2) * t_hat + (2.0 * csc2 - 3.0)


def force_from_normalized(
    theta: float, t_hat: float, pressure: float, area: float
) -> float:
    if not area > 0.0:
        raise DomainError(f"area={area!r} m^2 must be positive")
    _check_pressure(pressure)
    return normalized_force(theta, t_hat) * pressure * area


def zero_force_angle(t_hat: float) -> float:
    """Braid angle at which the normalized force vanishes.

    The normalized force factors as ``(1 - 2 t)(2 t + 2 csc^2 - 3)``, so for
    ``t < 0.5`` the root is ``sin^2 = 2 / (3 - 2 t)``.  At ``t = 0.5`` the
    force is identically zero and no single angle exists.
    """
    if not (0.0 <= t_hat < MAX_RELATIVE_THICKNESS):
        raise DomainError(f"relative wall thickness {t_hat!r} outside [0, 0.5)")
    return math.asin(math.sqrt(2.0 / (3.0 - 2.0 * t_hat)))


def appendix_identity_check(theta: float, braid: BraidSpec, wall: WallSpec) -> float:
    """Deviation between the ``D0`` and instantaneous-``D`` forms of the
    thick-wall force.

    Measured relative to ``max(|a|, |b|, piston)`` where ``piston`` is the
    pressure-area scale ``pi/4 D0^2``; near the zero-force angle both forms
    cancel to round-off and a bare relative difference is meaningless.
    """
    a = force_thick(braid, theta, wall, 1.0)
    diameter = braid.d0 * math.sin(theta)
    b = force_thick_per_pressure_from_diameter(
        diameter, theta, wall.thickness_at(diameter)
    )
    return relative_deviation(a, b, 0.25 * math.pi * braid.d0**2)


def relative_deviation(a: float, b: float, scale: float = 0.0) -> float:
    denom = max(abs(a), abs(b), abs(scale))
    if denom == 0.0:
        return 0.0
    return abs(a - b) / denom
