"""Energy bookkeeping for an ideal (lossless, non-storing) muscle at constant
pressure: the flow energy ``P' dV`` must equal the mechanical work.

Because the force laws are exactly ``F = -P' dV/dL`` (thin wall with the
external volume, thick wall with the bore volume), integrating the force
over length must return ``-P' * delta_V``.  ``work_integral`` does that
integration numerically so it can act as an independent check.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

from scipy import integrate

from .force_model import WallSpec, _check_pressure, force_thick, force_thin
from .geometry import BraidSpec, StrokeSpec, check_angle, length_of

QUAD_RTOL = 1e-10


class QuadratureError(ArithmeticError):
    def __init__(self, message: str, achieved: float):
        super().__init__(message)
        self.achieved = achieved


@dataclass(frozen=True)
class EnergyAudit:
    """Energy balance over one stroke.  ``F_avg`` is signed, tensile positive."""

    delta_V: float
    delta_L: float
    pressure: float
    F_avg: float

    @property
    def E_in(self) -> float:
        return self.pressure * abs(self.delta_V)

    @property
    def E_out(self) -> float:
        return abs(self.F_avg * self.delta_L)


@dataclass(frozen=True)
class PackEnergyReport:
    n: int
    equivalent: BraidSpec
    delta_V_pack: float
    delta_V_eq: float
    F_avg_pack: float
    F_avg_eq: float
    relative_deviation: float

    @property
    def equal(self) -> bool:
        return self.relative_deviation <= 1e-12


def volume_of(braid: BraidSpec, theta: float) -> float:
    """External cylinder volume [m^3]."""
    check_angle(theta)
    return 0.25 * math.pi * (braid.d0 * math.sin(theta)) ** 2 * braid.b * math.cos(theta)


def bore_volume_of(braid: BraidSpec, theta: float, t_k: float) -> float:
    """Volume inside an elastomer wall of constant absolute thickness."""
    check_angle(theta)
    inner = braid.d0 * math.sin(theta) - 2.0 * t_k
    return 0.25 * math.pi * inner**2 * braid.b * math.cos(theta)


def delta_volume(braid: BraidSpec, stroke: StrokeSpec) -> float:
    """Volume change across a stroke, via the diameter ratio gamma.

    ``pi/4 D1^2 (gamma^2 L2 - L1)`` equals ``pi/4 D0^2 b (s2^2 c2 - s1^2 c1)``
    and ``s^2 c = c - c^3``, so the bracket factors into
    ``(c2 - c1)(1 - c1^2 - c1 c2 - c2^2)``.  The cosine difference is taken
    from half-angle sines, which keeps short strokes free of cancellation.
    """
    t1, t2 = stroke.theta_1, stroke.theta_2
    c1, c2 = math.cos(t1), math.cos(t2)
    dc = -2.0 * math.sin(0.5 * (t1 + t2)) * math.sin(0.5 * (t2 - t1))
    return 0.25 * math.pi * braid.d0**2 * braid.b * dc * (1.0 - c1 * c1 - c1 * c2 - c2 * c2)


def delta_volume_gamma_literal(braid: BraidSpec, stroke: StrokeSpec) -> float:
    """``pi/4 D1^2 (gamma^2 L2 - L1)`` evaluated as written."""
    d1 = braid.d0 * math.sin(stroke.theta_1)
    L1 = braid.b * math.cos(stroke.theta_1)
    L2 = braid.b * math.cos(stroke.theta_2)
    return 0.25 * math.pi * d1**2 * (stroke.gamma**2 * L2 - L1)


def delta_volume_two_state(braid: BraidSpec, stroke: StrokeSpec) -> float:
    return volume_of(braid, stroke.theta_2) - volume_of(braid, stroke.theta_1)


def average_force(pressure: float, delta_V: float, delta_L: float) -> float:
    """Mean force over a stroke from the energy balance.

    Returns ``-P' dV / dL``: magnitude ``P'|dV|/|dL|``, negative when the
    muscle pushes while extending.
    """
    _check_pressure(pressure)
    if delta_L == 0.0:
        raise ZeroDivisionError("average force is undefined for zero length change")
    return -pressure * delta_V / delta_L


def work_scale(braid: BraidSpec, stroke: StrokeSpec, pressure: float) -> float:
    """Work of a ``D0``-bore piston over the stroke's length change."""
    dL = braid.b * abs(math.cos(stroke.theta_2) - math.cos(stroke.theta_1))
    return pressure * 0.25 * math.pi * braid.d0**2 * dL


def volume_scale(braid: BraidSpec, stroke: StrokeSpec) -> float:
    return max(volume_of(braid, stroke.theta_1), volume_of(braid, stroke.theta_2))


def work_integral(
    braid: BraidSpec,
    stroke: StrokeSpec,
    pressure: float,
    wall: Optional[WallSpec] = None,
    rtol: float = QUAD_RTOL,
) -> tuple[float, float]:
    """Integrate the force over length from ``L1`` to ``L2``.

    Uses the thin-wall force unless ``wall`` is given.  Returns
    ``(work, abs_error_estimate)``; raises :class:`QuadratureError` when the
    error estimate exceeds ``rtol`` times the larger of ``|work|`` and
    :func:`work_scale`.  The floor matters for strokes whose work nearly
    cancels.
    """
    _check_pressure(pressure)
    L1 = length_of(braid, stroke.theta_1)
    L2 = length_of(braid, stroke.theta_2)
    if L1 == L2:
        return 0.0, 0.0

    if wall is None:
        def integrand(L):
            return force_thin(braid, math.acos(L / braid.b), pressure)
    else:
        def integrand(L):
            return force_thick(braid, math.acos(L / braid.b), wall, pressure)

    with warnings.catch_warnings():
        # quad warns when a near-zero integral stalls; the check below decides
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err = integrate.quad(integrand, L1, L2, epsabs=0.0, epsrel=rtol, limit=200)
    achieved = err / max(abs(value), work_scale(braid, stroke, pressure))
    if achieved > rtol:
        raise QuadratureError(
            f"quadrature reached only {achieved:.3g} relative (wanted {rtol:.3g})",
            achieved,
        )
    return value, err


def audit_stroke(braid: BraidSpec, stroke: StrokeSpec, pressure: float) -> EnergyAudit:
    _check_pressure(pressure)
    dV = delta_volume(braid, stroke)
    dL = length_of(braid, stroke.theta_2) - length_of(braid, stroke.theta_1)
    F_avg = 0.0 if dL == 0.0 else average_force(pressure, dV, dL)
    return EnergyAudit(dV, dL, pressure, F_avg)


def pack_vs_equivalent_energy(
    ind: BraidSpec, n: int, stroke: StrokeSpec, pressure: float
) -> PackEnergyReport:
    """Volume change and mean force of ``n`` fascicles vs. one equivalent.

    The equivalent keeps ``b`` (same length and angle) and has ``sqrt(n)``
    times the diameter, hence ``N / sqrt(n)`` turns.  Both share the stroke
    angles because they share ``L1``, ``L2`` and ``b``.
    """
    if n < 1:
        raise ValueError(f"fascicle count n={n!r} must be >= 1")
    eq = BraidSpec(ind.b, ind.N / math.sqrt(n))
    dV_pack = n * delta_volume(ind, stroke)
    dV_eq = delta_volume(eq, stroke)
    dL = length_of(ind, stroke.theta_2) - length_of(ind, stroke.theta_1)
    if dL == 0.0:
        F_pack = F_eq = 0.0
    else:
        F_pack = average_force(pressure, dV_pack, dL)
        F_eq = average_force(pressure, dV_eq, dL)
    denom = max(abs(dV_pack), abs(dV_eq))
    dev = abs(dV_pack - dV_eq) / denom if denom else 0.0
    if dev > 1e-12:
        raise ArithmeticError(f"pack and equivalent volume changes differ by {dev:.3g}")
    return PackEnergyReport(n, eq, dV_pack, dV_eq, F_pack, F_eq, dev)
