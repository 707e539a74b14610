"""Packs of parallel fascicles versus a single "equivalent" actuator.

An equivalent actuator has the same length and braid angle as one fascicle
and ``n`` times its external cross-sectional area.  Same length and angle
force the same fiber length ``b``; the larger diameter then forces fewer
turns, ``N_eq = N_ind / sqrt(n)``.  Holding ``N`` fixed instead describes a
braid that cannot exist (see :func:`replicate_original_equivalent`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .force_model import (
    MAX_RELATIVE_THICKNESS,
    WallSpec,
    force_thick,
    force_thin,
)
from .geometry import (
    GENERATED_TOLERANCE,
    BraidSpec,
    ConsistencyReport,
    DomainError,
    RawParameterSet,
    check_angle,
    check_consistency,
)

KPA = 1e3


class EquivalencePolicy(enum.Enum):
    RELATIVE = "relative"  # t_hat preserved
    ABSOLUTE = "absolute"  # t_k preserved


@dataclass(frozen=True)
class ActuatorDesign:
    braid: BraidSpec
    wall: WallSpec
    theta: float

    def __post_init__(self):
        check_angle(self.theta)
        t_hat = self.wall.relative_at(self.diameter)
        if t_hat > MAX_RELATIVE_THICKNESS:
            raise DomainError(f"wall exceeds radius at reference state (t_hat={t_hat!r})")

    @property
    def length(self) -> float:
        return self.braid.b * math.cos(self.theta)

    @property
    def diameter(self) -> float:
        return self.braid.d0 * math.sin(self.theta)

    @property
    def area(self) -> float:
        return 0.25 * math.pi * self.diameter**2

    @property
    def thickness(self) -> float:
        return self.wall.thickness_at(self.diameter)

    @property
    def relative_thickness(self) -> float:
        return self.wall.relative_at(self.diameter)

    def external_volume(self) -> float:
        return self.area * self.length

    def elastomer_volume(self) -> float:
        """Annulus volume of the wall over the actuator length."""
        inner = self.diameter - 2.0 * self.thickness
        return 0.25 * math.pi * (self.diameter**2 - inner**2) * self.length

    def force_per_pressure(self) -> float:
        """Thick-wall force per unit gauge pressure [N/Pa]."""
        return force_thick(self.braid, self.theta, self.wall, 1.0)


@dataclass(frozen=True)
class PackSpec:
    unit: ActuatorDesign
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"fascicle count n={self.n!r} must be >= 1")


@dataclass(frozen=True)
class ComparisonRow:
    """One row of the pack comparison, forces per unit pressure in N/Pa.

    A row whose computation failed carries NaN values and the message.
    """

    n: int
    pack: float
    eq_relative: float
    eq_absolute: float
    error: Optional[str] = field(default=None, compare=False)


def equivalent_design(
    unit: ActuatorDesign,
    n: int,
    policy: EquivalencePolicy = EquivalencePolicy.RELATIVE,
) -> ActuatorDesign:
    if n < 1:
        raise DomainError(f"fascicle count n={n!r} must be >= 1")
    if n == 1:
        return unit
    root_n = math.sqrt(n)
    braid = BraidSpec(unit.braid.b, unit.braid.N / root_n)
    t_k = unit.thickness
    if policy is EquivalencePolicy.RELATIVE:
        wall = WallSpec.from_thickness(root_n * t_k)
    else:
        wall = WallSpec.from_thickness(t_k)
    return ActuatorDesign(braid, wall, unit.theta)


def replicate_original_equivalent(unit: ActuatorDesign, n: int) -> ConsistencyReport:
    """Consistency report for an equivalent built by scaling only ``D``.

    Length, angle and turn count are kept from the unit.  Its force is
    deliberately not computed: the parameter set does not describe a braid.
    """
    raw = RawParameterSet(
        L=unit.length, D=math.sqrt(n) * unit.diameter, N=unit.braid.N, theta=unit.theta
    )
    return check_consistency(raw, GENERATED_TOLERANCE)


def pack_force_per_pressure(pack: PackSpec) -> float:
    return pack.n * pack.unit.force_per_pressure()


def _row(unit: ActuatorDesign, n: int) -> ComparisonRow:
    pack = pack_force_per_pressure(PackSpec(unit, n))
    rel = equivalent_design(unit, n, EquivalencePolicy.RELATIVE).force_per_pressure()
    absolute = equivalent_design(unit, n, EquivalencePolicy.ABSOLUTE).force_per_pressure()
    return ComparisonRow(n, pack, rel, absolute)


def compare(
    unit: ActuatorDesign, n_list: Iterable[int], theta: Optional[float] = None
) -> list[ComparisonRow]:
    """Pack and both equivalents for each ``n``, in input order.

    ``theta`` overrides the unit's reference angle.  Domain errors are caught
    per row and recorded on the row.
    """
    n_list = list(n_list)
    if not n_list:
        raise ValueError("n_list must not be empty")
    if theta is not None:
        unit = ActuatorDesign(unit.braid, unit.wall, theta)
    rows = []
    for n in n_list:
        try:
            rows.append(_row(unit, n))
        except DomainError as exc:
            nan = float("nan")
            rows.append(ComparisonRow(n, nan, nan, nan, error=str(exc)))
    return rows


def equality_theorem_thin(
    unit_braid: BraidSpec, theta: float, n: int
) -> tuple[float, float]:
    """Thin-wall force per pressure of the pack and of its equivalent.

    The two are computed along separate paths: ``n`` times the unit force,
    and the force of a braid with ``sqrt(n)`` times the ``D0``.
    """
    if n < 1:
        raise DomainError(f"fascicle count n={n!r} must be >= 1")
    pack = n * force_thin(unit_braid, theta, 1.0)
    eq_braid = BraidSpec(unit_braid.b, unit_braid.N / math.sqrt(n))
    eq = force_thin(eq_braid, theta, 1.0)
    return pack, eq


def equality_theorem_thick(unit: ActuatorDesign, n: int) -> tuple[float, float]:
    """Thick-wall pack vs. equivalent with the same relative thickness."""
    pack = pack_force_per_pressure(PackSpec(unit, n))
    eq = equivalent_design(unit, n, EquivalencePolicy.RELATIVE).force_per_pressure()
    return pack, eq


def piston_scale(unit: ActuatorDesign, n: int) -> float:
    """Force per pressure of a piston with the pack's total ``D0`` area."""
    return n * 0.25 * math.pi * unit.braid.d0**2


def format_sig(value: float, digits: int = 3) -> str:
    """``%g`` formatting, the same rounding MATLAB's ``num2str(x, 3)`` uses."""
    if math.isnan(value):
        return "nan"
    return f"{value:.{digits}g}"


TABLE_HEADER = ("n", "pack [N/kPa]", "eq same t_hat [N/kPa]", "eq same t_k [N/kPa]")


def format_table(rows: Sequence[ComparisonRow]) -> str:
    """Fixed-width table of forces per kPa at 3 significant figures."""
    widths = (4, 14, 23, 21)
    lines = ["".join(h.rjust(w) for h, w in zip(TABLE_HEADER, widths))]
    for row in rows:
        cells = (
            str(row.n),
            format_sig(row.pack * KPA),
            format_sig(row.eq_relative * KPA),
            format_sig(row.eq_absolute * KPA),
        )
        line = "".join(c.rjust(w) for c, w in zip(cells, widths))
        if row.error:
            line += f"  ! {row.error}"
        lines.append(line)
    return "\n".join(lines) + "\n"
