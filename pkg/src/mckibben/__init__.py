"""Braided pneumatic artificial muscle (McKibben) model: kinematics, thin-
and thick-wall force laws, energy audit and pack/equivalent comparison."""

from .energy_audit import (
    EnergyAudit,
    PackEnergyReport,
    audit_stroke,
    average_force,
    delta_volume,
    delta_volume_gamma_literal,
    delta_volume_two_state,
    pack_vs_equivalent_energy,
    volume_of,
    work_integral,
)
from .fascicle_compare import (
    ActuatorDesign,
    ComparisonRow,
    EquivalencePolicy,
    PackSpec,
    compare,
    equality_theorem_thick,
    equality_theorem_thin,
    equivalent_design,
    format_table,
    pack_force_per_pressure,
    replicate_original_equivalent,
)
from .force_model import (
    ZERO_FORCE_ANGLE_THIN,
    WallSpec,
    appendix_identity_check,
    force_from_normalized,
    force_thick,
    force_thin,
    normalized_force,
    zero_force_angle,
)
from .geometry import (
    BraidSpec,
    ConsistencyReport,
    DomainError,
    GeometryState,
    RawParameterSet,
    StrokeSpec,
    check_consistency,
    diameter_of,
    fiber_length_from,
    gamma_of,
    length_of,
    resolve,
    theta_from_diameter,
    theta_from_length,
)

__version__ = "0.1.0"
