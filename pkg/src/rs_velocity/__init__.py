"""Bounded and unbounded velocity representations, numerically verified.

The unbounded (Galilean) representation composes by subtraction; the
bounded (Lorentz) representation, confined to (-c, c), composes by the
Einstein relative-velocity formula.  A logarithmic bijection connects the
two and turns each law into the other.  This package implements the maps,
the laws, three operational definitions of velocity from displacement
measurements, and an equivalence engine that checks the correspondence
between the two algebras as seeded numerical properties.
"""

from .composition import (
    CrossCheckReport,
    DegenerateDenominator,
    cross_representation_check,
    einstein_compose,
    einstein_relative,
    galilean_relative,
)
from .core import (
    DEFAULT_POLICY,
    SI_LIGHT_SPEED,
    AtLightCone,
    BoundedVelocity,
    LightSpeed,
    NonFinite,
    NumericPolicy,
    Saturation,
    SaturationMode,
    UnboundedVelocity,
    VelocityError,
    artanh_ratio,
    representation_of,
    round_trip_residual,
    tanh_ratio,
    to_bounded,
    to_unbounded,
)
from .definitions import (
    BeyondLightCone,
    ConvergenceRow,
    ConvergenceScan,
    DefinitionTag,
    DegenerateFit,
    ObservationRecord,
    OutsideOperatorDomain,
    convergence_scan,
    def1_velocity,
    def2_limit,
    def2_velocity,
    def3_limit,
    def3_velocity,
    evaluate,
)
from .equivalence import (
    CompositionTag,
    EquivalenceReport,
    LightConeRow,
    LightConeScan,
    RepresentationMismatch,
    Scenario,
    claim_id_for,
    galilean_in_lorentz_check,
    light_cone_divergence_scan,
    relative_velocity,
    relativistic_in_galilean_check,
)
from .properties import PropertyResult, run_property_suite, ulps_between

__version__ = "0.1.0"

__all__ = [
    "AtLightCone",
    "BeyondLightCone",
    "BoundedVelocity",
    "CompositionTag",
    "ConvergenceRow",
    "ConvergenceScan",
    "CrossCheckReport",
    "DEFAULT_POLICY",
    "DefinitionTag",
    "DegenerateDenominator",
    "DegenerateFit",
    "EquivalenceReport",
    "LightConeRow",
    "LightConeScan",
    "LightSpeed",
    "NonFinite",
    "NumericPolicy",
    "ObservationRecord",
    "OutsideOperatorDomain",
    "PropertyResult",
    "RepresentationMismatch",
    "SI_LIGHT_SPEED",
    "Saturation",
    "SaturationMode",
    "Scenario",
    "UnboundedVelocity",
    "VelocityError",
    "artanh_ratio",
    "claim_id_for",
    "convergence_scan",
    "cross_representation_check",
    "def1_velocity",
    "def2_limit",
    "def2_velocity",
    "def3_limit",
    "def3_velocity",
    "einstein_compose",
    "einstein_relative",
    "evaluate",
    "galilean_in_lorentz_check",
    "galilean_relative",
    "light_cone_divergence_scan",
    "relative_velocity",
    "relativistic_in_galilean_check",
    "representation_of",
    "round_trip_residual",
    "run_property_suite",
    "tanh_ratio",
    "to_bounded",
    "to_unbounded",
    "ulps_between",
]
