"""Angular Mathieu spectrum of a charge in a planar electric-quadrupole field.

The package computes periodic Mathieu characteristic values and
eigenfunctions from their Fourier three-term recurrences, cross-checks
them against a quarter-period shooting oracle, maps the quadrupole
strength xi onto the Mathieu parameter q = 4*xi, classifies the induced
radial inverse-square problem per angular channel, and locates the
critical strengths xi_c at which characteristic curves cross zero and a
new unbounded-below channel opens.
"""

from .criticality import (
    CriticalPoint,
    PairingGap,
    critical_table,
    find_critical,
    log_gap,
    pairing_gap,
)
from .errors import BracketError, ConvergenceError, IntegrationError, SolverError
from .mathieu import (
    DEFAULT_TOL,
    RESIDUAL_TOL,
    CharacteristicValue,
    FourierSolution,
    MathieuParams,
    SymmetryClass,
    char_value,
    equation_residual,
    eval_theta,
    family_for_label,
    fourier_solution,
    negative_q_partner,
    parse_label,
)
from .model import (
    CLASSIFICATION_TOL,
    AngularChannel,
    RadialRegime,
    Regime,
    angular_energy,
    classify_channels,
    count_open_channels,
    iter_channel_modes,
    radial_alpha,
    to_mathieu,
)
from .oracle import ShootingResult, oracle_char_value, shooting_defect

__version__ = "0.1.0"

__all__ = [
    "AngularChannel",
    "BracketError",
    "CLASSIFICATION_TOL",
    "CharacteristicValue",
    "ConvergenceError",
    "CriticalPoint",
    "DEFAULT_TOL",
    "FourierSolution",
    "IntegrationError",
    "MathieuParams",
    "PairingGap",
    "RESIDUAL_TOL",
    "RadialRegime",
    "Regime",
    "ShootingResult",
    "SolverError",
    "SymmetryClass",
    "angular_energy",
    "char_value",
    "classify_channels",
    "count_open_channels",
    "critical_table",
    "equation_residual",
    "eval_theta",
    "family_for_label",
    "find_critical",
    "fourier_solution",
    "iter_channel_modes",
    "log_gap",
    "negative_q_partner",
    "oracle_char_value",
    "pairing_gap",
    "parse_label",
    "radial_alpha",
    "shooting_defect",
    "to_mathieu",
]
