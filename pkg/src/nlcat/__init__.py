"""Deformed coherent-state superpositions under zero-temperature amplitude damping.

Builds coherent, f-deformed coherent, and even cat states on a truncated
Fock space, evolves operators through the damping channel in Kraus form,
and computes quantum visibility and component separation, with parameter
scans and calibration utilities plus a CSV-emitting CLI.
"""

from .calibration import ScanCurve, calibrate_xi, scan_separation
from .channel import (
    ChannelParams,
    assert_density_matrix,
    completeness_defect,
    density_defects,
    evolve,
    kraus_operator,
)
from .coherence import (
    VisibilitySample,
    coherence_function,
    visibility_deformed,
    visibility_numeric,
    visibility_undeformed,
)
from .deformation import (
    DeformationSpec,
    SignedLogValue,
    deformed_factorial,
    deformed_number,
    deformed_number_table,
    exp_f,
    f_value,
    laguerre,
)
from .errors import (
    DegenerateDenominator,
    DegenerateSuperposition,
    DomainError,
    InvalidParameter,
    NegativeDeformedFactorial,
    NoCrossing,
    NonConvergent,
    NonNormalizable,
    SingularBracket,
    SingularDeformation,
    TruncationTooSmall,
)
from .fock import (
    FockState,
    coherent,
    even_cat,
    f_coherent,
    number_distribution,
    overlap,
    separation,
)

__all__ = [
    "ChannelParams",
    "DeformationSpec",
    "DegenerateDenominator",
    "DegenerateSuperposition",
    "DomainError",
    "FockState",
    "InvalidParameter",
    "NegativeDeformedFactorial",
    "NoCrossing",
    "NonConvergent",
    "NonNormalizable",
    "ScanCurve",
    "SignedLogValue",
    "SingularBracket",
    "SingularDeformation",
    "TruncationTooSmall",
    "VisibilitySample",
    "assert_density_matrix",
    "calibrate_xi",
    "coherence_function",
    "coherent",
    "completeness_defect",
    "deformed_factorial",
    "deformed_number",
    "deformed_number_table",
    "density_defects",
    "even_cat",
    "evolve",
    "exp_f",
    "f_coherent",
    "f_value",
    "kraus_operator",
    "laguerre",
    "number_distribution",
    "overlap",
    "scan_separation",
    "separation",
    "visibility_deformed",
    "visibility_numeric",
    "visibility_undeformed",
]

__version__ = "0.1.0"
