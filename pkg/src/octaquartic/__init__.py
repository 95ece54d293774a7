"""Classification engine and numerical verifier for octahedrally invariant
real quartic surfaces A(x^2y^2+y^2z^2+z^2x^2) + B(x^2+y^2+z^2)^2 +
C(x^2+y^2+z^2) + D = 0."""

from .classify import (
    CASE_LABELS,
    ClassificationConflictError,
    Family,
    FamilyForm,
    TopologyReport,
    classify,
    normalize,
    normalized_coeffs,
    sweep,
)
from .octgroup import GroupElement, Orbit, generate_group, invariants_uvw, orbit
from .oracle import OracleReport, choose_box, extract_mesh, verify
from .quadric import (
    Existence,
    LineRestriction,
    NotAQuarticError,
    QuadricInvariants,
    QuadricMatrix,
    QuadricType,
    QuarticCoefficients,
    Stratum,
    assemble_lambda,
    bromwich_burington_classify,
    center,
    existence_check,
    invariants,
    line_restriction,
    strata_singularities,
)
from .surd import Surd

__version__ = "0.1.0"

__all__ = [
    "CASE_LABELS",
    "ClassificationConflictError",
    "Existence",
    "Family",
    "FamilyForm",
    "GroupElement",
    "LineRestriction",
    "NotAQuarticError",
    "OracleReport",
    "Orbit",
    "QuadricInvariants",
    "QuadricMatrix",
    "QuadricType",
    "QuarticCoefficients",
    "Stratum",
    "Surd",
    "TopologyReport",
    "assemble_lambda",
    "bromwich_burington_classify",
    "center",
    "choose_box",
    "classify",
    "existence_check",
    "extract_mesh",
    "generate_group",
    "invariants",
    "invariants_uvw",
    "line_restriction",
    "normalize",
    "normalized_coeffs",
    "orbit",
    "strata_singularities",
    "sweep",
    "verify",
]
