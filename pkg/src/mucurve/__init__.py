"""Exact mu-basis computations for rational plane curves.

Implicitization, moving-curve generators via inertia forms, first-order
subresultants, adjoint curves and singularity reports, all over Q.
"""

__version__ = "0.1.0"

from .adjoint import (
    CurveError,
    CurveModel,
    SingularityReport,
    adjoint_candidates,
    adjoint_pencils,
    analyze,
    branch_adjoint_check,
    curve_model,
    d_resultant,
    inverse_map,
    polar_curve,
    singularity_report,
)
from .inertia import (
    certify_generators,
    is_inertia_form,
    moving_curve_generators,
    sylvester_form,
)
from .linalg import PolyMatrix, det, nullspace
from .mubasis import (
    MuBasis,
    Parametrization,
    ParametrizationError,
    degree_of_map,
    implicitize,
    mu_basis,
)
from .poly import Poly, parse_poly, var
from .resultants import FormPair, resultant, subresultants

__all__ = [
    "CurveError",
    "CurveModel",
    "FormPair",
    "MuBasis",
    "Parametrization",
    "ParametrizationError",
    "Poly",
    "PolyMatrix",
    "SingularityReport",
    "adjoint_candidates",
    "adjoint_pencils",
    "analyze",
    "branch_adjoint_check",
    "certify_generators",
    "curve_model",
    "d_resultant",
    "degree_of_map",
    "det",
    "implicitize",
    "inverse_map",
    "is_inertia_form",
    "moving_curve_generators",
    "mu_basis",
    "nullspace",
    "parse_poly",
    "polar_curve",
    "resultant",
    "singularity_report",
    "subresultants",
    "sylvester_form",
    "var",
]
