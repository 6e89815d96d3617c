"""Data models for arcs, cosine series, operators and results."""

from arcscatter.models.core import (
    ArcFamily,
    BoundaryCondition,
    CosineSeries,
    Formulation,
    Membership,
    NodalGrid,
    OperatorKind,
    OperatorMatrix,
    basis_to_series,
    series_to_basis,
)
from arcscatter.models.results import (
    AssembledOperator,
    CheckResult,
    EigenfunctionResult,
    KernelValue,
    SolveResult,
    SpectrumPoint,
    SpectrumReport,
)

__all__ = [
    "ArcFamily",
    "AssembledOperator",
    "BoundaryCondition",
    "CheckResult",
    "CosineSeries",
    "EigenfunctionResult",
    "Formulation",
    "KernelValue",
    "Membership",
    "NodalGrid",
    "OperatorKind",
    "OperatorMatrix",
    "SolveResult",
    "SpectrumPoint",
    "SpectrumReport",
    "basis_to_series",
    "series_to_basis",
]
