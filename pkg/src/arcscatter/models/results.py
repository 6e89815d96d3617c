"""Result models produced by assembly, solves and spectral analysis."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np

from arcscatter.models.core import (
    CosineSeries,
    Formulation,
    Membership,
    OperatorKind,
    OperatorMatrix,
)

if TYPE_CHECKING:
    from arcscatter.geometry.arcs import Arc


@dataclass(frozen=True)
class KernelValue:
    """Green's function value split as G = log_coefficient·ln|t−t2| + smooth_part.

    Attributes:
        value: G_k(r(t), r(t2)); infinite on the diagonal.
        log_coefficient: Coefficient of ln|t−t2|.
        smooth_part: Remaining smooth part, finite on the diagonal.
    """

    value: complex
    log_coefficient: complex
    smooth_part: complex


@dataclass(frozen=True)
class SpectrumPoint:
    """A complex number classified against the point spectrum of J0.

    Attributes:
        value: The candidate eigenvalue λ.
        membership: Which part of the point spectrum contains λ.
        index: n when λ = λ_n in the discrete part, otherwise None.
        s: Sobolev index the open-region test was run at.
    """

    value: complex
    membership: Membership
    index: int | None = None
    s: float = 0.0

    @property
    def z(self) -> complex:
        """Shifted spectral variable z = 8λ + 2."""
        return 8 * self.value + 2


@dataclass(frozen=True)
class EigenfunctionResult:
    """Coefficients of an eigenfunction of J0 generated by the recurrence.

    Attributes:
        eigenvalue: The eigenvalue λ.
        coefficients: E-basis coefficients f_0 … f_{n_max}.
        f0_converged: Whether the tail of the f₀ sum was negligible.
        terminated: Whether a chain stopped at a discrete eigenvalue.
        decay_exponent: Fitted slope of log|f_{2n}| against log n.
        predicted_exponent: Slope −2x/(x²+y²) from z = −x + iy.
    """

    eigenvalue: complex
    coefficients: np.ndarray
    f0_converged: bool = True
    terminated: bool = False
    decay_exponent: float | None = None
    predicted_exponent: float | None = None


@dataclass(frozen=True)
class AssembledOperator:
    """A frequency-dependent weighted operator assembled on an arc.

    Attributes:
        matrix: Coefficient-space matrix.
        arc: Arc the operator lives on.
        k: Wavenumber.
        kind: Which operator was assembled.
        size: Resolution N.
    """

    matrix: OperatorMatrix
    arc: Arc
    k: float
    kind: OperatorKind
    size: int


@dataclass
class SolveResult:
    """Outcome of a scattering solve.

    Attributes:
        density: φ̃, the unknown of the solved equation.
        physical_density: ψ̃ = S̃φ̃ (Neumann second kind) or the density itself.
        iterations: Krylov iterations, 0 for the direct path.
        residual_history: Relative residual after each iteration.
        formulation: The equation that was solved.
        converged: Whether the tolerance was met.
        method: "gmres" or "direct".
        boundary_residual: ‖S̃φ̃ − f̃‖₀/‖f̃‖₀ for Dirichlet second-kind solves.
    """

    density: CosineSeries
    physical_density: CosineSeries
    iterations: int
    residual_history: list[float] = field(default_factory=list)
    formulation: Formulation = Formulation.SECOND_KIND_NS
    converged: bool = True
    method: str = "gmres"
    boundary_residual: float | None = None

    @property
    def final_residual(self) -> float:
        """Last recorded relative residual, or 0 when none was recorded."""
        return self.residual_history[-1] if self.residual_history else 0.0

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "formulation": self.formulation.value,
            "method": self.method,
            "iterations": self.iterations,
            "converged": self.converged,
            "final_residual": self.final_residual,
            "boundary_residual": self.boundary_residual,
            "size": self.density.size,
        }


@dataclass
class SpectrumReport:
    """Eigenvalue and singular-value statistics of a truncated operator.

    Attributes:
        name: Operator label.
        size: Truncation order N.
        eigenvalues: Eigenvalues sorted by real part, then imaginary part.
        min_abs: Smallest eigenvalue modulus.
        max_abs: Largest eigenvalue modulus.
        k: Wavenumber when the operator depends on one.
        cluster_center: Accumulation point used for the cluster statistics.
        cluster_radius_quantiles: Distances to the center at the 50/80/90/100% quantiles.
        singular_values: Singular values in decreasing order, when computed.
        numerical_rank: First index with σ_j < 1e−6·σ₀, when computed.
    """

    name: str
    size: int
    eigenvalues: np.ndarray
    min_abs: float
    max_abs: float
    k: float | None = None
    cluster_center: complex = -0.25
    cluster_radius_quantiles: np.ndarray = field(default_factory=lambda: np.zeros(0))
    singular_values: np.ndarray | None = None
    numerical_rank: int | None = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        center = complex(self.cluster_center)
        data: dict[str, Any] = {
            "operator": self.name,
            "size": self.size,
            "k": self.k,
            "min_abs": self.min_abs,
            "max_abs": self.max_abs,
            "cluster_center": [center.real, center.imag],
            "cluster_radius_quantiles": [float(q) for q in self.cluster_radius_quantiles],
        }
        if self.singular_values is not None:
            data["largest_singular_value"] = float(self.singular_values[0])
            data["numerical_rank"] = self.numerical_rank
        return data


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check.

    Attributes:
        name: Check identifier.
        max_deviation: Largest observed deviation from the expected value.
        tolerance: Allowed deviation.
    """

    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        """Whether the deviation is within tolerance."""
        return bool(np.isfinite(self.max_deviation) and self.max_deviation <= self.tolerance)
