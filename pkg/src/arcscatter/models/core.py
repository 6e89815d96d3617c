"""Core data models for open-arc scattering."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np


class ArcFamily(str, Enum):
    """Closed-form families of smooth open arcs."""

    FLAT = "flat"
    CIRCULAR = "circular"
    PERTURBED = "perturbed"


class BoundaryCondition(str, Enum):
    """Boundary condition imposed on the arc."""

    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"


class Formulation(str, Enum):
    """Integral equation used to compute the density."""

    SECOND_KIND_NS = "ns"
    FIRST_KIND_S = "s"
    FIRST_KIND_N = "n"


class OperatorKind(str, Enum):
    """Kinds of assembled frequency-dependent operators."""

    S_TILDE = "S"
    N_TILDE = "N"
    NG_PART = "Ng"
    NPV_PART = "Npv"


class Membership(str, Enum):
    """Where a complex number sits relative to the point spectrum of J0."""

    DISCRETE = "lambda_infinity"
    OPEN_REGION = "lambda_s"
    OUTSIDE = "outside"


def basis_to_series(f: np.ndarray) -> np.ndarray:
    """Convert e-basis coefficients (f0 = a0/2) to cosine-series coefficients."""
    a = np.array(f, dtype=complex)
    a[..., 0] *= 2.0
    return a


def series_to_basis(a: np.ndarray) -> np.ndarray:
    """Convert cosine-series coefficients to e-basis coefficients (f0 = a0/2)."""
    f = np.array(a, dtype=complex)
    f[..., 0] /= 2.0
    return f


@dataclass(frozen=True)
class CosineSeries:
    """Truncated even cosine expansion v(θ) = a₀/2 + Σ a_m cos(mθ).

    Attributes:
        coefficients: Complex coefficients a₀ … a_{N−1}; stored read-only.
    """

    coefficients: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.array(self.coefficients, dtype=complex)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError(f"Cosine series needs a non-empty 1-D array, got shape {coeffs.shape}")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zeros(cls, size: int) -> CosineSeries:
        """Create the zero series with the given truncation order."""
        return cls(np.zeros(size, dtype=complex))

    @classmethod
    def basis(cls, n: int, size: int) -> CosineSeries:
        """Create the basis function e_n = cos(nθ) truncated at ``size`` modes."""
        if not 0 <= n < size:
            raise ValueError(f"Mode {n} outside truncation order {size}")
        f = np.zeros(size, dtype=complex)
        f[n] = 1.0
        return cls.from_basis(f)

    @classmethod
    def from_basis(cls, f: np.ndarray) -> CosineSeries:
        """Build a series from e-basis coefficients (v = Σ f_n e_n)."""
        return cls(basis_to_series(f))

    @property
    def size(self) -> int:
        """Truncation order N."""
        return int(self.coefficients.size)

    def basis_coefficients(self) -> np.ndarray:
        """Coefficients in the e-basis, f₀ = a₀/2 and f_m = a_m."""
        return series_to_basis(self.coefficients)

    def evaluate(self, theta: np.ndarray | float) -> np.ndarray:
        """Evaluate the series at arbitrary angles."""
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        modes = np.arange(self.size)
        return np.cos(np.outer(theta, modes)) @ self.basis_coefficients()

    def resized(self, size: int) -> CosineSeries:
        """Truncate or zero-pad to a new order."""
        out = np.zeros(size, dtype=complex)
        keep = min(size, self.size)
        out[:keep] = self.coefficients[:keep]
        return CosineSeries(out)

    def __add__(self, other: CosineSeries) -> CosineSeries:
        if self.size != other.size:
            raise ValueError(f"Size mismatch: {self.size} vs {other.size}")
        return CosineSeries(self.coefficients + other.coefficients)

    def __sub__(self, other: CosineSeries) -> CosineSeries:
        if self.size != other.size:
            raise ValueError(f"Size mismatch: {self.size} vs {other.size}")
        return CosineSeries(self.coefficients - other.coefficients)

    def __mul__(self, scalar: complex) -> CosineSeries:
        return CosineSeries(self.coefficients * scalar)

    __rmul__ = __mul__


@dataclass(frozen=True)
class NodalGrid:
    """Interior cosine grid θ_j = π(2j+1)/(2N), j = 0..N−1.

    The nodes are Chebyshev points of the first kind in t = cos θ, so they
    stay strictly inside (0, π).

    Attributes:
        size: Number of nodes N.
    """

    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"Grid size must be positive, got {self.size}")

    @property
    def nodes(self) -> np.ndarray:
        """Angles θ_j."""
        return np.pi * (2 * np.arange(self.size) + 1) / (2 * self.size)

    @property
    def parameters(self) -> np.ndarray:
        """Arc parameters t_j = cos θ_j."""
        return np.cos(self.nodes)

    @property
    def weight(self) -> float:
        """Midpoint-rule weight π/N."""
        return np.pi / self.size


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense matrix of an operator acting on cosine coefficients.

    Column n holds the e-basis coefficients of the operator applied to
    e_n = cos(nθ). The Sobolev offsets record how many orders the operator
    gains (positive) or loses (negative).

    Attributes:
        entries: Square complex matrix; stored read-only.
        name: Short label used in logs and reports.
        domain_offset: Sobolev index shift of the domain.
        codomain_offset: Sobolev index shift of the codomain.
        band_loss: True when a band coupling past mode N−1 was dropped.
    """

    entries: np.ndarray
    name: str = ""
    domain_offset: int = 0
    codomain_offset: int = 0
    band_loss: bool = False

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f"Operator matrix must be square, got shape {entries.shape}")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def size(self) -> int:
        """Truncation order N."""
        return int(self.entries.shape[0])

    @property
    def order(self) -> int:
        """Net smoothing order (codomain minus domain offset)."""
        return self.codomain_offset - self.domain_offset

    def column(self, n: int) -> np.ndarray:
        """E-basis coefficients of the operator applied to e_n."""
        return np.array(self.entries[:, n])

    def apply(self, series: CosineSeries) -> CosineSeries:
        """Apply the operator to a cosine series of matching order."""
        if series.size != self.size:
            raise ValueError(f"Series of order {series.size} does not match operator of order {self.size}")
        return CosineSeries.from_basis(self.entries @ series.basis_coefficients())

    def inverse(self) -> OperatorMatrix:
        """Dense inverse, with the Sobolev offsets swapped."""
        return OperatorMatrix(
            np.linalg.inv(self.entries),
            name=f"inv({self.name})",
            domain_offset=self.codomain_offset,
            codomain_offset=self.domain_offset,
            band_loss=self.band_loss,
        )

    def __matmul__(self, other: OperatorMatrix) -> OperatorMatrix:
        return OperatorMatrix(
            self.entries @ other.entries,
            name=f"{self.name}{other.name}",
            domain_offset=other.domain_offset,
            codomain_offset=other.domain_offset + other.order + self.order,
            band_loss=self.band_loss or other.band_loss,
        )

    def __add__(self, other: OperatorMatrix) -> OperatorMatrix:
        return OperatorMatrix(
            self.entries + other.entries,
            name=f"({self.name}+{other.name})",
            domain_offset=self.domain_offset,
            codomain_offset=self.codomain_offset,
            band_loss=self.band_loss or other.band_loss,
        )

    def __sub__(self, other: OperatorMatrix) -> OperatorMatrix:
        return OperatorMatrix(
            self.entries - other.entries,
            name=f"({self.name}-{other.name})",
            domain_offset=self.domain_offset,
            codomain_offset=self.codomain_offset,
            band_loss=self.band_loss or other.band_loss,
        )

    @classmethod
    def identity(cls, size: int) -> OperatorMatrix:
        """Identity operator of order ``size``."""
        return cls(np.eye(size, dtype=complex), name="I")
