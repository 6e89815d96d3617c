"""Scattering problem definition and boundary data."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from arcscatter.errors import DomainError
from arcscatter.geometry.arcs import Arc
from arcscatter.models.core import BoundaryCondition, CosineSeries, NodalGrid
from arcscatter.operators.assembly import MIN_SIZE
from arcscatter.spectral.cosine import to_coefficients


@dataclass(frozen=True)
class PlaneWave:
    """Incident plane wave u_inc(x) = amplitude·exp(ik d·x).

    Attributes:
        direction: Unit propagation direction d.
        amplitude: Complex amplitude; zero gives a vanishing incident field.
    """

    direction: tuple[float, float] = (1.0, 0.0)
    amplitude: complex = 1.0

    def __post_init__(self) -> None:
        norm = math.hypot(*self.direction)
        if abs(norm - 1.0) > 1e-12:
            raise DomainError(f"Plane wave direction must be a unit vector, got norm {norm}")

    @classmethod
    def from_angle(cls, angle: float, amplitude: complex = 1.0) -> PlaneWave:
        """Plane wave travelling at ``angle`` radians from the x axis."""
        return cls((math.cos(angle), math.sin(angle)), amplitude)

    def value(self, k: float, points: np.ndarray) -> np.ndarray:
        """u_inc at points of shape (..., 2)."""
        phase = np.asarray(points, dtype=float) @ np.asarray(self.direction)
        return self.amplitude * np.exp(1j * k * phase)

    def normal_derivative(self, k: float, points: np.ndarray, normals: np.ndarray) -> np.ndarray:
        """∂u_inc/∂n = ik(d·n)·u_inc."""
        projection = np.asarray(normals, dtype=float) @ np.asarray(self.direction)
        return 1j * k * projection * self.value(k, points)


@dataclass(frozen=True)
class ScatteringProblem:
    """Sound-soft (Dirichlet) or sound-hard (Neumann) scattering by an open arc.

    Attributes:
        arc: The scattering arc Γ.
        k: Wavenumber; 0 selects the Laplace limit.
        bc: Boundary condition on Γ.
        incident: Incident field.
        size: Resolution N of the cosine discretization.
    """

    arc: Arc
    k: float
    bc: BoundaryCondition = BoundaryCondition.DIRICHLET
    incident: PlaneWave = PlaneWave()
    size: int = 64

    def __post_init__(self) -> None:
        if not np.isfinite(self.k) or self.k < 0:
            raise DomainError(f"Wavenumber must be finite and non-negative, got {self.k}")
        if self.size < MIN_SIZE:
            raise DomainError(f"Resolution must be at least {MIN_SIZE}, got {self.size}")
        object.__setattr__(self, "bc", BoundaryCondition(self.bc))

    @property
    def grid(self) -> NodalGrid:
        """Interior grid of the discretization."""
        return NodalGrid(self.size)


def boundary_data(problem: ScatteringProblem) -> CosineSeries:
    """Cosine coefficients of the boundary data f̃ or g̃.

    Dirichlet data is f̃(θ) = −u_inc(r(cosθ)); Neumann data is
    g̃(θ) = −∂u_inc/∂n(r(cosθ)).
    """
    t = problem.grid.parameters
    points = problem.arc.position(t)
    if problem.bc == BoundaryCondition.DIRICHLET:
        samples = -problem.incident.value(problem.k, points)
    else:
        samples = -problem.incident.normal_derivative(problem.k, points, problem.arc.normal(t))
    return to_coefficients(samples, problem.grid)
