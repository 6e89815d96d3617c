"""Scattered near and far fields from solved densities."""

from __future__ import annotations

import numpy as np

from arcscatter.errors import DomainError
from arcscatter.models.core import BoundaryCondition, NodalGrid
from arcscatter.models.results import SolveResult
from arcscatter.solver.problem import ScatteringProblem
from arcscatter.spectral.cosine import from_coefficients
from arcscatter.special.kernels import green_function, green_normal_derivative


def exclusion_margin(problem: ScatteringProblem, size: int) -> float:
    """Distance 2π·max τ/(k·N) inside which the midpoint rule is not trusted; k = 0 uses 1."""
    scale = problem.k if problem.k > 0 else 1.0
    return 2 * np.pi * problem.arc.max_speed() / (scale * size)


def _quadrature(result: SolveResult, problem: ScatteringProblem) -> tuple[NodalGrid, np.ndarray, np.ndarray]:
    """Grid, nodal density weighted by (π/N)·τ and the matching sin² factor."""
    size = result.physical_density.size
    grid = NodalGrid(size)
    t = grid.parameters
    weights = grid.weight * problem.arc.speed(t) * from_coefficients(result.physical_density, grid)
    if problem.bc == BoundaryCondition.NEUMANN:
        weights = weights * np.sin(grid.nodes) ** 2
    return grid, t, weights


def evaluate_field(result: SolveResult, problem: ScatteringProblem, points: np.ndarray) -> np.ndarray:
    """Scattered field at off-arc points.

    Dirichlet: u(x) = ∫₀^π G_k(x, r(cosθ'))·φ̃(θ')·τ(cosθ') dθ'.
    Neumann: v(x) = ∫₀^π ∂G_k/∂n'(x, r(cosθ'))·ψ̃(θ')·τ(cosθ')·sin²θ' dθ'.

    Raises:
        DomainError: If a point is within the exclusion margin of the arc.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    grid, t, weights = _quadrature(result, problem)
    margin = exclusion_margin(problem, grid.size)
    distance = problem.arc.distance_to(points)
    if np.any(distance <= margin):
        closest = float(np.min(distance))
        raise DomainError(f"Field point at distance {closest:.3g} from the arc; need more than {margin:.3g}")

    sources = problem.arc.position(t)
    targets = points[:, None, :]
    if problem.bc == BoundaryCondition.DIRICHLET:
        kernel = green_function(problem.k, np.linalg.norm(targets - sources[None, :, :], axis=-1))
    else:
        kernel = green_normal_derivative(problem.k, targets, sources[None, :, :], problem.arc.normal(t)[None, :, :])
    return kernel @ weights


def far_field(result: SolveResult, problem: ScatteringProblem, angles: np.ndarray) -> np.ndarray:
    """Far-field pattern u∞(x̂) with u(R x̂) ≈ e^{ikR}/√R · u∞(x̂).

    G_k is replaced by e^{iπ/4}/√(8πk)·e^{−ik x̂·r'}; the Neumann kernel
    picks up the factor −ik·n'·x̂.

    Raises:
        DomainError: If k = 0, which has no radiating far field.
    """
    if problem.k <= 0:
        raise DomainError("Far-field patterns need a positive wavenumber")
    k = problem.k
    angles = np.atleast_1d(np.asarray(angles, dtype=float))
    directions = np.stack([np.cos(angles), np.sin(angles)], axis=-1)
    _, t, weights = _quadrature(result, problem)
    sources = problem.arc.position(t)
    kernel = np.exp(1j * np.pi / 4) / np.sqrt(8 * np.pi * k) * np.exp(-1j * k * directions @ sources.T)
    if problem.bc == BoundaryCondition.NEUMANN:
        kernel = kernel * (-1j * k * directions @ problem.arc.normal(t).T)
    return kernel @ weights
