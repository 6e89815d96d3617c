"""Second-kind and first-kind solves of the open-arc scattering problems."""

from __future__ import annotations

import logging

import numpy as np

from arcscatter.errors import ConvergenceError, DomainError
from arcscatter.models.core import BoundaryCondition, CosineSeries, Formulation
from arcscatter.models.results import SolveResult
from arcscatter.operators.assembly import assemble_N, assemble_S
from arcscatter.solver.krylov import LinearSolution, direct_solve, gmres_solve
from arcscatter.solver.problem import ScatteringProblem, boundary_data
from arcscatter.spectral.cosine import sequence_norm

logger = logging.getLogger(__name__)

MIN_TOL = 1e-14
MAX_TOL = 1e-2
METHODS = ("gmres", "direct")


def _validate(problem: ScatteringProblem, formulation: Formulation, tol: float, method: str) -> None:
    if not MIN_TOL < tol < MAX_TOL:
        raise DomainError(f"Tolerance must lie in ({MIN_TOL}, {MAX_TOL}), got {tol}")
    if method not in METHODS:
        raise DomainError(f"Unknown solver method {method!r}; expected one of {METHODS}")
    if formulation == Formulation.FIRST_KIND_S and problem.bc != BoundaryCondition.DIRICHLET:
        raise DomainError("The first-kind S formulation solves Dirichlet problems only")
    if formulation == Formulation.FIRST_KIND_N and problem.bc != BoundaryCondition.NEUMANN:
        raise DomainError("The first-kind N formulation solves Neumann problems only")


def system_matrices(problem: ScatteringProblem, formulation: Formulation) -> tuple[np.ndarray, np.ndarray | None, np.ndarray | None]:
    """System matrix of the chosen formulation together with S̃ and Ñ when assembled.

    Returns:
        Tuple of (system, S̃ entries or None, Ñ entries or None).
    """
    s_entries = n_entries = None
    if formulation in (Formulation.SECOND_KIND_NS, Formulation.FIRST_KIND_S):
        s_entries = assemble_S(problem.arc, problem.k, problem.size).matrix.entries
    if formulation in (Formulation.SECOND_KIND_NS, Formulation.FIRST_KIND_N):
        n_entries = assemble_N(problem.arc, problem.k, problem.size).matrix.entries

    if formulation == Formulation.SECOND_KIND_NS:
        system = n_entries @ s_entries
    elif formulation == Formulation.FIRST_KIND_S:
        system = s_entries
    else:
        system = n_entries
    return system, s_entries, n_entries


def solve(
    problem: ScatteringProblem,
    formulation: Formulation | str = Formulation.SECOND_KIND_NS,
    tol: float = 1e-10,
    max_iter: int | None = None,
    method: str = "gmres",
    data: CosineSeries | None = None,
) -> SolveResult:
    """Solve for the weighted density of a scattering problem.

    Second kind, Neumann: ÑS̃φ̃ = g̃ and ψ̃ = S̃φ̃. Second kind, Dirichlet:
    ÑS̃φ̃ = Ñf̃, which also satisfies S̃φ̃ = f̃ since Ñ is injective. The
    first-kind baselines solve S̃φ̃ = f̃ and Ñψ̃ = g̃.

    Args:
        problem: The scattering problem.
        formulation: Which integral equation to solve.
        tol: Relative residual tolerance in (1e−14, 1e−2).
        max_iter: Largest GMRES Krylov dimension; defaults to N.
        method: "gmres" or "direct" (dense LU).
        data: Boundary data overriding the incident field's.

    Returns:
        SolveResult with density, physical density and residual history.

    Raises:
        DomainError: For invalid tolerances, methods or formulation/boundary pairs.
        ConvergenceError: If GMRES stops before reaching ``tol``.
    """
    formulation = Formulation(formulation)
    _validate(problem, formulation, tol, method)
    max_iter = problem.size if max_iter is None else max_iter
    if max_iter < 1:
        raise DomainError(f"max_iter must be positive, got {max_iter}")

    rhs_series = boundary_data(problem) if data is None else data.resized(problem.size)
    boundary = rhs_series.basis_coefficients()
    system, s_entries, n_entries = system_matrices(problem, formulation)
    rhs = n_entries @ boundary if formulation == Formulation.SECOND_KIND_NS and problem.bc == BoundaryCondition.DIRICHLET else boundary

    if not np.any(rhs):
        logger.info("Boundary data vanishes; returning the zero density")
        zero = CosineSeries.zeros(problem.size)
        return SolveResult(density=zero, physical_density=zero, iterations=0, formulation=formulation, method=method)

    if method == "direct":
        solution: LinearSolution = direct_solve(system, rhs)
    else:
        solution = gmres_solve(system, rhs, tol, max_iter)

    density = CosineSeries.from_basis(solution.x)
    physical = density
    if formulation == Formulation.SECOND_KIND_NS and problem.bc == BoundaryCondition.NEUMANN:
        physical = CosineSeries.from_basis(s_entries @ solution.x)

    result = SolveResult(
        density=density,
        physical_density=physical,
        iterations=solution.iterations,
        residual_history=solution.residual_history,
        formulation=formulation,
        converged=solution.converged,
        method=method,
    )
    if formulation == Formulation.SECOND_KIND_NS and problem.bc == BoundaryCondition.DIRICHLET:
        mismatch = s_entries @ solution.x - boundary
        result.boundary_residual = sequence_norm(mismatch) / sequence_norm(boundary)

    if not solution.converged:
        logger.warning(f"GMRES did not reach tol={tol} within {max_iter} iterations")
        raise ConvergenceError(f"GMRES did not converge within {max_iter} iterations (residual {result.final_residual:.3e})", result)

    logger.info(
        f"Solved {formulation.value} ({problem.bc.value}) on {problem.arc.label}, "
        f"k={problem.k}, N={problem.size}: {result.iterations} iterations"
    )
    return result
