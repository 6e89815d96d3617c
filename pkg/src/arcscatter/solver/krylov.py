"""Dense linear solvers: full GMRES with residual recording, and LU."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy import linalg
from scipy.sparse.linalg import gmres

logger = logging.getLogger(__name__)


@dataclass
class ResidualCounter:
    """GMRES callback that records the relative residual of every iteration.

    Attributes:
        residuals: Relative residual norms in iteration order.
    """

    residuals: list[float] = field(default_factory=list)

    @property
    def count(self) -> int:
        """Number of iterations seen."""
        return len(self.residuals)

    def __call__(self, residual: float) -> None:
        self.residuals.append(float(residual))


@dataclass(frozen=True)
class LinearSolution:
    """Solution of a dense linear system.

    Attributes:
        x: The computed solution.
        iterations: Krylov iterations, 0 for LU.
        residual_history: Relative residuals per iteration, or the single LU residual.
        converged: Whether the tolerance was reached.
    """

    x: np.ndarray
    iterations: int
    residual_history: list[float]
    converged: bool


def relative_residual(matrix: np.ndarray, x: np.ndarray, rhs: np.ndarray) -> float:
    """‖Ax − b‖/‖b‖."""
    return float(np.linalg.norm(matrix @ x - rhs) / np.linalg.norm(rhs))


def gmres_solve(matrix: np.ndarray, rhs: np.ndarray, tol: float, max_iter: int) -> LinearSolution:
    """Full GMRES: a single cycle with restart length ``max_iter``.

    Args:
        matrix: Dense square system matrix.
        rhs: Non-zero right-hand side.
        tol: Relative residual tolerance.
        max_iter: Largest Krylov dimension.

    Returns:
        LinearSolution with one residual entry per iteration.
    """
    counter = ResidualCounter()
    x, info = gmres(
        matrix,
        rhs,
        rtol=tol,
        atol=0.0,
        restart=max_iter,
        maxiter=1,
        callback=counter,
        callback_type="pr_norm",
    )
    converged = info == 0
    logger.debug(f"GMRES finished after {counter.count} iterations (info={info})")
    return LinearSolution(x=np.asarray(x, dtype=complex), iterations=counter.count, residual_history=counter.residuals, converged=converged)


def direct_solve(matrix: np.ndarray, rhs: np.ndarray) -> LinearSolution:
    """Dense LU solve with partial pivoting."""
    factors = linalg.lu_factor(matrix)
    x = linalg.lu_solve(factors, rhs)
    residual = relative_residual(matrix, x, rhs)
    logger.debug(f"LU solve residual {residual:.3e}")
    return LinearSolution(x=x, iterations=0, residual_history=[residual], converged=True)
