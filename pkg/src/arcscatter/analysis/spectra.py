"""Eigenvalue statistics and the generalized Calderón structure ÑS̃ = J̃₀^τ + K̃."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy import linalg

from arcscatter.errors import DomainError, EigensolverError
from arcscatter.models.core import OperatorMatrix
from arcscatter.models.results import SpectrumReport
from arcscatter.operators.assembly import assemble_N, assemble_S
from arcscatter.operators.canonical import ConjugationKind, j0_product, n0_matrix, symm_matrix, tau_conjugated

if TYPE_CHECKING:
    from arcscatter.geometry.arcs import Arc

logger = logging.getLogger(__name__)

MAX_SIZE = 4096
CLUSTER_CENTER = -0.25
QUANTILES = (0.5, 0.8, 0.9, 1.0)
RANK_CUTOFF = 1e-6


@dataclass(frozen=True)
class CalderonParts:
    """Truncated operators of the identity ÑS̃ = J̃₀^τ + K̃.

    Attributes:
        product: ÑS̃.
        principal: J̃₀^τ = Z̃₀⁻¹J̃₀Z̃₀.
        remainder: K̃ = ÑS̃ − J̃₀^τ.
    """

    product: OperatorMatrix
    principal: OperatorMatrix
    remainder: OperatorMatrix


def _entries(op: OperatorMatrix | np.ndarray) -> tuple[str, np.ndarray]:
    if isinstance(op, OperatorMatrix):
        return op.name, op.entries
    matrix = np.asarray(op, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {matrix.shape}")
    return "matrix", matrix


def sort_eigenvalues(values: np.ndarray) -> np.ndarray:
    """Sort by real part, then imaginary part."""
    values = np.asarray(values, dtype=complex)
    return values[np.lexsort((values.imag, values.real))]


def cluster_fraction(eigenvalues: np.ndarray, center: complex = CLUSTER_CENTER, radius: float = 0.15) -> float:
    """Fraction of eigenvalues within ``radius`` of ``center``."""
    eigenvalues = np.asarray(eigenvalues)
    if eigenvalues.size == 0:
        return 0.0
    return float(np.mean(np.abs(eigenvalues - center) <= radius))


def spectrum(op: OperatorMatrix | np.ndarray, k: float | None = None, center: complex = CLUSTER_CENTER) -> SpectrumReport:
    """Eigenvalues of a truncated operator with clustering statistics.

    Raises:
        DomainError: If the matrix is larger than 4096.
        EigensolverError: If LAPACK fails to converge.
    """
    name, matrix = _entries(op)
    if matrix.shape[0] > MAX_SIZE:
        raise DomainError(f"Dense eigensolve limited to N <= {MAX_SIZE}, got {matrix.shape[0]}")
    try:
        values = linalg.eigvals(matrix)
    except (linalg.LinAlgError, ValueError) as e:
        raise EigensolverError(f"Eigensolve of {name} failed: {e}") from e

    values = sort_eigenvalues(values)
    moduli = np.abs(values)
    distances = np.abs(values - center)
    logger.debug(f"Spectrum of {name} (N={matrix.shape[0]}): |lambda| in [{moduli.min():.4g}, {moduli.max():.4g}]")
    return SpectrumReport(
        name=name,
        size=matrix.shape[0],
        eigenvalues=values,
        min_abs=float(moduli.min()),
        max_abs=float(moduli.max()),
        k=k,
        cluster_center=center,
        cluster_radius_quantiles=np.quantile(distances, QUANTILES),
    )


def eigenpair_residual(op: OperatorMatrix | np.ndarray, samples: int = 8, seed: int = 0) -> float:
    """Largest ‖Av − λv‖/(‖A‖·‖v‖) over a random sample of eigenpairs."""
    _, matrix = _entries(op)
    try:
        values, vectors = linalg.eig(matrix)
    except (linalg.LinAlgError, ValueError) as e:
        raise EigensolverError(f"Eigensolve failed: {e}") from e
    rng = np.random.default_rng(seed)
    picks = rng.choice(values.size, size=min(samples, values.size), replace=False)
    scale = np.linalg.norm(matrix, 2)
    worst = 0.0
    for i in picks:
        v = vectors[:, i]
        worst = max(worst, float(np.linalg.norm(matrix @ v - values[i] * v) / (scale * np.linalg.norm(v))))
    return worst


def numerical_rank(singular_values: np.ndarray, cutoff: float = RANK_CUTOFF) -> int | None:
    """First index j with σ_j < cutoff·σ₀, or None if there is none."""
    if singular_values.size == 0 or singular_values[0] == 0:
        return 0
    below = np.nonzero(singular_values < cutoff * singular_values[0])[0]
    return int(below[0]) if below.size else None


def calderon_product(arc: Arc, k: float, size: int) -> OperatorMatrix:
    """ÑS̃ assembled at resolution N."""
    s = assemble_S(arc, k, size).matrix
    n = assemble_N(arc, k, size).matrix
    return OperatorMatrix(n.entries @ s.entries, name="NS")


def j0_tau(arc: Arc, size: int) -> OperatorMatrix:
    """J̃₀^τ = Z̃₀⁻¹J̃₀Z̃₀."""
    return tau_conjugated(j0_product(size), arc, ConjugationKind.J0_TAU)


def remainder_matrix(arc: Arc, k: float, size: int) -> CalderonParts:
    """ÑS̃, J̃₀^τ and K̃ = ÑS̃ − J̃₀^τ."""
    product = calderon_product(arc, k, size)
    principal = j0_tau(arc, size)
    remainder = OperatorMatrix(product.entries - principal.entries, name="K")
    return CalderonParts(product=product, principal=principal, remainder=remainder)


def calderon_remainder_split(arc: Arc, k: float, size: int) -> OperatorMatrix:
    """K̃ = Ñ(S̃ − S̃₀^τ) + (Ñ − Ñ₀^τ)S̃₀^τ, assembled term by term."""
    s = assemble_S(arc, k, size).matrix.entries
    n = assemble_N(arc, k, size).matrix.entries
    s0_tau = tau_conjugated(symm_matrix(size), arc, ConjugationKind.S0_TAU).entries
    n0_tau = tau_conjugated(n0_matrix(size), arc, ConjugationKind.N0_TAU).entries
    return OperatorMatrix(n @ (s - s0_tau) + (n - n0_tau) @ s0_tau, name="K")


def calderon_remainder(arc: Arc, k: float, size: int) -> SpectrumReport:
    """Spectrum of ÑS̃ together with the singular values of K̃.

    Returns:
        SpectrumReport of ÑS̃ whose ``singular_values`` and
        ``numerical_rank`` describe K̃.
    """
    parts = remainder_matrix(arc, k, size)
    report = spectrum(parts.product, k=k)
    try:
        sigma = linalg.svdvals(parts.remainder.entries)
    except (linalg.LinAlgError, ValueError) as e:
        raise EigensolverError(f"Singular values of K failed: {e}") from e
    report.singular_values = sigma
    report.numerical_rank = numerical_rank(sigma)
    logger.info(
        f"Calderon remainder on {arc.label}, k={k}, N={size}: "
        f"sigma_0={sigma[0]:.3e}, rank={report.numerical_rank}"
    )
    return report
