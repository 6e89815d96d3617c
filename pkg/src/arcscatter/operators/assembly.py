"""Assembly of the weighted single-layer and hypersingular operators S̃ and Ñ.

S̃[γ](θ) = ∫₀^π G_k(r(cosθ), r(cosθ'))·γ(θ')·τ(cosθ') dθ'. The kernel is
split as A₁·ln|cosθ − cosθ'| + A₂; the logarithmic part is integrated
exactly through the diagonal form of S̃₀ and the smooth part by the
midpoint rule on the interior grid.

Ñ = Ñ^g + Ñ^pv, where Ñ^g has kernel k²·G_k·(n·n')·sin²θ' and
Ñ^pv = (1/τ)·D̃₀·S̃·(1/τ)·T̃₀ never touches a hypersingular integral.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np

from arcscatter.errors import DomainError
from arcscatter.models.core import NodalGrid, OperatorKind, OperatorMatrix
from arcscatter.models.results import AssembledOperator
from arcscatter.operators.canonical import d0_entries, symm_diagonal, t0_entries
from arcscatter.spectral.cosine import analysis_matrix, multiplication_matrix, synthesis_matrix
from arcscatter.special.kernels import split_kernel

if TYPE_CHECKING:
    from arcscatter.geometry.arcs import Arc

logger = logging.getLogger(__name__)

MIN_SIZE = 8


def _check(k: float, size: int) -> None:
    if k < 0:
        raise DomainError(f"Wavenumber must be non-negative, got {k}")
    if size < MIN_SIZE:
        raise DomainError(f"Resolution must be at least {MIN_SIZE}, got {size}")


def nodal_symm(size: int) -> np.ndarray:
    """S̃₀ acting on nodal values: C·diag(λ)·C⁻¹."""
    return synthesis_matrix(size) @ (symm_diagonal(size)[:, None] * analysis_matrix(size))


def _weighted_nodal(arc: Arc, k: float, size: int, factor: np.ndarray | None) -> np.ndarray:
    """Nodal matrix of ∫ G_k·factor·γ·τ' dθ' on the interior grid."""
    grid = NodalGrid(size)
    t = grid.parameters
    speed = arc.speed(t)
    log_coefficient, smooth = split_kernel(arc, k, t[:, None], t[None, :])
    if factor is not None:
        log_coefficient = log_coefficient * factor
        smooth = smooth * factor
    log_part = -2 * np.pi * nodal_symm(size) * log_coefficient
    smooth_part = grid.weight * smooth
    return (log_part + smooth_part) * speed[None, :]


def single_layer_nodal(arc: Arc, k: float, size: int) -> np.ndarray:
    """S̃ as a map between nodal values on the interior grid."""
    _check(k, size)
    return _weighted_nodal(arc, k, size, None)


def _to_coefficient_space(nodal: np.ndarray) -> np.ndarray:
    size = nodal.shape[0]
    return analysis_matrix(size) @ nodal @ synthesis_matrix(size)


def assemble_S(arc: Arc, k: float, size: int) -> AssembledOperator:
    """Assemble S̃ in the cosine basis.

    Args:
        arc: Scattering arc.
        k: Non-negative wavenumber.
        size: Resolution N, at least 8.

    Returns:
        The assembled single-layer operator.
    """
    _check(k, size)
    entries = _to_coefficient_space(_weighted_nodal(arc, k, size, None))
    logger.debug(f"Assembled S on {arc.label} at k={k}, N={size}")
    return AssembledOperator(
        matrix=OperatorMatrix(entries, name="S", codomain_offset=1),
        arc=arc,
        k=k,
        kind=OperatorKind.S_TILDE,
        size=size,
    )


def assemble_N_parts(arc: Arc, k: float, size: int) -> tuple[AssembledOperator, AssembledOperator]:
    """Assemble the two parts Ñ^g and Ñ^pv of the hypersingular operator.

    Returns:
        Tuple of (Ñ^g, Ñ^pv).
    """
    _check(k, size)
    grid = NodalGrid(size)
    t = grid.parameters

    if k == 0:
        ng_entries = np.zeros((size, size), dtype=complex)
    else:
        normals = arc.normal(t)
        factor = k**2 * (normals @ normals.T) * np.sin(grid.nodes)[None, :] ** 2
        ng_entries = _to_coefficient_space(_weighted_nodal(arc, k, size, factor))

    # T̃₀ raises the degree by one; route it through N+1 modes so D̃₀ sees every coupling.
    padded = size + 1
    s_padded = _to_coefficient_space(_weighted_nodal(arc, k, padded, None))
    inv_speed_out = multiplication_matrix(1.0 / arc.speed(t))
    inv_speed_in = multiplication_matrix(1.0 / arc.speed(NodalGrid(padded).parameters))
    npv_entries = (
        inv_speed_out @ d0_entries(size, padded) @ s_padded @ inv_speed_in @ t0_entries(padded, size)
    )
    logger.debug(f"Assembled N parts on {arc.label} at k={k}, N={size}")

    ng = AssembledOperator(
        matrix=OperatorMatrix(ng_entries, name="Ng", codomain_offset=1),
        arc=arc,
        k=k,
        kind=OperatorKind.NG_PART,
        size=size,
    )
    npv = AssembledOperator(
        matrix=OperatorMatrix(npv_entries, name="Npv", codomain_offset=-1),
        arc=arc,
        k=k,
        kind=OperatorKind.NPV_PART,
        size=size,
    )
    return ng, npv


def assemble_N(arc: Arc, k: float, size: int) -> AssembledOperator:
    """Assemble Ñ = Ñ^g + Ñ^pv in the cosine basis."""
    ng, npv = assemble_N_parts(arc, k, size)
    return AssembledOperator(
        matrix=OperatorMatrix(ng.matrix.entries + npv.matrix.entries, name="N", codomain_offset=-1),
        arc=arc,
        k=k,
        kind=OperatorKind.N_TILDE,
        size=size,
    )
