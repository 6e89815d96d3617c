"""Cosine series on the interior grid: transforms, change of basis and norms."""

from __future__ import annotations

import numpy as np
from scipy import fft

from arcscatter.models.core import CosineSeries, NodalGrid


def _real_dct(values: np.ndarray, dct_type: int) -> np.ndarray:
    values = np.asarray(values, dtype=complex)
    return fft.dct(values.real, type=dct_type, axis=0) + 1j * fft.dct(values.imag, type=dct_type, axis=0)


def to_coefficients(samples: np.ndarray, grid: NodalGrid | None = None) -> CosineSeries:
    """Cosine coefficients a_m = (2/N)·Σ_j v(θ_j)·cos(mθ_j) of nodal samples.

    Args:
        samples: Values at the N interior nodes.
        grid: Grid the samples live on; inferred from the sample count if omitted.

    Returns:
        The interpolating cosine series of order N.

    Raises:
        ValueError: If the sample count does not match the grid.
    """
    samples = np.asarray(samples, dtype=complex)
    if samples.ndim != 1:
        raise ValueError(f"Expected a 1-D sample array, got shape {samples.shape}")
    if grid is not None and samples.size != grid.size:
        raise ValueError(f"Got {samples.size} samples for a grid of {grid.size} nodes")
    return CosineSeries(_real_dct(samples, 2) / samples.size)


def from_coefficients(series: CosineSeries, grid: NodalGrid | None = None) -> np.ndarray:
    """Nodal values of a cosine series on the interior grid.

    Series shorter than the grid are zero-padded; longer ones are truncated.
    """
    size = series.size if grid is None else grid.size
    coefficients = series.resized(size).coefficients
    return _real_dct(coefficients, 3) / 2


def synthesis_matrix(size: int) -> np.ndarray:
    """Matrix C with C[j, n] = cos(nθ_j), mapping e-basis coefficients to nodal values."""
    grid = NodalGrid(size)
    return np.cos(np.outer(grid.nodes, np.arange(size)))


def analysis_matrix(size: int) -> np.ndarray:
    """Inverse of :func:`synthesis_matrix`: f_n = ((2 − δ_n0)/N)·Σ_j cos(nθ_j)·v_j."""
    weights = np.full(size, 2.0 / size)
    weights[0] = 1.0 / size
    return weights[:, None] * synthesis_matrix(size).T


def to_coefficients_direct(samples: np.ndarray) -> CosineSeries:
    """O(N²) reference version of :func:`to_coefficients`."""
    samples = np.asarray(samples, dtype=complex)
    return CosineSeries.from_basis(analysis_matrix(samples.size) @ samples)


def from_coefficients_direct(series: CosineSeries) -> np.ndarray:
    """O(N²) reference version of :func:`from_coefficients`."""
    return synthesis_matrix(series.size) @ series.basis_coefficients()


def multiplication_matrix(values: np.ndarray) -> np.ndarray:
    """Coefficient-space matrix of multiplication by a function sampled at the nodes."""
    values = np.asarray(values)
    size = values.size
    return analysis_matrix(size) @ (values[:, None] * synthesis_matrix(size))


def sobolev_norm(series: CosineSeries, s: float) -> float:
    """H^s_e(2π) norm, (|a₀|² + 2·Σ_{m≥1} m^{2s}|a_m|²)^{1/2}.

    Raises:
        ValueError: If s is negative.
    """
    if s < 0:
        raise ValueError(f"Sobolev index must be non-negative, got {s}")
    a = series.coefficients
    modes = np.arange(1, series.size, dtype=float)
    total = abs(a[0]) ** 2 + 2 * np.sum(modes ** (2 * s) * np.abs(a[1:]) ** 2)
    return float(np.sqrt(total))


def sequence_norm(coefficients: np.ndarray, s: float = 0.0) -> float:
    """h^s norm of an e-basis coefficient sequence, weights (1 + n)^s."""
    f = np.asarray(coefficients)
    weights = (1.0 + np.arange(f.size)) ** s
    return float(np.linalg.norm(weights * f))
