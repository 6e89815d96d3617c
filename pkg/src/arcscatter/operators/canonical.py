"""Zero-frequency flat-arc operators in the cosine basis.

Every matrix here acts on e-basis coefficients (v = Σ f_n cos nθ) and its
column n is the exact expansion of the operator applied to e_n. Operators
that raise the degree (T̃₀) and are followed by one that lowers it (D̃₀, C̃)
are composed through an (N+1)-mode intermediate space so that no band
coupling is lost.
"""

from __future__ import annotations

from enum import Enum
from typing import TYPE_CHECKING, Callable

import numpy as np
from scipy import integrate

from arcscatter.errors import DomainError
from arcscatter.models.core import CosineSeries, NodalGrid, OperatorMatrix
from arcscatter.spectral.cosine import multiplication_matrix

if TYPE_CHECKING:
    from arcscatter.geometry.arcs import Arc

LN2 = float(np.log(2.0))


class ConjugationKind(str, Enum):
    """Which τ-conjugated variant to build."""

    S0_TAU = "S0tau"
    N0_TAU = "N0tau"
    J0_TAU = "J0tau"


def _require_size(size: int, minimum: int = 2) -> None:
    if size < minimum:
        raise DomainError(f"Truncation order must be at least {minimum}, got {size}")


def symm_diagonal(size: int) -> np.ndarray:
    """Eigenvalues of Symm's operator: ln2/2 for n = 0 and 1/(2n) otherwise."""
    diag = np.empty(size)
    diag[0] = LN2 / 2
    diag[1:] = 1.0 / (2.0 * np.arange(1, size))
    return diag


def sine_ratio_expansion(m: int, rows: int) -> np.ndarray:
    """E-basis coefficients of sin((m+1)θ)/sinθ, truncated to ``rows`` modes."""
    column = np.zeros(rows)
    if m % 2 == 0:
        modes = np.arange(0, m + 1, 2)
        weights = np.where(modes == 0, 1.0, 2.0)
    else:
        modes = np.arange(1, m + 1, 2)
        weights = np.full(modes.size, 2.0)
    keep = modes < rows
    column[modes[keep]] = weights[keep]
    return column


def t0_entries(rows: int, cols: int) -> np.ndarray:
    """T̃₀[e_n] = (1+n)/2·e_{n+1} + (1−n)/2·e_{n−1}, with T̃₀[e₀] = e₁."""
    out = np.zeros((rows, cols))
    for n in range(cols):
        if n == 0:
            if rows > 1:
                out[1, 0] = 1.0
            continue
        if n + 1 < rows:
            out[n + 1, n] = (1 + n) / 2
        if n - 1 < rows:
            out[n - 1, n] = (1 - n) / 2
    return out


def d0_entries(rows: int, cols: int) -> np.ndarray:
    """D̃₀[e_n] = −n·sin(nθ)/sinθ."""
    out = np.zeros((rows, cols))
    for n in range(1, cols):
        out[:, n] = -n * sine_ratio_expansion(n - 1, rows)
    return out


def cesaro_entries(rows: int, cols: int) -> np.ndarray:
    """C̃[e₀] = 0 and C̃[e_n] = sin(nθ)/(n·sinθ)."""
    out = np.zeros((rows, cols))
    for n in range(1, cols):
        out[:, n] = sine_ratio_expansion(n - 1, rows) / n
    return out


def symm_matrix(size: int) -> OperatorMatrix:
    """S̃₀, diagonal in the cosine basis."""
    _require_size(size)
    return OperatorMatrix(np.diag(symm_diagonal(size)), name="S0", codomain_offset=1)


def t0_matrix(size: int) -> OperatorMatrix:
    """T̃₀[γ] = d/dθ(γ sinθ); the e_N overflow of the last column is dropped."""
    _require_size(size)
    return OperatorMatrix(t0_entries(size, size), name="T0", codomain_offset=-1, band_loss=True)


def d0_matrix(size: int) -> OperatorMatrix:
    """D̃₀[γ] = (1/sinθ)·dγ/dθ."""
    _require_size(size)
    return OperatorMatrix(d0_entries(size, size), name="D0", codomain_offset=-2)


def cesaro_matrix(size: int) -> OperatorMatrix:
    """The periodic Cesàro operator C̃."""
    _require_size(size)
    return OperatorMatrix(cesaro_entries(size, size), name="C")


def n0_matrix(size: int) -> OperatorMatrix:
    """Ñ₀ = D̃₀S̃₀T̃₀, exact on all N columns."""
    _require_size(size)
    padded = size + 1
    entries = d0_entries(size, padded) @ np.diag(symm_diagonal(padded)) @ t0_entries(padded, size)
    return OperatorMatrix(entries, name="N0", codomain_offset=-1)


def j0_product(size: int) -> OperatorMatrix:
    """J̃₀ as the product D̃₀S̃₀T̃₀S̃₀."""
    _require_size(size)
    padded = size + 1
    entries = (
        d0_entries(size, padded)
        @ np.diag(symm_diagonal(padded))
        @ t0_entries(padded, size)
        @ np.diag(symm_diagonal(size))
    )
    return OperatorMatrix(entries, name="D0S0T0S0")


def lambda_infinity(n: int) -> float:
    """Discrete eigenvalues λ₀ = −ln2/4 and λ_n = −1/4 − 1/(4n)."""
    if n < 0:
        raise DomainError(f"Eigenvalue index must be non-negative, got {n}")
    if n == 0:
        return -LN2 / 4
    return -0.25 - 0.25 / n


def j0_closed_form(size: int) -> OperatorMatrix:
    """J̃₀ as an explicit upper-triangular matrix.

    The diagonal holds λ_n. Above it, an even column n = 2p carries
    −(1/2n)(1 − δ_{0k}/2) in rows 2k, k < p, and an odd column n = 2p+1
    carries −1/(2n) in rows 2k+1, k < p.
    """
    _require_size(size)
    entries = np.zeros((size, size))
    for n in range(size):
        entries[n, n] = lambda_infinity(n)
        if n == 0:
            continue
        rows = np.arange(n % 2, n, 2)
        fill = np.full(rows.size, -1.0 / (2 * n))
        if n % 2 == 0:
            fill[rows == 0] /= 2
        entries[rows, n] = fill
    return OperatorMatrix(entries, name="J0")


def multiply_by_cosine(f: np.ndarray) -> np.ndarray:
    """E-basis coefficients of cosθ·v, returned with one extra mode."""
    out = np.zeros(f.size + 1, dtype=complex)
    out[1] += f[0]
    out[2:] += f[1:] / 2
    out[: f.size - 1] += f[1:] / 2
    return out


def w0_apply(series: CosineSeries) -> CosineSeries:
    """W̃₀[φ] = −φ/4 − (cosθ/4)·C̃[φ] + ((1−ln2)/(4π))·∫₀^π φ dθ."""
    f = series.basis_coefficients()
    averaged = cesaro_entries(series.size, series.size) @ f
    shifted = multiply_by_cosine(averaged)[: series.size]
    result = -f / 4 - shifted / 4
    # ∫₀^π φ dθ = π·f₀
    result[0] += (1 - LN2) / 4 * f[0]
    return CosineSeries.from_basis(result)


def j0_inverse(size: int) -> OperatorMatrix:
    """Ĩ₀ = −4·S̃₀⁻¹C̃S̃₀T̃₀, upper triangular and exact on all N columns."""
    _require_size(size, minimum=4)
    padded = size + 1
    entries = (
        -4.0
        * np.diag(1.0 / symm_diagonal(size))
        @ cesaro_entries(size, padded)
        @ np.diag(symm_diagonal(padded))
        @ t0_entries(padded, size)
    )
    return OperatorMatrix(entries, name="I0")


def _speed_at_nodes(arc: Arc, size: int) -> np.ndarray:
    speed = arc.speed(NodalGrid(size).parameters)
    if not np.all(speed > 0):
        raise DomainError(f"Arc {arc.label} has non-positive speed at the nodes")
    return speed


def multiplication_operator(arc: Arc, ell: int, size: int) -> OperatorMatrix:
    """Z̃_ℓ, multiplication by cos^ℓθ·τ(cosθ) in coefficient space."""
    grid = NodalGrid(size)
    values = np.cos(grid.nodes) ** ell * _speed_at_nodes(arc, size)
    return OperatorMatrix(multiplication_matrix(values), name=f"Z{ell}")


def inverse_speed_operator(arc: Arc, size: int) -> OperatorMatrix:
    """Z̃₀⁻¹, multiplication by 1/τ(cosθ) in coefficient space."""
    values = 1.0 / _speed_at_nodes(arc, size)
    return OperatorMatrix(multiplication_matrix(values), name="Zinv")


def tau_conjugated(op: OperatorMatrix, arc: Arc, kind: ConjugationKind | str, size: int | None = None) -> OperatorMatrix:
    """Arc-adapted versions of the canonical operators.

    Args:
        op: S̃₀, Ñ₀ or J̃₀ at truncation N.
        arc: Arc supplying τ.
        kind: S0tau gives S̃₀Z̃₀, N0tau gives Z̃₀⁻¹Ñ₀, J0tau gives Z̃₀⁻¹J̃₀Z̃₀.
        size: Truncation order; defaults to the operator's.

    Returns:
        The conjugated operator.
    """
    kind = ConjugationKind(kind)
    size = op.size if size is None else size
    if size != op.size:
        raise ValueError(f"Operator of order {op.size} cannot be conjugated at order {size}")
    z0 = multiplication_operator(arc, 0, size)
    z0_inv = inverse_speed_operator(arc, size)
    if kind == ConjugationKind.S0_TAU:
        result = op @ z0
    elif kind == ConjugationKind.N0_TAU:
        result = z0_inv @ op
    else:
        result = z0_inv @ op @ z0
    return OperatorMatrix(
        result.entries,
        name=f"{op.name}tau",
        domain_offset=op.domain_offset,
        codomain_offset=op.codomain_offset,
        band_loss=op.band_loss,
    )


def discrete_cesaro(g: np.ndarray) -> np.ndarray:
    """C[g](n) = (1/(n+1))·Σ_{k≤n} g_k."""
    g = np.asarray(g)
    return np.cumsum(g) / np.arange(1, g.size + 1)


def discrete_cesaro_adjoint(g: np.ndarray) -> np.ndarray:
    """C*[g](k) = Σ_{p≥k} g_p/(p+1)."""
    g = np.asarray(g)
    scaled = g / np.arange(1, g.size + 1)
    return np.cumsum(scaled[::-1])[::-1]


def d0_even_via_cesaro(f: np.ndarray) -> np.ndarray:
    """D̃₀ applied to the even modes of f, through the discrete Cesàro adjoint.

    With g_p = 2p(p+1)·f_{2p}, D̃₀[Σ f_{2p}e_{2p}] = −2·Σ_{k≥1} C*[g](k)·e_{2k−1}.
    """
    f = np.asarray(f, dtype=complex)
    even = f[::2]
    p = np.arange(even.size)
    tail = discrete_cesaro_adjoint(2 * p * (p + 1) * even)
    out = np.zeros(f.size, dtype=complex)
    odd_rows = 2 * np.arange(1, even.size) - 1
    keep = odd_rows < f.size
    out[odd_rows[keep]] = -2 * tail[1:][keep]
    return out


def cesaro_integral(phi: Callable[[float], float], theta: float) -> float:
    """Evaluate C̃[φ](θ) from its integral form by adaptive quadrature.

    C̃[φ](θ) = ((π−θ)·∫₀^θ φ − θ·∫_θ^π φ) / (π·sinθ), for θ ∈ (0, π).
    """
    if not 0 < theta < np.pi:
        raise DomainError(f"Angle must lie in (0, π), got {theta}")
    left, _ = integrate.quad(phi, 0.0, theta, epsabs=1e-13, epsrel=1e-12)
    right, _ = integrate.quad(phi, theta, np.pi, epsabs=1e-13, epsrel=1e-12)
    return ((np.pi - theta) * left - theta * right) / (np.pi * np.sin(theta))
