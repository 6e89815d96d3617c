"""Point spectrum of J̃₀: the discrete set Λ∞, the open sets Λ_s and eigenfunctions."""

from __future__ import annotations

import logging

import numpy as np

from arcscatter.errors import DomainError, ResonanceError
from arcscatter.models.core import Membership
from arcscatter.models.results import EigenfunctionResult, SpectrumPoint
from arcscatter.operators.canonical import LN2, lambda_infinity

logger = logging.getLogger(__name__)

# Relative size below which a recurrence numerator counts as an exact zero.
_TERMINATION_TOLERANCE = 1e-12


def _check_index(s: float) -> None:
    if s <= 0:
        raise DomainError(f"Sobolev index must be positive, got {s}")


def lambda_s_membership(value: complex, s: float) -> bool:
    """Whether λ lies in the open set Λ_s.

    λ ∈ Λ_s iff 4s + 2 < −(λx + 1/4)/((λx + 1/4)² + λy²). The accumulation
    point −1/4 itself is excluded.
    """
    _check_index(s)
    x = complex(value).real + 0.25
    y = complex(value).imag
    radius_sq = x * x + y * y
    if radius_sq == 0:
        return False
    return 4 * s + 2 < -x / radius_sq


def lambda_s_membership_polar(value: complex, s: float) -> bool:
    """Polar form of :func:`lambda_s_membership` around −1/4: 0 < r < −cosφ/(4s+2)."""
    _check_index(s)
    offset = complex(value) + 0.25
    r = abs(offset)
    if r == 0:
        return False
    return bool(r < -np.cos(np.angle(offset)) / (4 * s + 2))


def discrete_index(value: complex, tol: float = 1e-12) -> int | None:
    """Index n with λ = λ_n to within ``tol``, or None."""
    value = complex(value)
    if abs(value.imag) > tol:
        return None
    if abs(value.real - lambda_infinity(0)) <= tol:
        return 0
    if value.real >= -0.25:
        return None
    n = max(1, int(round(-0.25 / (value.real + 0.25))))
    if abs(value.real - lambda_infinity(n)) <= tol:
        return n
    return None


def classify_spectrum_point(value: complex, s: float, tol: float = 1e-12) -> SpectrumPoint:
    """Locate λ relative to the point spectrum Λ∞ ∪ Λ_s of J̃₀ on H^s."""
    index = discrete_index(value, tol)
    if index is not None:
        return SpectrumPoint(complex(value), Membership.DISCRETE, index=index, s=s)
    if lambda_s_membership(value, s):
        return SpectrumPoint(complex(value), Membership.OPEN_REGION, s=s)
    return SpectrumPoint(complex(value), Membership.OUTSIDE, s=s)


def predicted_decay_exponent(value: complex) -> float | None:
    """Exponent −2x/(x²+y²) of |f_n| for z = 8λ + 2 = −x + iy, when x > 0."""
    z = 8 * complex(value) + 2
    x, y = -z.real, z.imag
    if x <= 0:
        return None
    return -2 * x / (x * x + y * y)


def _fit_decay(coefficients: np.ndarray) -> float | None:
    even = np.abs(coefficients[2::2])
    modes = 2 * np.arange(1, even.size + 1)
    window = (modes >= modes[-1] // 4) & (even > 0)
    if np.count_nonzero(window) < 4:
        return None
    slope, _ = np.polyfit(np.log(modes[window]), np.log(even[window]), 1)
    return float(slope)


def eigenfunction_coefficients(value: complex, f1: complex, f2: complex, n_max: int) -> EigenfunctionResult:
    """Eigenfunction of J̃₀ for eigenvalue λ from the two-step recurrence.

    With z = 8λ + 2, f_{n+2} = f_n·(z/2 + 1/n)/(z/2 − 1/(n+2)) generates the
    odd chain from f₁ and the even chain from f₂. f₀ then follows from
    (1/4)·Σ_k f_{2k}/(2k) = f₀·(−ln2/4 − λ).

    Args:
        value: Eigenvalue λ with Re(z) < 0, or a member of Λ∞.
        f1: Starting odd coefficient.
        f2: Starting even coefficient.
        n_max: Highest coefficient index to generate.

    Returns:
        EigenfunctionResult holding f_0 … f_{n_max}.

    Raises:
        DomainError: If λ violates the precondition or n_max < 4.
        ResonanceError: If a denominator vanishes on a live chain.
    """
    value = complex(value)
    if n_max < 4:
        raise DomainError(f"n_max must be at least 4, got {n_max}")
    z = 8 * value + 2
    discrete = discrete_index(value)
    if z.real >= 0 and discrete is None:
        raise DomainError(f"Recurrence needs Re(8λ+2) < 0 or λ in Λ∞, got λ = {value}")

    f = np.zeros(n_max + 1, dtype=complex)
    f[1] = f1
    f[2] = f2
    terminated = False
    half = z / 2
    for n in range(1, n_max - 1):
        if f[n] == 0:
            continue
        numerator = half + 1.0 / n
        denominator = half - 1.0 / (n + 2)
        if abs(numerator) <= _TERMINATION_TOLERANCE * (abs(half) + 1.0 / n):
            logger.debug(f"Chain through f_{n} terminates at lambda = {value}")
            terminated = True
            continue
        if denominator == 0:
            raise ResonanceError(f"Recurrence denominator vanishes at n = {n} for lambda = {value}")
        f[n + 2] = f[n] * numerator / denominator

    even_modes = np.arange(2, n_max + 1, 2)
    tail_sum = 0.25 * np.sum(f[even_modes] / even_modes)
    gap = -LN2 / 4 - value
    scale = max(float(np.max(np.abs(f))), 1.0)
    if abs(gap) < 1e-14:
        if abs(tail_sum) > 1e-12 * scale:
            raise ResonanceError(f"No eigenfunction with f0 for lambda = {value}: even chain does not cancel")
        f[0] = 1.0 if not np.any(f[1:]) else 0.0
    else:
        f[0] = tail_sum / gap

    last_even = f[even_modes[-1]]
    converged = abs(last_even) / 2 <= 1e-8 * max(abs(tail_sum) * 4, float(np.linalg.norm(f)))
    if not converged:
        logger.warning(f"f0 series for lambda = {value} has not converged at n_max = {n_max}")

    return EigenfunctionResult(
        eigenvalue=value,
        coefficients=f,
        f0_converged=bool(converged),
        terminated=terminated,
        decay_exponent=None if terminated and not np.any(f[2::2]) else _fit_decay(f),
        predicted_exponent=predicted_decay_exponent(value),
    )
