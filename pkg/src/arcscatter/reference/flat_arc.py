"""Closed-form references for the unweighted operators on the flat segment.

These functions show why the unweighted pair is a poor basis for a
second-kind formulation: N₀S₀[1] behaves like 1/(1−x²) at the edges and is
not square integrable, and S₀[1] decays only like 1/ξ in Fourier space.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special

from arcscatter.errors import DomainError
from arcscatter.operators.flat import adaptive_quad

logger = logging.getLogger(__name__)

LN2 = float(np.log(2.0))
EDGE_COEFFICIENT = (LN2 - 1) / np.pi**2


@dataclass(frozen=True)
class EdgeSplit:
    """N₀S₀[1](x) separated into its edge singularity and a square-integrable rest.

    Attributes:
        value: N₀S₀[1](x).
        singular_part: (ln2 − 1)/(π²(1 − x²)).
        remainder: value − singular_part.
    """

    value: float
    singular_part: float
    remainder: float


def _check_closed(x: float) -> None:
    if not -1 <= x <= 1:
        raise DomainError(f"Point must lie in [-1, 1], got {x}")


def _check_open(x: float) -> None:
    if not -1 < x < 1:
        raise DomainError(f"Point must lie in (-1, 1), got {x}")


def s0_of_one(x: float) -> float:
    """S₀[1](x) = (1/2π)(2 − (1−x)ln(1−x) − (1+x)ln(1+x)), continuous up to x = ±1."""
    _check_closed(x)
    return float((2 - special.xlogy(1 - x, 1 - x) - special.xlogy(1 + x, 1 + x)) / (2 * np.pi))


def s0_of_one_derivative(x: float) -> float:
    """d/dx S₀[1](x) = (1/2π)·ln((1−x)/(1+x)); logarithmically singular at ±1."""
    _check_open(x)
    return float(np.log((1 - x) / (1 + x)) / (2 * np.pi))


def s0_of_one_integral() -> float:
    """∫_{−1}^{1} S₀[1](x) dx = (3 − 2ln2)/π."""
    return (3 - 2 * LN2) / np.pi


def n0_of_one(x: float) -> float:
    """N₀[1](x) = −1/(π(1 − x²))."""
    _check_open(x)
    return -1.0 / (np.pi * (1 - x * x))


@lru_cache(maxsize=1)
def window_constant() -> float:
    """∫₀¹ (ln(1−v) − ln(1+v))/v dv, the x-independent inner window integral."""
    return adaptive_quad(lambda v: (np.log1p(-v) - np.log1p(v)) / v, 0.0, 1.0)


def log_principal_value(x: float) -> float:
    """L(x) = p.v. ∫_{−1}^{1} ln(1 − s)/(s − x) ds.

    The window [x − δ, x + δ] with δ = 1 − |x| is symmetric around x. For
    x ≥ 0 it reaches s = 1 and rescales to :func:`window_constant`.
    """
    _check_open(x)
    delta = 1 - abs(x)
    if x >= 0:
        inner = window_constant()
        outer = adaptive_quad(lambda s: np.log1p(-s) / (s - x), -1.0, x - delta)
    else:
        inner = adaptive_quad(
            lambda u: (np.log(1 - x - u) - np.log(1 - x + u)) / u,
            0.0,
            delta,
        )
        outer = adaptive_quad(lambda s: np.log1p(-s) / (s - x), x + delta, 1.0)
    return inner + outer


def ns_of_one(x: float) -> EdgeSplit:
    """N₀S₀[1](x) with its edge split.

    N₀S₀[1] = (ln2 − 1)/(π²(1 − x²)) + (L(x) + L(−x))/(4π²), where
    L(−x) = −p.v.∫ ln(1 + s)/(s − x) ds by reflection.
    """
    _check_open(x)
    singular = EDGE_COEFFICIENT / (1 - x * x)
    remainder = (log_principal_value(x) + log_principal_value(-x)) / (4 * np.pi**2)
    logger.debug(f"N0S0[1]({x}) = {singular + remainder} (remainder {remainder})")
    return EdgeSplit(value=singular + remainder, singular_part=singular, remainder=remainder)


def s0_one_transform(xi: float) -> float:
    """∫_{−1}^{1} e^{−iξx}·S₀[1](x) dx, which is real because S₀[1] is even."""
    if xi < 0:
        raise DomainError(f"Frequency must be non-negative, got {xi}")
    if xi == 0:
        return 2 * adaptive_quad(s0_of_one, 0.0, 1.0)
    return 2 * adaptive_quad(s0_of_one, 0.0, 1.0, weight="cos", wvar=xi)


def fourier_decay_s0_one(xi_grid: np.ndarray) -> np.ndarray:
    """|∫_{−1}^{1} e^{−iξx}·S₀[1](x) dx|² on a grid of frequencies."""
    return np.array([s0_one_transform(float(xi)) ** 2 for xi in np.atleast_1d(xi_grid)])


def fourier_envelope_slope(xi_min: float = 1e2, xi_max: float = 1e4, windows: int = 16, samples: int = 48) -> float:
    """Log-log slope of the envelope of |Ŝ₀[1](ξ)|² over [xi_min, xi_max].

    The envelope at each of ``windows`` log-spaced frequencies is the maximum
    over one full period 2π starting there.
    """
    if not 0 < xi_min < xi_max:
        raise DomainError(f"Need 0 < xi_min < xi_max, got {xi_min}, {xi_max}")
    starts = np.geomspace(xi_min, xi_max, windows)
    envelope = np.array(
        [np.max(fourier_decay_s0_one(np.linspace(start, start + 2 * np.pi, samples))) for start in starts]
    )
    slope, _ = np.polyfit(np.log(starts), np.log(envelope), 1)
    return float(slope)
