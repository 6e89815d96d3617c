"""Unweighted flat-arc operators S₀ and N₀ evaluated pointwise by quadrature."""

from __future__ import annotations

import logging
import warnings
from enum import Enum
from typing import Any, Callable

import numpy as np
from scipy import integrate

from arcscatter.errors import DomainError, QuadratureError

logger = logging.getLogger(__name__)

EPS_ABS = 1e-13
EPS_REL = 1e-11
QUAD_LIMIT = 400
ACCEPTABLE_ERROR = 1e-8
RELAXED_EPS_ABS = 1e-11
RELAXED_EPS_REL = 1e-9
FATAL_WARNINGS = ("divergent", "bad integrand")


class FlatOperatorKind(str, Enum):
    """Unweighted operators on the segment [−1, 1]."""

    S0_PARAM = "S0_param"
    N0_PARAM = "N0_param"


def _quad(func: Callable[[float], float], a: float, b: float, options: dict[str, Any]) -> tuple[float, float, list[str]]:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        value, error = integrate.quad(func, a, b, **options)
    messages = [str(w.message) for w in caught if issubclass(w.category, integrate.IntegrationWarning)]
    return value, error, messages


def adaptive_quad(func: Callable[[float], float], a: float, b: float, **kwargs: Any) -> float:
    """scipy.integrate.quad that fails loudly instead of returning a doubtful value.

    A divergence or bad-integrand warning raises at once. Roundoff and
    subdivision-limit warnings get one retry at relaxed tolerances; a
    second warning raises. An error estimate above ``ACCEPTABLE_ERROR``
    relative to the value also raises.

    Raises:
        QuadratureError: If quad reports non-convergence or the estimated error is unacceptable.
    """
    if a == b:
        return 0.0
    options: dict[str, Any] = {"epsabs": EPS_ABS, "epsrel": EPS_REL, "limit": QUAD_LIMIT}
    options.update(kwargs)
    value, error, messages = _quad(func, a, b, options)
    if messages:
        if any(marker in message for message in messages for marker in FATAL_WARNINGS):
            raise QuadratureError(f"Quadrature on [{a}, {b}] failed: {messages[0]}")
        logger.warning(f"quad on [{a:.6g}, {b:.6g}]: {messages[0]}; retrying at relaxed tolerance")
        options.update(epsabs=max(RELAXED_EPS_ABS, options["epsabs"]), epsrel=max(RELAXED_EPS_REL, options["epsrel"]))
        value, error, messages = _quad(func, a, b, options)
        if messages:
            raise QuadratureError(f"Quadrature on [{a}, {b}] did not converge: {messages[0]}")
    if not np.isfinite(value) or error > ACCEPTABLE_ERROR * max(1.0, abs(value)):
        raise QuadratureError(f"Quadrature on [{a}, {b}] did not converge (estimate {value}, error {error})")
    logger.debug(f"quad on [{a:.6g}, {b:.6g}] -> {value:.17g} (est. error {error:.2g})")
    return float(value)


def principal_value(func: Callable[[float], float], x: float) -> float:
    """p.v. ∫_{−1}^{1} func(s)/(s − x) ds by symmetric-window subtraction.

    The window [x − δ, x + δ] with δ = 1 − |x| is folded onto (0, δ), where
    (func(x+u) − func(x−u))/u is regular; the rest of [−1, 1] has no
    singularity at x.
    """
    if not -1 < x < 1:
        raise DomainError(f"Principal value point must lie in (-1, 1), got {x}")
    delta = 1 - abs(x)
    inner = adaptive_quad(lambda u: (func(x + u) - func(x - u)) / u, 0.0, delta)
    if x > 0:
        outer = adaptive_quad(lambda s: func(s) / (s - x), -1.0, x - delta)
    else:
        outer = adaptive_quad(lambda s: func(s) / (s - x), x + delta, 1.0)
    return inner + outer


def numerical_derivative(func: Callable[[float], float], step: float = 1e-5) -> Callable[[float], float]:
    """Central-difference derivative that stays inside [−1, 1]."""

    def derivative(s: float) -> float:
        h = min(step, (1 - abs(s)) / 2) if abs(s) < 1 else step
        if h <= 0:
            h = step
        return (func(s + h) - func(s - h)) / (2 * h)

    return derivative


def flat_unweighted(
    kind: FlatOperatorKind | str,
    density: Callable[[float], float],
    x: float,
    derivative: Callable[[float], float] | None = None,
) -> float:
    """Evaluate S₀[φ](x) or N₀[φ](x) on the flat segment.

    S₀[φ](x) = −(1/2π)∫ ln|x − s|·φ(s) ds uses quad's logarithmic weights on
    either side of x. N₀ uses the tangential form
    N₀[φ](x) = (1/2π)·(φ(1)/(x−1) − φ(−1)/(x+1) + p.v.∫ φ'(s)/(s − x) ds).

    Args:
        kind: Operator to evaluate.
        density: Smooth density φ on [−1, 1].
        x: Target point with |x| < 1.
        derivative: φ' for N₀; central differences are used when omitted.

    Returns:
        The operator value at x.

    Raises:
        DomainError: If |x| ≥ 1.
    """
    kind = FlatOperatorKind(kind)
    if not -1 < x < 1:
        raise DomainError(f"Flat-arc operators need |x| < 1, got {x}")
    if kind == FlatOperatorKind.S0_PARAM:
        right = adaptive_quad(density, x, 1.0, weight="alg-loga", wvar=(0.0, 0.0))
        left = adaptive_quad(density, -1.0, x, weight="alg-logb", wvar=(0.0, 0.0))
        return -(left + right) / (2 * np.pi)

    slope = derivative or numerical_derivative(density)
    boundary = density(1.0) / (x - 1) - density(-1.0) / (x + 1)
    return (boundary + principal_value(slope, x)) / (2 * np.pi)
