"""Bessel and Hankel functions of orders zero and one."""

from __future__ import annotations

from enum import Enum

import numpy as np
from scipy import special

from arcscatter.errors import DomainError


class BesselKind(str, Enum):
    """Supported cylinder functions."""

    J0 = "J0"
    J1 = "J1"
    Y0 = "Y0"
    Y1 = "Y1"
    H0_1 = "H0_1"
    H1_1 = "H1_1"


_EVALUATORS = {
    BesselKind.J0: special.j0,
    BesselKind.J1: special.j1,
    BesselKind.Y0: special.y0,
    BesselKind.Y1: special.y1,
    BesselKind.H0_1: lambda x: special.hankel1(0, x),
    BesselKind.H1_1: lambda x: special.hankel1(1, x),
}

_SINGULAR_AT_ZERO = {BesselKind.Y0, BesselKind.Y1, BesselKind.H0_1, BesselKind.H1_1}


def bessel(kind: BesselKind | str, x: np.ndarray | float) -> np.ndarray | complex:
    """Evaluate a Bessel or Hankel function of the first kind.

    Args:
        kind: Which function to evaluate.
        x: Real argument; x ≥ 0 for J kinds and x > 0 for Y and H kinds.

    Returns:
        Complex value, or an array of values for array input.

    Raises:
        DomainError: If x is outside the domain of the requested kind.
    """
    kind = BesselKind(kind)
    values = np.asarray(x, dtype=float)
    if kind in _SINGULAR_AT_ZERO:
        if np.any(values <= 0):
            raise DomainError(f"{kind.value} requires x > 0, got {x}")
    elif np.any(values < 0):
        raise DomainError(f"{kind.value} requires x >= 0, got {x}")

    result = np.asarray(_EVALUATORS[kind](values), dtype=complex)
    if result.ndim == 0:
        return complex(result)
    return result
