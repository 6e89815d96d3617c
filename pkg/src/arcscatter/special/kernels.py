"""The Helmholtz Green's function and its logarithmic splitting along an arc."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from scipy import special

from arcscatter.models.results import KernelValue

if TYPE_CHECKING:
    from arcscatter.geometry.arcs import Arc

TWO_PI = 2 * np.pi


def green_function(k: float, distance: np.ndarray) -> np.ndarray:
    """G_k at the given distances: (i/4)H₀⁽¹⁾(kR), or −ln(R)/(2π) when k = 0."""
    distance = np.asarray(distance, dtype=float)
    if k == 0:
        return (-np.log(distance) / TWO_PI).astype(complex)
    return 0.25j * special.hankel1(0, k * distance)


def green_normal_derivative(k: float, targets: np.ndarray, sources: np.ndarray, normals: np.ndarray) -> np.ndarray:
    """Derivative of G_k(x, y) along the normal at the source point y.

    Args:
        k: Wavenumber.
        targets: Points x, shape (..., 2).
        sources: Points y, broadcastable against targets.
        normals: Unit normals at y, broadcastable against sources.

    Returns:
        ∂G_k/∂n(y), equal to (ik/4)·H₁⁽¹⁾(kR)·n·(x − y)/R.
    """
    diff = np.asarray(targets) - np.asarray(sources)
    distance = np.linalg.norm(diff, axis=-1)
    projection = np.sum(np.asarray(normals) * diff, axis=-1)
    if k == 0:
        return (projection / (TWO_PI * distance**2)).astype(complex)
    return 0.25j * k * special.hankel1(1, k * distance) * projection / distance


def _y0_regular_part(z: np.ndarray) -> np.ndarray:
    """Y₀(z) − (2/π)(ln(z/2) + γ)J₀(z), which vanishes like z²/(2π) at 0."""
    z = np.asarray(z, dtype=float)
    out = np.zeros_like(z)
    positive = z > 0
    zp = z[positive]
    out[positive] = special.y0(zp) - (2 / np.pi) * (np.log(zp / 2) + np.euler_gamma) * special.j0(zp)
    return out


def split_kernel(arc: Arc, k: float, t: np.ndarray, t2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized splitting G_k(r(t), r(t2)) = A₁·ln|t − t2| + A₂.

    A₁ = −J₀(kR)/(2π) carries the logarithmic singularity; A₂ is smooth and
    takes its analytic limit on the diagonal, where R = |r(t) − r(t2)|.

    Returns:
        Tuple of (A₁, A₂) arrays broadcast from t and t2.
    """
    t, t2 = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(t2, dtype=float))
    ratio = arc.chord_ratio(t, t2)
    if k == 0:
        log_coefficient = np.full(t.shape, -1 / TWO_PI, dtype=complex)
        return log_coefficient, (-np.log(ratio) / TWO_PI).astype(complex)

    z = k * np.abs(t - t2) * ratio
    bessel_j0 = special.j0(z)
    log_coefficient = (-bessel_j0 / TWO_PI).astype(complex)
    smooth = (
        0.25j * bessel_j0
        - bessel_j0 * (np.log(k * ratio / 2) + np.euler_gamma) / TWO_PI
        - 0.25 * _y0_regular_part(z)
    )
    return log_coefficient, smooth


def kernel_split(arc: Arc, k: float, t: float, t2: float) -> KernelValue:
    """Split the Green's function between two arc points.

    Args:
        arc: The arc.
        k: Non-negative wavenumber.
        t: Target parameter in [−1, 1].
        t2: Source parameter in [−1, 1].

    Returns:
        KernelValue whose value is infinite on the diagonal.
    """
    log_coefficient, smooth = split_kernel(arc, k, np.asarray(t), np.asarray(t2))
    a1, a2 = complex(log_coefficient), complex(smooth)
    value = complex(np.inf) if t == t2 else a1 * np.log(abs(t - t2)) + a2
    return KernelValue(value=value, log_coefficient=a1, smooth_part=a2)
