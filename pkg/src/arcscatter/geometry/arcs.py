"""Smooth open arcs parametrized over [−1, 1]."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from arcscatter.errors import DomainError
from arcscatter.models.core import ArcFamily

logger = logging.getLogger(__name__)

# Samples used to check positivity of the speed.
_VALIDATION_SAMPLES = 257


@dataclass(frozen=True)
class ArcPoint:
    """Geometry of an arc at one or more parameter values.

    Attributes:
        point: Position r(t), shape (..., 2).
        speed: τ(t) = |dr/dt|.
        normal: Unit normal n, shape (..., 2).
        tangent: Unit tangent, the 90° clockwise rotation of the normal.
    """

    point: np.ndarray
    speed: np.ndarray
    normal: np.ndarray
    tangent: np.ndarray


@dataclass(frozen=True)
class Arc:
    """A smooth open arc r(t), t ∈ [−1, 1].

    Families:
        FLAT: r(t) = (h·t, 0) with half-length h = ``scale``.
        CIRCULAR: r(t) = R(cos(αt/2), sin(αt/2)) with radius R = ``scale``
            and opening angle α = ``opening`` in (0, 2π).
        PERTURBED: r(t) = (t, a·sin(πqt)) with amplitude a = ``amplitude``
            and integer frequency q = ``frequency``.

    Attributes:
        family: Arc family.
        scale: Half-length (flat) or radius (circular).
        opening: Opening angle of a circular arc in radians.
        amplitude: Amplitude of the sinusoidal perturbation.
        frequency: Integer frequency of the sinusoidal perturbation.
    """

    family: ArcFamily
    scale: float = 1.0
    opening: float = np.pi
    amplitude: float = 0.0
    frequency: int = 1

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise DomainError(f"Arc scale must be positive, got {self.scale}")
        if self.family == ArcFamily.CIRCULAR and not 0 < self.opening < 2 * np.pi:
            raise DomainError(f"Circular arc opening must lie in (0, 2π), got {self.opening}")
        if self.family == ArcFamily.PERTURBED and int(self.frequency) != self.frequency:
            raise DomainError(f"Perturbation frequency must be an integer, got {self.frequency}")
        samples = self.speed(np.linspace(-1.0, 1.0, _VALIDATION_SAMPLES))
        if not np.all(samples > 0):
            raise DomainError(f"Arc {self.label} has a vanishing speed")

    @classmethod
    def from_params(cls, family: ArcFamily | str, param1: float | None = None, param2: float | None = None) -> Arc:
        """Build an arc from a family name and two generic parameters.

        Args:
            family: Family name or enum value.
            param1: Half-length (flat), opening angle (circular) or amplitude (perturbed).
            param2: Radius (circular) or frequency (perturbed); unused for flat arcs.

        Returns:
            The constructed arc.
        """
        family = ArcFamily(family)
        if family == ArcFamily.FLAT:
            return cls(family, scale=1.0 if param1 is None else float(param1))
        if family == ArcFamily.CIRCULAR:
            return cls(
                family,
                opening=np.pi if param1 is None else float(param1),
                scale=1.0 if param2 is None else float(param2),
            )
        return cls(
            family,
            amplitude=0.2 if param1 is None else float(param1),
            frequency=2 if param2 is None else int(param2),
        )

    @property
    def label(self) -> str:
        """Human readable description."""
        if self.family == ArcFamily.FLAT:
            return f"flat(h={self.scale:g})"
        if self.family == ArcFamily.CIRCULAR:
            return f"circular(alpha={self.opening:g}, R={self.scale:g})"
        return f"perturbed(a={self.amplitude:g}, q={self.frequency})"

    def _check(self, t: np.ndarray | float) -> np.ndarray:
        values = np.asarray(t, dtype=float)
        if np.any(np.abs(values) > 1.0 + 1e-14):
            raise DomainError(f"Arc parameter outside [-1, 1]: {values}")
        return np.clip(values, -1.0, 1.0)

    def position(self, t: np.ndarray | float) -> np.ndarray:
        """Position r(t), shape (..., 2)."""
        t = self._check(t)
        if self.family == ArcFamily.FLAT:
            x, y = self.scale * t, np.zeros_like(t)
        elif self.family == ArcFamily.CIRCULAR:
            phi = self.opening * t / 2
            x, y = self.scale * np.cos(phi), self.scale * np.sin(phi)
        else:
            x, y = t, self.amplitude * np.sin(np.pi * self.frequency * t)
        return np.stack([x, y], axis=-1)

    def derivative(self, t: np.ndarray | float) -> np.ndarray:
        """Derivative dr/dt, shape (..., 2)."""
        t = self._check(t)
        if self.family == ArcFamily.FLAT:
            dx, dy = np.full_like(t, self.scale), np.zeros_like(t)
        elif self.family == ArcFamily.CIRCULAR:
            phi = self.opening * t / 2
            rate = self.scale * self.opening / 2
            dx, dy = -rate * np.sin(phi), rate * np.cos(phi)
        else:
            wave = np.pi * self.frequency
            dx, dy = np.ones_like(t), self.amplitude * wave * np.cos(wave * t)
        return np.stack([dx, dy], axis=-1)

    def speed(self, t: np.ndarray | float) -> np.ndarray:
        """Speed τ(t) = |dr/dt|."""
        return np.linalg.norm(self.derivative(t), axis=-1)

    def tangent(self, t: np.ndarray | float) -> np.ndarray:
        """Unit tangent dr/dt / τ."""
        d = self.derivative(t)
        return d / np.linalg.norm(d, axis=-1)[..., None]

    def normal(self, t: np.ndarray | float) -> np.ndarray:
        """Unit normal; rotating it 90° clockwise gives the tangent."""
        tangent = self.tangent(t)
        return np.stack([-tangent[..., 1], tangent[..., 0]], axis=-1)

    def evaluate(self, t: np.ndarray | float) -> ArcPoint:
        """Position, speed, normal and tangent at t."""
        return ArcPoint(
            point=self.position(t),
            speed=self.speed(t),
            normal=self.normal(t),
            tangent=self.tangent(t),
        )

    def chord_ratio(self, t: np.ndarray | float, t2: np.ndarray | float) -> np.ndarray:
        """|r(t) − r(t2)| / |t − t2|, continued by τ(t) on the diagonal.

        Every family has a closed form in terms of the midpoint and a sinc of
        the half-difference, which is smooth and free of cancellation at
        t = t2.
        """
        t, t2 = np.broadcast_arrays(self._check(t), self._check(t2))
        half = (t - t2) / 2
        mid = (t + t2) / 2
        if self.family == ArcFamily.FLAT:
            return np.full(t.shape, self.scale)
        if self.family == ArcFamily.CIRCULAR:
            return self.scale * self.opening / 2 * np.abs(np.sinc(self.opening * half / (2 * np.pi)))
        wave = np.pi * self.frequency
        slope = self.amplitude * wave * np.cos(wave * mid) * np.sinc(self.frequency * half)
        return np.sqrt(1.0 + slope**2)

    def max_speed(self) -> float:
        """Largest sampled speed on the arc."""
        return float(np.max(self.speed(np.linspace(-1.0, 1.0, _VALIDATION_SAMPLES))))

    def distance_to(self, points: np.ndarray, samples: int = 2049) -> np.ndarray:
        """Approximate distance from points (shape (..., 2)) to the arc."""
        curve = self.position(np.cos(np.linspace(0.0, np.pi, samples)))
        points = np.asarray(points, dtype=float)
        diff = points[..., None, :] - curve
        return np.min(np.linalg.norm(diff, axis=-1), axis=-1)


def flat_segment(half_length: float = 1.0) -> Arc:
    """Straight segment [−h, h] × {0}."""
    return Arc(ArcFamily.FLAT, scale=half_length)


def circular_arc(opening: float = np.pi, radius: float = 1.0) -> Arc:
    """Arc of a circle centred at the origin, symmetric about the x axis."""
    return Arc(ArcFamily.CIRCULAR, scale=radius, opening=opening)


def perturbed_flat(amplitude: float = 0.2, frequency: int = 2) -> Arc:
    """Flat segment with a sinusoidal transverse perturbation."""
    return Arc(ArcFamily.PERTURBED, amplitude=amplitude, frequency=frequency)
