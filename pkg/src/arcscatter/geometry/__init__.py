"""Arc geometry."""

from arcscatter.geometry.arcs import (
    Arc,
    ArcPoint,
    circular_arc,
    flat_segment,
    perturbed_flat,
)

__all__ = [
    "Arc",
    "ArcPoint",
    "circular_arc",
    "flat_segment",
    "perturbed_flat",
]
