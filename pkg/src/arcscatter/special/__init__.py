"""Special functions: cylinder functions and the Helmholtz kernel."""

from arcscatter.special.bessel import BesselKind, bessel
from arcscatter.special.kernels import (
    green_function,
    green_normal_derivative,
    kernel_split,
    split_kernel,
)

__all__ = [
    "BesselKind",
    "bessel",
    "green_function",
    "green_normal_derivative",
    "kernel_split",
    "split_kernel",
]
