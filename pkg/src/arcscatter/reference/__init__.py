"""Flat-arc analytic references."""

from arcscatter.reference.flat_arc import (
    EdgeSplit,
    fourier_decay_s0_one,
    fourier_envelope_slope,
    log_principal_value,
    n0_of_one,
    ns_of_one,
    s0_of_one,
    s0_of_one_derivative,
    s0_of_one_integral,
    s0_one_transform,
    window_constant,
)

__all__ = [
    "EdgeSplit",
    "fourier_decay_s0_one",
    "fourier_envelope_slope",
    "log_principal_value",
    "n0_of_one",
    "ns_of_one",
    "s0_of_one",
    "s0_of_one_derivative",
    "s0_of_one_integral",
    "s0_one_transform",
    "window_constant",
]
