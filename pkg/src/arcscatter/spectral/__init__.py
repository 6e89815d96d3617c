"""Cosine-space transforms and Sobolev norms."""

from arcscatter.spectral.cosine import (
    analysis_matrix,
    from_coefficients,
    from_coefficients_direct,
    multiplication_matrix,
    sequence_norm,
    sobolev_norm,
    synthesis_matrix,
    to_coefficients,
    to_coefficients_direct,
)

__all__ = [
    "analysis_matrix",
    "from_coefficients",
    "from_coefficients_direct",
    "multiplication_matrix",
    "sequence_norm",
    "sobolev_norm",
    "synthesis_matrix",
    "to_coefficients",
    "to_coefficients_direct",
]
