"""Spectral analysis of assembled operators and the verification suite."""

from arcscatter.analysis.spectra import (
    CalderonParts,
    calderon_product,
    calderon_remainder,
    calderon_remainder_split,
    cluster_fraction,
    eigenpair_residual,
    j0_tau,
    numerical_rank,
    remainder_matrix,
    sort_eigenvalues,
    spectrum,
)
from arcscatter.analysis.verification import run_verification

__all__ = [
    "CalderonParts",
    "calderon_product",
    "calderon_remainder",
    "calderon_remainder_split",
    "cluster_fraction",
    "eigenpair_residual",
    "j0_tau",
    "numerical_rank",
    "remainder_matrix",
    "run_verification",
    "sort_eigenvalues",
    "spectrum",
]
