"""Canonical, assembled and flat-arc operators."""

from arcscatter.operators.assembly import (
    assemble_N,
    assemble_N_parts,
    assemble_S,
    nodal_symm,
    single_layer_nodal,
)
from arcscatter.operators.canonical import (
    ConjugationKind,
    cesaro_integral,
    cesaro_matrix,
    d0_even_via_cesaro,
    d0_matrix,
    discrete_cesaro,
    discrete_cesaro_adjoint,
    inverse_speed_operator,
    j0_closed_form,
    j0_inverse,
    j0_product,
    lambda_infinity,
    multiplication_operator,
    n0_matrix,
    symm_matrix,
    t0_matrix,
    tau_conjugated,
    w0_apply,
)
from arcscatter.operators.flat import FlatOperatorKind, flat_unweighted, principal_value
from arcscatter.operators.point_spectrum import (
    classify_spectrum_point,
    eigenfunction_coefficients,
    lambda_s_membership,
    lambda_s_membership_polar,
)

__all__ = [
    "ConjugationKind",
    "FlatOperatorKind",
    "assemble_N",
    "assemble_N_parts",
    "assemble_S",
    "cesaro_integral",
    "cesaro_matrix",
    "classify_spectrum_point",
    "d0_even_via_cesaro",
    "d0_matrix",
    "discrete_cesaro",
    "discrete_cesaro_adjoint",
    "eigenfunction_coefficients",
    "flat_unweighted",
    "inverse_speed_operator",
    "j0_closed_form",
    "j0_inverse",
    "j0_product",
    "lambda_infinity",
    "lambda_s_membership",
    "lambda_s_membership_polar",
    "multiplication_operator",
    "n0_matrix",
    "nodal_symm",
    "principal_value",
    "single_layer_nodal",
    "symm_matrix",
    "t0_matrix",
    "tau_conjugated",
    "w0_apply",
]
