"""Identity and oracle checks run by ``arcscatter verify``."""

from __future__ import annotations

import logging
from typing import Callable

import numpy as np

from arcscatter.analysis.spectra import remainder_matrix, sort_eigenvalues, spectrum
from arcscatter.geometry.arcs import flat_segment
from arcscatter.models.core import CosineSeries
from arcscatter.models.results import CheckResult
from arcscatter.operators.assembly import assemble_S
from arcscatter.operators.canonical import (
    cesaro_matrix,
    d0_matrix,
    j0_closed_form,
    j0_inverse,
    j0_product,
    lambda_infinity,
    symm_diagonal,
    symm_matrix,
    t0_matrix,
    w0_apply,
)
from arcscatter.operators.flat import FlatOperatorKind, flat_unweighted
from arcscatter.operators.point_spectrum import eigenfunction_coefficients
from arcscatter.reference.flat_arc import (
    EDGE_COEFFICIENT,
    fourier_envelope_slope,
    n0_of_one,
    ns_of_one,
    s0_of_one,
    s0_of_one_derivative,
)

logger = logging.getLogger(__name__)

SAMPLE_POINTS = np.linspace(-0.95, 0.95, 20)


def _max_abs(values: np.ndarray) -> float:
    return float(np.max(np.abs(values))) if np.size(values) else 0.0


def check_cesaro_t0(size: int) -> CheckResult:
    """C̃T̃₀ = I on the first N−1 columns."""
    product = cesaro_matrix(size).entries @ t0_matrix(size).entries
    cols = size - 1
    return CheckResult("cesaro_t0", _max_abs(product[:, :cols] - np.eye(size)[:, :cols]), 1e-12)


def check_t0_cesaro(size: int) -> CheckResult:
    """T̃₀C̃e_n = e_n for n ≥ 1."""
    product = t0_matrix(size).entries @ cesaro_matrix(size).entries
    return CheckResult("t0_cesaro", _max_abs(product[:, 1:] - np.eye(size)[:, 1:]), 1e-12)


def check_d0_factorization(size: int) -> CheckResult:
    """D̃₀ = −(1/4)·C̃·S̃₀⁻²."""
    inverse_sq = np.diag(1.0 / symm_diagonal(size) ** 2)
    expected = -0.25 * cesaro_matrix(size).entries @ inverse_sq
    scale = max(1.0, _max_abs(expected))
    return CheckResult("d0_factorization", _max_abs(d0_matrix(size).entries - expected) / scale, 1e-12)


def check_j0_forms(size: int) -> CheckResult:
    """D̃₀S̃₀T̃₀S̃₀, the upper-triangular form and W̃₀ agree on the first N−2 columns."""
    cols = size - 2
    closed = j0_closed_form(size).entries[:, :cols]
    product = j0_product(size).entries[:, :cols]
    w0 = np.column_stack([w0_apply(CosineSeries.basis(n, size)).basis_coefficients() for n in range(cols)])
    deviation = max(_max_abs(product - closed), _max_abs(w0 - closed), _max_abs(product - w0))
    return CheckResult("j0_forms", deviation, 1e-12)


def check_j0_inverse(size: int) -> CheckResult:
    """Ĩ₀J̃₀ = J̃₀Ĩ₀ = I."""
    j0 = j0_product(size).entries
    inverse = j0_inverse(size).entries
    eye = np.eye(size)
    return CheckResult("j0_inverse", max(_max_abs(inverse @ j0 - eye), _max_abs(j0 @ inverse - eye)), 1e-11)


def check_s0_t0(size: int) -> CheckResult:
    """S̃₀T̃₀e_n = (e_{n+1} − e_{n−1})/4 for 2 ≤ n ≤ N−2."""
    product = symm_matrix(size).entries @ t0_matrix(size).entries
    expected = np.zeros((size, size))
    for n in range(2, size - 1):
        expected[n + 1, n] = 0.25
        expected[n - 1, n] = -0.25
    return CheckResult("s0_t0", _max_abs(product[:, 2 : size - 1] - expected[:, 2 : size - 1]), 1e-14)


def check_lambda_infinity(size: int) -> CheckResult:
    """Eigenvalues of the truncated J̃₀ are λ₀ … λ_{N−1}."""
    computed = spectrum(j0_closed_form(size)).eigenvalues
    expected = sort_eigenvalues(np.array([lambda_infinity(n) for n in range(size)]))
    return CheckResult("lambda_infinity", _max_abs(computed - expected), 1e-12)


def check_flat_symm(size: int) -> CheckResult:
    """S̃ on the flat segment at k = 0 is diag(ln2/2, 1/(2n))."""
    assembled = assemble_S(flat_segment(), 0.0, size).matrix.entries
    return CheckResult("flat_symm", _max_abs(assembled - np.diag(symm_diagonal(size))), 1e-12)


def check_flat_calderon(size: int) -> CheckResult:
    """ÑS̃ = J̃₀ on the flat segment at k = 0."""
    parts = remainder_matrix(flat_segment(), 0.0, size)
    return CheckResult("flat_calderon", _max_abs(parts.remainder.entries), 1e-10)


def check_eigenfunction() -> CheckResult:
    """The recurrence eigenfunction for λ = −0.3 satisfies J̃₀f = λf."""
    value = -0.3
    result = eigenfunction_coefficients(value, 1.0, 1.0, 512)
    f = result.coefficients
    applied = j0_closed_form(f.size).entries @ f
    modes = 256
    deviation = np.linalg.norm((applied - value * f)[:modes]) / np.linalg.norm(f[:modes])
    return CheckResult("eigenfunction_residual", float(deviation), 1e-6)


def check_eigenfunction_decay() -> CheckResult:
    """Even coefficients of the λ = −0.3 eigenfunction decay like n^{−5}."""
    result = eigenfunction_coefficients(-0.3, 0.0, 1.0, 512)
    if result.decay_exponent is None:
        return CheckResult("eigenfunction_decay", float("inf"), 0.2)
    return CheckResult("eigenfunction_decay", abs(result.decay_exponent + 5.0), 0.2)


def check_s0_of_one() -> CheckResult:
    """Closed-form S₀[1] against quadrature."""
    deviation = max(abs(s0_of_one(x) - flat_unweighted(FlatOperatorKind.S0_PARAM, lambda s: 1.0, x)) for x in SAMPLE_POINTS)
    return CheckResult("s0_of_one", deviation, 1e-8)


def check_n0_of_one() -> CheckResult:
    """Closed-form N₀[1] against the tangential form."""
    deviation = max(
        abs(n0_of_one(x) - flat_unweighted(FlatOperatorKind.N0_PARAM, lambda s: 1.0, x, derivative=lambda s: 0.0))
        for x in SAMPLE_POINTS
    )
    return CheckResult("n0_of_one", deviation, 1e-6)


def check_ns_consistency() -> CheckResult:
    """N₀ applied to S₀[1] by quadrature agrees with the window construction."""
    deviation = max(
        abs(
            flat_unweighted(FlatOperatorKind.N0_PARAM, s0_of_one, x, derivative=s0_of_one_derivative)
            - ns_of_one(x).value
        )
        for x in (-0.5, 0.0, 0.5)
    )
    return CheckResult("ns_consistency", deviation, 1e-6)


def check_ns_edge() -> CheckResult:
    """(1 − x²)·N₀S₀[1](x) approaches (ln2 − 1)/π² at the edge."""
    x = 0.9999
    scaled = (1 - x * x) * ns_of_one(x).value
    return CheckResult("ns_edge", abs(scaled / EDGE_COEFFICIENT - 1), 0.02)


def check_fourier_slope() -> CheckResult:
    """The envelope of |Ŝ₀[1](ξ)|² decays like ξ^{−2}."""
    return CheckResult("fourier_slope", abs(fourier_envelope_slope() + 2.0), 0.3)


def run_verification(size: int = 64, include_reference: bool = True) -> list[CheckResult]:
    """Run the identity suite and, optionally, the flat-arc oracles.

    Args:
        size: Truncation order for the matrix identities.
        include_reference: Also run the quadrature-based flat-arc checks.

    Returns:
        One CheckResult per check, in a fixed order.
    """
    checks: list[Callable[[], CheckResult]] = [
        lambda: check_cesaro_t0(size),
        lambda: check_t0_cesaro(size),
        lambda: check_d0_factorization(size),
        lambda: check_j0_forms(size),
        lambda: check_j0_inverse(size),
        lambda: check_s0_t0(size),
        lambda: check_lambda_infinity(size),
        lambda: check_flat_symm(size),
        lambda: check_flat_calderon(size),
        check_eigenfunction,
        check_eigenfunction_decay,
    ]
    if include_reference:
        checks += [check_s0_of_one, check_n0_of_one, check_ns_consistency, check_ns_edge, check_fourier_slope]

    results = []
    for check in checks:
        result = check()
        level = logging.INFO if result.passed else logging.WARNING
        logger.log(level, f"{result.name}: deviation {result.max_deviation:.3e} (tol {result.tolerance:.1e})")
        results.append(result)
    return results
