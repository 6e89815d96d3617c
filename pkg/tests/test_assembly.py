"""Tests for assembled S̃ and Ñ and the pointwise flat-arc operators."""

import warnings

import numpy as np
import pytest
from scipy import integrate

from arcscatter.errors import DomainError, QuadratureError
from arcscatter.geometry import flat_segment, perturbed_flat
from arcscatter.models import CosineSeries, OperatorKind
from arcscatter.operators import (
    assemble_N,
    assemble_N_parts,
    assemble_S,
    flat_unweighted,
    n0_matrix,
    principal_value,
    symm_matrix,
)
from arcscatter.operators.flat import adaptive_quad


SMOOTH_MODES = 16
REFERENCE_SIZE = 512


def _applied(assemble, size: int) -> np.ndarray:
    """Leading output modes of the operator applied to f_m = 2^{−m}, m < 16."""
    density = np.zeros(size)
    density[:SMOOTH_MODES] = 0.5 ** np.arange(SMOOTH_MODES)
    return (assemble(perturbed_flat(), 5.0, size).matrix.entries @ density)[: 2 * SMOOTH_MODES]


def _convergence_rate(assemble, coarse: int, floor: float) -> float:
    """log₂ of the error ratio between N = coarse and 2·coarse against N = 512."""
    reference = _applied(assemble, REFERENCE_SIZE)
    scale = np.linalg.norm(reference)
    errors = [np.linalg.norm(_applied(assemble, size) - reference) for size in (coarse, 2 * coarse)]
    return float(np.log2(errors[0] / max(errors[1], floor * scale)))


class TestAssembleS:
    """Tests for the weighted single-layer operator."""

    def test_flat_laplace_is_symm(self):
        """Test S̃ = S̃₀ on the unit segment at k = 0."""
        op = assemble_S(flat_segment(), 0.0, 16)
        np.testing.assert_allclose(op.matrix.entries, symm_matrix(16).entries, atol=1e-12)

    def test_flat_scaled_segment(self):
        """Test S̃e₀ = h(ln2 − ln h)/2·e₀ and S̃e_n = h/(2n)·e_n."""
        h = 0.5
        diag = np.diag(assemble_S(flat_segment(h), 0.0, 16).matrix.entries).real
        assert diag[0] == pytest.approx(h * (np.log(2) - np.log(h)) / 2)
        np.testing.assert_allclose(diag[1:], h / (2 * np.arange(1, 16)), rtol=1e-12)

    def test_metadata(self):
        """Test the assembled operator records its inputs."""
        arc = perturbed_flat()
        op = assemble_S(arc, 2.0, 12)
        assert op.kind == OperatorKind.S_TILDE
        assert op.size == 12
        assert op.k == 2.0
        assert op.arc == arc
        assert op.matrix.codomain_offset == 1

    @pytest.mark.parametrize("coarse", [32, 64])
    def test_spectral_self_convergence(self, coarse):
        """Test doubling N cuts the error in S̃f by at least 2⁸ on the perturbed arc at k = 5."""
        assert _convergence_rate(assemble_S, coarse, floor=1e-14) >= 8

    def test_rejects_small_size(self):
        """Test N < 8 is rejected."""
        with pytest.raises(DomainError):
            assemble_S(flat_segment(), 1.0, 4)

    def test_rejects_negative_k(self):
        """Test k < 0 is rejected."""
        with pytest.raises(DomainError):
            assemble_S(flat_segment(), -1.0, 16)


class TestAssembleN:
    """Tests for the weighted hypersingular operator."""

    def test_flat_laplace_is_n0(self):
        """Test Ñ = Ñ₀ on the unit segment at k = 0."""
        op = assemble_N(flat_segment(), 0.0, 16)
        np.testing.assert_allclose(op.matrix.entries, n0_matrix(16).entries, atol=1e-11)

    def test_flat_scaled_segment(self):
        """Test Ñ = Ñ₀/h on a segment of half-length h at k = 0."""
        op = assemble_N(flat_segment(2.0), 0.0, 16)
        np.testing.assert_allclose(op.matrix.entries, n0_matrix(16).entries / 2, atol=1e-11)

    def test_regular_part_vanishes_at_zero_frequency(self):
        """Test Ñ^g = 0 at k = 0."""
        ng, _ = assemble_N_parts(perturbed_flat(), 0.0, 16)
        np.testing.assert_array_equal(ng.matrix.entries, 0)

    @pytest.mark.parametrize("coarse", [32, 64])
    def test_spectral_self_convergence(self, coarse):
        """Test doubling N cuts the error in Ñf by at least 2⁸ on the perturbed arc at k = 5."""
        assert _convergence_rate(assemble_N, coarse, floor=1e-12) >= 8

    def test_parts_sum(self):
        """Test Ñ = Ñ^g + Ñ^pv."""
        arc = perturbed_flat()
        ng, npv = assemble_N_parts(arc, 3.0, 24)
        full = assemble_N(arc, 3.0, 24)
        np.testing.assert_allclose(full.matrix.entries, ng.matrix.entries + npv.matrix.entries)
        assert full.kind == OperatorKind.N_TILDE
        assert ng.kind == OperatorKind.NG_PART
        assert npv.kind == OperatorKind.NPV_PART

    def test_apply(self):
        """Test applying Ñ to a cosine series."""
        op = assemble_N(flat_segment(), 0.0, 8).matrix
        result = op.apply(CosineSeries.basis(1, 8))
        expected = np.zeros(8)
        expected[1] = -1.0
        np.testing.assert_allclose(result.basis_coefficients(), expected, atol=1e-12)


class TestFlatUnweighted:
    """Tests for S₀ and N₀ evaluated by adaptive quadrature."""

    def test_s0_of_one_at_midpoint(self):
        """Test S₀[1](0) = 1/π."""
        assert flat_unweighted("S0_param", lambda s: 1.0, 0.0) == pytest.approx(1 / np.pi, abs=1e-10)

    def test_n0_of_one(self):
        """Test N₀[1](x) = −1/(π(1 − x²))."""
        assert flat_unweighted("N0_param", lambda s: 1.0, 0.0) == pytest.approx(-1 / np.pi, abs=1e-10)
        assert flat_unweighted("N0_param", lambda s: 1.0, 0.5) == pytest.approx(-4 / (3 * np.pi), abs=1e-10)

    def test_n0_of_linear_density(self):
        """Test N₀[s](x) with an exact derivative."""
        x = 0.3
        value = flat_unweighted("N0_param", lambda s: s, x, derivative=lambda s: 1.0)
        expected = (2 * x / (x**2 - 1) + np.log((1 - x) / (1 + x))) / (2 * np.pi)
        assert value == pytest.approx(expected, abs=1e-10)

    def test_rejects_endpoint(self):
        """Test |x| ≥ 1 is rejected."""
        with pytest.raises(DomainError):
            flat_unweighted("S0_param", lambda s: 1.0, 1.0)


class TestQuadrature:
    """Tests for the quadrature helpers."""

    @pytest.mark.parametrize("x", [0.3, -0.4, 0.0])
    def test_principal_value_of_constant(self, x):
        """Test p.v.∫ ds/(s − x) = ln((1 − x)/(1 + x))."""
        assert principal_value(lambda s: 1.0, x) == pytest.approx(np.log((1 - x) / (1 + x)), abs=1e-12)

    def test_adaptive_quad(self):
        """Test ∫₀^π sin = 2."""
        assert adaptive_quad(np.sin, 0.0, np.pi) == pytest.approx(2.0, abs=1e-13)

    def test_empty_interval(self):
        """Test a zero-length interval."""
        assert adaptive_quad(np.sin, 1.0, 1.0) == 0.0

    def test_divergent_integral_raises(self):
        """Test a non-integrable singularity is reported."""
        with pytest.raises(QuadratureError):
            adaptive_quad(lambda s: 1.0 / s**2, 0.0, 1.0)

    def test_divergence_warning_raises_despite_small_error(self, monkeypatch):
        """Test a divergence warning raises even when quad reports a tiny error estimate."""

        def divergent_quad(func, a, b, **kwargs):
            warnings.warn("The integral is probably divergent, or slowly convergent.", integrate.IntegrationWarning)
            return -1.0, 1e-12

        monkeypatch.setattr(integrate, "quad", divergent_quad)
        with pytest.raises(QuadratureError, match="divergent"):
            adaptive_quad(np.sin, 0.0, 1.0)

    def test_subdivision_limit_retried(self, monkeypatch):
        """Test a subdivision-limit warning is retried once at relaxed tolerance."""
        calls = []

        def flaky_quad(func, a, b, **kwargs):
            calls.append(kwargs["epsrel"])
            if len(calls) == 1:
                warnings.warn("The maximum number of subdivisions (400) has been achieved.", integrate.IntegrationWarning)
            return 2.0, 1e-12

        monkeypatch.setattr(integrate, "quad", flaky_quad)
        assert adaptive_quad(np.sin, 0.0, np.pi) == 2.0
        assert len(calls) == 2
        assert calls[1] > calls[0]

    def test_persistent_roundoff_raises(self, monkeypatch):
        """Test a warning that survives the retry raises."""

        def roundoff_quad(func, a, b, **kwargs):
            warnings.warn("The occurrence of roundoff error is detected.", integrate.IntegrationWarning)
            return 0.5, 1e-12

        monkeypatch.setattr(integrate, "quad", roundoff_quad)
        with pytest.raises(QuadratureError, match="roundoff"):
            adaptive_quad(np.cos, 0.0, 1.0)
