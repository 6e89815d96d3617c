"""Tests for scattering problems and the integral equation solves."""

import numpy as np
import pytest
from scipy import special

from arcscatter.errors import ConvergenceError, DomainError
from arcscatter.geometry import circular_arc, flat_segment, perturbed_flat
from arcscatter.models import BoundaryCondition, CosineSeries, Formulation
from arcscatter.solver import (
    PlaneWave,
    ResidualCounter,
    ScatteringProblem,
    boundary_data,
    direct_solve,
    gmres_solve,
    solve,
    system_matrices,
)


def _iterations(problem, formulation, tol=1e-8):
    try:
        return solve(problem, formulation, tol=tol).iterations
    except ConvergenceError as e:
        return e.result.iterations


class TestPlaneWave:
    """Tests for the incident plane wave."""

    def test_from_angle(self):
        """Test the direction of a wave at π/2."""
        wave = PlaneWave.from_angle(np.pi / 2)
        np.testing.assert_allclose(wave.direction, [0.0, 1.0], atol=1e-15)

    def test_rejects_non_unit_direction(self):
        """Test d must be a unit vector."""
        with pytest.raises(DomainError):
            PlaneWave((1.0, 1.0))

    def test_value(self):
        """Test u_inc = A·exp(ik d·x)."""
        wave = PlaneWave((1.0, 0.0), amplitude=2.0)
        value = wave.value(3.0, np.array([[0.5, 7.0]]))
        np.testing.assert_allclose(value, [2.0 * np.exp(1.5j)])


class TestScatteringProblem:
    """Tests for problem validation."""

    def test_rejects_negative_k(self):
        """Test k < 0 is rejected."""
        with pytest.raises(DomainError):
            ScatteringProblem(flat_segment(), -1.0)

    def test_rejects_nan_k(self):
        """Test a non-finite k is rejected."""
        with pytest.raises(DomainError):
            ScatteringProblem(flat_segment(), float("nan"))

    def test_rejects_small_size(self):
        """Test N < 8 is rejected."""
        with pytest.raises(DomainError):
            ScatteringProblem(flat_segment(), 1.0, size=4)

    def test_bc_from_string(self):
        """Test boundary conditions accept their string values."""
        problem = ScatteringProblem(flat_segment(), 1.0, bc="neumann")
        assert problem.bc == BoundaryCondition.NEUMANN


class TestBoundaryData:
    """Tests for f̃ and g̃."""

    def test_dirichlet_jacobi_anger(self):
        """Test f̃ = −e^{ik cosθ} on the unit segment."""
        k = 3.0
        data = boundary_data(ScatteringProblem(flat_segment(), k, size=32))
        m = np.arange(32)
        np.testing.assert_allclose(data.coefficients, -2 * (1j**m) * special.jv(m, k), atol=1e-13)

    def test_laplace_dirichlet_is_constant(self):
        """Test k = 0 gives f̃ = −1."""
        data = boundary_data(ScatteringProblem(flat_segment(), 0.0, size=16))
        assert data.coefficients[0] == pytest.approx(-2.0)
        np.testing.assert_allclose(data.coefficients[1:], 0.0, atol=1e-14)

    def test_neumann_grazing_incidence_vanishes(self):
        """Test a wave along the flat segment has no normal derivative."""
        data = boundary_data(ScatteringProblem(flat_segment(), 3.0, bc="neumann", size=16))
        np.testing.assert_allclose(data.coefficients, 0.0, atol=1e-14)

    def test_neumann_normal_incidence(self):
        """Test g̃ = −ik for a wave hitting the flat segment head on."""
        problem = ScatteringProblem(flat_segment(), 2.0, bc="neumann", incident=PlaneWave((0.0, 1.0)), size=16)
        data = boundary_data(problem)
        assert data.coefficients[0] == pytest.approx(-4.0j)
        np.testing.assert_allclose(data.coefficients[1:], 0.0, atol=1e-14)


class TestLinearSolvers:
    """Tests for the GMRES and LU wrappers."""

    def test_residual_counter(self):
        """Test the callback records residuals."""
        counter = ResidualCounter()
        counter(0.5)
        counter(0.1)
        assert counter.count == 2
        assert counter.residuals == [0.5, 0.1]

    def test_gmres_diagonal(self):
        """Test GMRES solves a diagonal system."""
        matrix = np.diag(np.arange(1.0, 6.0)).astype(complex)
        rhs = np.ones(5, dtype=complex)
        solution = gmres_solve(matrix, rhs, 1e-12, 5)
        assert solution.converged
        np.testing.assert_allclose(solution.x, 1 / np.arange(1.0, 6.0), atol=1e-10)
        assert 1 <= solution.iterations <= 5

    def test_direct(self):
        """Test LU reports zero iterations and its residual."""
        matrix = np.array([[2.0, 1.0], [0.0, 3.0]], dtype=complex)
        solution = direct_solve(matrix, np.array([3.0, 3.0], dtype=complex))
        np.testing.assert_allclose(solution.x, [1.0, 1.0])
        assert solution.iterations == 0
        assert solution.residual_history[0] < 1e-15


class TestSolve:
    """Tests for the formulations."""

    def test_laplace_first_kind(self):
        """Test S̃₀φ̃ = c·e₀ has φ̃ = 2c/ln2·e₀."""
        c = 0.7
        data = CosineSeries.from_basis(np.array([c] + [0.0] * 15))
        problem = ScatteringProblem(flat_segment(), 0.0, size=16)
        for method in ("direct", "gmres"):
            result = solve(problem, Formulation.FIRST_KIND_S, method=method, data=data)
            f = result.density.basis_coefficients()
            assert f[0] == pytest.approx(2 * c / np.log(2))
            np.testing.assert_allclose(f[1:], 0.0, atol=1e-12)

    def test_zero_data(self):
        """Test zero boundary data gives the zero density without iterating."""
        problem = ScatteringProblem(perturbed_flat(), 4.0, incident=PlaneWave(amplitude=0.0), size=16)
        result = solve(problem)
        assert result.iterations == 0
        np.testing.assert_array_equal(result.density.coefficients, 0)
        np.testing.assert_array_equal(result.physical_density.coefficients, 0)

    def test_gmres_matches_lu(self):
        """Test the iterative and direct paths agree."""
        problem = ScatteringProblem(perturbed_flat(), 5.0, size=64)
        iterative = solve(problem, tol=1e-10)
        direct = solve(problem, method="direct")
        a, b = iterative.density.coefficients, direct.density.coefficients
        assert np.linalg.norm(a - b) <= 1e-8 * np.linalg.norm(b)

    def test_residual_history(self):
        """Test the history is non-increasing and ends below tol."""
        problem = ScatteringProblem(circular_arc(), 4.0, size=48)
        result = solve(problem, tol=1e-10)
        history = np.array(result.residual_history)
        assert result.converged
        assert len(history) == result.iterations
        assert np.all(np.diff(history) <= 1e-12)
        assert result.final_residual <= 1e-10

    def test_dirichlet_boundary_residual(self):
        """Test S̃φ̃ = f̃ holds for the second-kind Dirichlet density."""
        problem = ScatteringProblem(perturbed_flat(), 5.0, size=128)
        result = solve(problem, method="direct")
        assert result.boundary_residual is not None
        assert result.boundary_residual < 1e-7

    def test_second_kind_matches_first_kind_dirichlet(self):
        """Test ÑS̃φ̃ = Ñf̃ and S̃φ̃ = f̃ give the same density."""
        problem = ScatteringProblem(perturbed_flat(), 3.0, size=48)
        second = solve(problem, method="direct").density.coefficients
        first = solve(problem, Formulation.FIRST_KIND_S, method="direct").density.coefficients
        assert np.linalg.norm(second - first) <= 1e-8 * np.linalg.norm(first)

    def test_neumann_physical_density(self):
        """Test ψ̃ = S̃φ̃ for the second-kind Neumann solve."""
        problem = ScatteringProblem(perturbed_flat(), 3.0, bc="neumann", size=32)
        result = solve(problem, method="direct")
        _, s_entries, _ = system_matrices(problem, Formulation.SECOND_KIND_NS)
        np.testing.assert_allclose(
            result.physical_density.basis_coefficients(), s_entries @ result.density.basis_coefficients(), atol=1e-12
        )
        assert result.boundary_residual is None

    @pytest.mark.parametrize(
        "formulation, bc",
        [(Formulation.FIRST_KIND_S, "neumann"), (Formulation.FIRST_KIND_N, "dirichlet")],
    )
    def test_formulation_mismatch(self, formulation, bc):
        """Test first-kind formulations only accept their own boundary condition."""
        with pytest.raises(DomainError):
            solve(ScatteringProblem(flat_segment(), 1.0, bc=bc, size=16), formulation)

    @pytest.mark.parametrize("tol", [1e-15, 1e-2, 0.5])
    def test_tolerance_range(self, tol):
        """Test tolerances outside (1e−14, 1e−2) are rejected."""
        with pytest.raises(DomainError):
            solve(ScatteringProblem(flat_segment(), 1.0, size=16), tol=tol)

    def test_unknown_method(self):
        """Test an unknown solver method is rejected."""
        with pytest.raises(DomainError):
            solve(ScatteringProblem(flat_segment(), 1.0, size=16), method="qr")

    def test_convergence_error_carries_result(self):
        """Test a too small Krylov budget raises with the partial result."""
        problem = ScatteringProblem(perturbed_flat(), 5.0, size=32)
        with pytest.raises(ConvergenceError) as excinfo:
            solve(problem, tol=1e-12, max_iter=1)
        assert excinfo.value.result is not None
        assert not excinfo.value.result.converged

    def test_density_tail(self):
        """Test the density coefficients past mode N/2 fall below 1e−10 once the arc is resolved."""
        problem = ScatteringProblem(perturbed_flat(), 5.0, size=384)
        coefficients = np.abs(solve(problem, method="direct").density.coefficients)
        assert coefficients[192:].max() < 1e-10 * max(1.0, coefficients.max())

    def test_density_tail_converged_below_resolution(self):
        """Test mode 64 is a converged feature of the density, not truncation noise."""
        problems = [ScatteringProblem(perturbed_flat(), 5.0, size=n) for n in (128, 256)]
        modes = [np.abs(solve(problem, method="direct").density.coefficients) for problem in problems]
        assert modes[0][64] == pytest.approx(modes[1][64], rel=1e-2)
        assert modes[1][64] > 1e-6

    @pytest.mark.parametrize("k, size", [(20.0, 224), (40.0, 384)])
    def test_second_kind_needs_fewer_iterations(self, k, size):
        """Test ÑS̃φ̃ = g̃ takes fewer GMRES steps than S̃φ̃ = f̃ at the same resolving N."""
        arc = perturbed_flat()
        neumann = ScatteringProblem(arc, k, bc="neumann", size=size)
        dirichlet = ScatteringProblem(arc, k, size=size)
        assert _iterations(neumann, Formulation.SECOND_KIND_NS) < _iterations(dirichlet, Formulation.FIRST_KIND_S)

    def test_result_to_dict(self):
        """Test the JSON summary fields."""
        result = solve(ScatteringProblem(flat_segment(), 1.0, size=16), method="direct")
        data = result.to_dict()
        assert data["formulation"] == "ns"
        assert data["method"] == "direct"
        assert data["iterations"] == 0
        assert data["size"] == 16
