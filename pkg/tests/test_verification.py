"""Tests for the verification suite."""

import pytest

from arcscatter.analysis import run_verification
from arcscatter.analysis.verification import (
    check_eigenfunction,
    check_flat_calderon,
    check_j0_inverse,
    check_s0_t0,
)


class TestVerification:
    """Tests for run_verification."""

    def test_quick_suite_passes(self):
        """Test every matrix identity holds at N = 32."""
        checks = run_verification(32, include_reference=False)
        failed = [c.name for c in checks if not c.passed]
        assert failed == []
        assert len(checks) == 11

    def test_full_suite_passes(self):
        """Test the flat-arc oracles as well."""
        checks = run_verification(32)
        assert all(c.passed for c in checks)
        assert {"ns_edge", "fourier_slope", "s0_of_one"} <= {c.name for c in checks}

    def test_names_unique(self):
        """Test check names identify rows in verify.csv."""
        names = [c.name for c in run_verification(16, include_reference=False)]
        assert len(names) == len(set(names))

    @pytest.mark.parametrize("size", [16, 64])
    def test_identities_at_several_sizes(self, size):
        """Test identities independent of the truncation order."""
        assert check_s0_t0(size).passed
        assert check_j0_inverse(size).passed
        assert check_flat_calderon(size).passed

    def test_eigenfunction_check(self):
        """Test the recurrence eigenvector check reports a tiny residual."""
        result = check_eigenfunction()
        assert result.passed
        assert result.max_deviation < result.tolerance
