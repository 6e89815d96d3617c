"""Tests for wavenumber sweeps."""

import threading
import time

import pytest

from arcscatter.geometry import flat_segment, perturbed_flat
from arcscatter.models import BoundaryCondition
from arcscatter.processing import (
    SweepConfig,
    SweepMeasurement,
    SweepProcessor,
    SweepProgress,
    SweepResult,
    make_sweep_task,
    resolved_size,
)


def _fake_task(k: float) -> SweepMeasurement:
    if k == 13.0:
        raise RuntimeError("unlucky wavenumber")
    return SweepMeasurement(size=16, ns_iterations=int(k), baseline_iterations=2 * int(k), min_abs=0.2, max_abs=0.5)


class TestSweepResult:
    """Tests for SweepResult dataclass."""

    def test_creation_success(self):
        """Test creating a successful result."""
        measurement = _fake_task(3.0)
        result = SweepResult(k=3.0, success=True, measurement=measurement, duration_ms=12.0)
        assert result.success
        assert result.measurement.baseline_iterations == 6
        assert result.error is None

    def test_creation_failure(self):
        """Test creating a failed result."""
        result = SweepResult(k=1.0, success=False, error="diverged")
        assert not result.success
        assert result.measurement is None


class TestSweepProgress:
    """Tests for SweepProgress dataclass."""

    def test_progress_percent(self):
        """Test progress percentage calculation."""
        assert SweepProgress(total=8, processed=2).progress_percent == 25.0

    def test_progress_percent_zero_total(self):
        """Test progress with zero total."""
        assert SweepProgress(total=0).progress_percent == 0.0


class TestSweepProcessor:
    """Tests for SweepProcessor."""

    def test_sequential(self):
        """Test a sequential sweep in k order."""
        results = SweepProcessor(_fake_task).run([5.0, 1.0, 3.0])
        assert [r.k for r in results] == [1.0, 3.0, 5.0]
        assert all(r.success for r in results)

    def test_failure_captured(self):
        """Test a failing task does not stop the sweep."""
        results = SweepProcessor(_fake_task).run([1.0, 13.0, 2.0])
        failed = [r for r in results if not r.success]
        assert len(failed) == 1
        assert failed[0].k == 13.0
        assert "unlucky" in failed[0].error

    def test_parallel_order(self):
        """Test parallel results come back sorted by k regardless of completion order."""

        def slow_for_small_k(k: float) -> SweepMeasurement:
            time.sleep(0.05 / k)
            return _fake_task(k)

        results = SweepProcessor(slow_for_small_k).run([1.0, 2.0, 4.0, 8.0], SweepConfig(workers=4))
        assert [r.k for r in results] == [1.0, 2.0, 4.0, 8.0]

    def test_parallel_uses_threads(self):
        """Test workers > 1 runs tasks on several threads."""
        threads = set()

        def record(k: float) -> SweepMeasurement:
            threads.add(threading.get_ident())
            time.sleep(0.02)
            return _fake_task(k)

        SweepProcessor(record).run([1.0, 2.0, 3.0, 4.0], SweepConfig(workers=2))
        assert len(threads) >= 2

    def test_callbacks(self):
        """Test progress and result callbacks."""
        seen_results = []
        seen_progress = []
        config = SweepConfig(on_result=seen_results.append, on_progress=lambda p: seen_progress.append(p.processed))
        processor = SweepProcessor(_fake_task)
        processor.run([1.0, 2.0], config)
        assert len(seen_results) == 2
        assert seen_progress[-1] == 2
        assert processor.progress.succeeded == 2

    def test_stop(self):
        """Test a stop request ends a sequential sweep early."""
        processor = SweepProcessor(_fake_task)
        config = SweepConfig(on_result=lambda r: processor.stop())
        results = processor.run([1.0, 2.0, 3.0], config)
        assert len(results) == 1


class TestSweepTask:
    """Tests for the default sweep task."""

    def test_resolved_size(self):
        """Test the wavelength-adaptive resolution."""
        assert resolved_size(10.0, 64, adaptive=False) == 64
        assert resolved_size(10.0, 64, adaptive=True) == 144
        assert resolved_size(0.5, 128, adaptive=True) == 128

    def test_neumann_task(self):
        """Test one Neumann measurement on a perturbed arc."""
        task = make_sweep_task(perturbed_flat(), BoundaryCondition.NEUMANN, 32)
        measurement = task(3.0)
        assert measurement.size == 32
        assert measurement.ns_iterations > 0
        assert measurement.baseline_iterations > 0
        assert 0 < measurement.min_abs <= measurement.max_abs

    def test_dirichlet_task_through_processor(self):
        """Test a two-point Dirichlet sweep end to end."""
        task = make_sweep_task(flat_segment(), BoundaryCondition.DIRICHLET, 16, tol=1e-8)
        results = SweepProcessor(task).run([2.0, 1.0])
        assert [r.k for r in results] == [1.0, 2.0]
        assert all(r.success for r in results)

    @pytest.mark.parametrize("adaptive, expected", [(False, 16), (True, 80)])
    def test_adaptive_task_size(self, adaptive, expected):
        """Test the task reports the resolution it used."""
        task = make_sweep_task(flat_segment(), BoundaryCondition.DIRICHLET, 16, adaptive_size=adaptive)
        assert task(2.0).size == expected
