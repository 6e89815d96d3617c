"""Wavenumber sweeps run over a worker pool."""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

from arcscatter.analysis.spectra import calderon_product, spectrum
from arcscatter.errors import ConvergenceError
from arcscatter.models.core import BoundaryCondition, Formulation
from arcscatter.solver.problem import PlaneWave, ScatteringProblem
from arcscatter.solver.scattering import solve

if TYPE_CHECKING:
    from arcscatter.geometry.arcs import Arc

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepMeasurement:
    """Numbers produced by one sweep task.

    Attributes:
        size: Resolution N used at this wavenumber.
        ns_iterations: GMRES iterations for the second-kind ÑS̃ solve.
        baseline_iterations: GMRES iterations for the first-kind baseline.
        min_abs: Smallest |eigenvalue| of ÑS̃.
        max_abs: Largest |eigenvalue| of ÑS̃.
    """

    size: int
    ns_iterations: int
    baseline_iterations: int
    min_abs: float
    max_abs: float


@dataclass
class SweepResult:
    """Result of one wavenumber in a sweep.

    Attributes:
        k: Wavenumber.
        success: Whether the task completed.
        measurement: Task output when successful.
        duration_ms: Processing time in milliseconds.
        error: Error message if failed.
    """

    k: float
    success: bool
    measurement: SweepMeasurement | None = None
    duration_ms: float = 0.0
    error: str | None = None


@dataclass
class SweepProgress:
    """Progress information for a sweep.

    Attributes:
        total: Number of wavenumbers.
        processed: Wavenumbers finished.
        succeeded: Successful tasks.
        failed: Failed tasks.
        current_k: Most recently finished wavenumber.
        start_time: Start timestamp.
        elapsed_ms: Elapsed time in milliseconds.
        estimated_remaining_ms: Estimated remaining time.
    """

    total: int
    processed: int = 0
    succeeded: int = 0
    failed: int = 0
    current_k: float | None = None
    start_time: float = 0.0
    elapsed_ms: float = 0.0
    estimated_remaining_ms: float = 0.0

    @property
    def progress_percent(self) -> float:
        """Get progress as percentage."""
        return (self.processed / self.total * 100) if self.total > 0 else 0.0


@dataclass
class SweepConfig:
    """Configuration for a sweep.

    Attributes:
        workers: Number of parallel workers; 1 runs sequentially.
        on_progress: Callback for progress updates.
        on_result: Callback when a wavenumber completes.
    """

    workers: int = 1
    on_progress: Callable[[SweepProgress], None] | None = None
    on_result: Callable[[SweepResult], None] | None = None


class SweepProcessor:
    """Runs one task per wavenumber and collects the results in k order.

    Example:
        processor = SweepProcessor(make_sweep_task(perturbed_flat(), BoundaryCondition.NEUMANN, 128))
        results = processor.run([1.0, 5.0, 10.0], SweepConfig(workers=4))
    """

    def __init__(self, run_func: Callable[[float], SweepMeasurement]) -> None:
        """Initialize the processor.

        Args:
            run_func: Function computing the measurement for one wavenumber.
        """
        self.run_func = run_func
        self._progress = SweepProgress(total=0)
        self._stop_requested = False

    def _run_one(self, k: float) -> SweepResult:
        start_time = time.time()
        try:
            measurement = self.run_func(k)
            return SweepResult(k=k, success=True, measurement=measurement, duration_ms=(time.time() - start_time) * 1000)
        except Exception as e:
            logger.exception(f"Sweep task failed at k={k}: {e}")
            return SweepResult(k=k, success=False, duration_ms=(time.time() - start_time) * 1000, error=str(e))

    def _update_progress(self, result: SweepResult, config: SweepConfig) -> None:
        self._progress.processed += 1
        self._progress.current_k = result.k
        if result.success:
            self._progress.succeeded += 1
        else:
            self._progress.failed += 1

        self._progress.elapsed_ms = (time.time() - self._progress.start_time) * 1000
        avg_time = self._progress.elapsed_ms / self._progress.processed
        self._progress.estimated_remaining_ms = avg_time * (self._progress.total - self._progress.processed)

        if config.on_result:
            config.on_result(result)
        if config.on_progress:
            config.on_progress(self._progress)

    def run(self, k_values: list[float], config: SweepConfig | None = None) -> list[SweepResult]:
        """Run the sweep.

        Args:
            k_values: Wavenumbers to process.
            config: Sweep configuration.

        Returns:
            Results sorted by wavenumber, independent of completion order.
        """
        config = config or SweepConfig()
        self._stop_requested = False
        self._progress = SweepProgress(total=len(k_values), start_time=time.time())
        if config.on_progress:
            config.on_progress(self._progress)

        if config.workers > 1:
            results = self._run_parallel(k_values, config)
        else:
            results = self._run_sequential(k_values, config)

        logger.info(f"Sweep complete: {self._progress.succeeded} succeeded, {self._progress.failed} failed")
        return sorted(results, key=lambda r: r.k)

    def _run_sequential(self, k_values: list[float], config: SweepConfig) -> list[SweepResult]:
        results: list[SweepResult] = []
        for k in k_values:
            if self._stop_requested:
                break
            result = self._run_one(k)
            results.append(result)
            self._update_progress(result, config)
        return results

    def _run_parallel(self, k_values: list[float], config: SweepConfig) -> list[SweepResult]:
        results: list[SweepResult] = []
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            future_to_k = {executor.submit(self._run_one, k): k for k in k_values}
            for future in as_completed(future_to_k):
                if self._stop_requested:
                    executor.shutdown(wait=False, cancel_futures=True)
                    break
                k = future_to_k[future]
                try:
                    result = future.result()
                except Exception as e:
                    result = SweepResult(k=k, success=False, error=str(e))
                results.append(result)
                self._update_progress(result, config)
        return results

    def stop(self) -> None:
        """Request the sweep to stop after the current task."""
        self._stop_requested = True

    @property
    def progress(self) -> SweepProgress:
        """Get current progress."""
        return self._progress


def resolved_size(k: float, size: int, adaptive: bool) -> int:
    """N itself, or max(N, ⌈8k⌉ + 64) when the resolution follows the wavelength."""
    return max(size, math.ceil(8 * k) + 64) if adaptive else size


def _iterations(problem: ScatteringProblem, formulation: Formulation, tol: float, max_iter: int | None) -> int:
    try:
        return solve(problem, formulation, tol=tol, max_iter=max_iter).iterations
    except ConvergenceError as e:
        logger.warning(f"{formulation.value} solve at k={problem.k} did not converge")
        return e.result.iterations if e.result is not None else -1


def make_sweep_task(
    arc: Arc,
    bc: BoundaryCondition,
    size: int,
    *,
    tol: float = 1e-8,
    max_iter: int | None = None,
    incident: PlaneWave | None = None,
    adaptive_size: bool = False,
) -> Callable[[float], SweepMeasurement]:
    """Build the default sweep task.

    The task solves the second-kind equation and the first-kind baseline of
    the same boundary condition, and records the eigenvalue bounds of ÑS̃.
    """
    incident = incident or PlaneWave()
    baseline = Formulation.FIRST_KIND_S if bc == BoundaryCondition.DIRICHLET else Formulation.FIRST_KIND_N

    def task(k: float) -> SweepMeasurement:
        n = resolved_size(k, size, adaptive_size)
        problem = ScatteringProblem(arc=arc, k=k, bc=bc, incident=incident, size=n)
        report = spectrum(calderon_product(arc, k, n), k=k)
        return SweepMeasurement(
            size=n,
            ns_iterations=_iterations(problem, Formulation.SECOND_KIND_NS, tol, max_iter),
            baseline_iterations=_iterations(problem, baseline, tol, max_iter),
            min_abs=report.min_abs,
            max_abs=report.max_abs,
        )

    return task


__all__ = [
    "SweepConfig",
    "SweepMeasurement",
    "SweepProcessor",
    "SweepProgress",
    "SweepResult",
    "make_sweep_task",
    "resolved_size",
]
