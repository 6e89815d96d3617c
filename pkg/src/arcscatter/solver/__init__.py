"""Scattering problems, solves and field evaluation."""

from arcscatter.solver.fields import evaluate_field, exclusion_margin, far_field
from arcscatter.solver.krylov import LinearSolution, ResidualCounter, direct_solve, gmres_solve
from arcscatter.solver.problem import PlaneWave, ScatteringProblem, boundary_data
from arcscatter.solver.scattering import solve, system_matrices

__all__ = [
    "LinearSolution",
    "PlaneWave",
    "ResidualCounter",
    "ScatteringProblem",
    "boundary_data",
    "direct_solve",
    "evaluate_field",
    "exclusion_margin",
    "far_field",
    "gmres_solve",
    "solve",
    "system_matrices",
]
