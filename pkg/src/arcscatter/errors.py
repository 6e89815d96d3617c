"""Exception types raised by arcscatter."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from arcscatter.models.results import SolveResult


class ArcScatterError(Exception):
    """Base class for all arcscatter failures."""


class DomainError(ArcScatterError, ValueError):
    """An argument lies outside the domain of the requested function."""


class ResonanceError(DomainError):
    """The eigenfunction recurrence hit a vanishing denominator."""


class QuadratureError(ArcScatterError, RuntimeError):
    """Adaptive quadrature failed to reach its tolerance."""


class ConvergenceError(ArcScatterError, RuntimeError):
    """An iterative solve stopped before reaching its tolerance.

    Attributes:
        result: The partial solve result, including the residual history.
    """

    def __init__(self, message: str, result: SolveResult | None = None) -> None:
        super().__init__(message)
        self.result = result


class EigensolverError(ArcScatterError, RuntimeError):
    """The dense eigenvalue or singular value solver failed."""
