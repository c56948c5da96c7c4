"""Semantic exception hierarchy shared by all modules."""


class PolydiscError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PolydiscError, ValueError):
    """Input outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at (or numerically on top of) a pole."""

    def __init__(self, msg, at=None):
        super().__init__(msg)
        self.at = at


class SingularityError(DomainError):
    """A matrix that must be inverted is numerically singular."""


class DegenerateProblemError(PolydiscError):
    """The product relation y_j*y_{n-j} = C(n,j)^2 q collapses the problem;
    the caller should take the diagonal route instead."""


class MarginalProblemError(PolydiscError):
    """The two-point problem sits exactly on the feasibility boundary
    (sup-norm equals |lambda0|); the strict construction refuses it."""


class InfeasibleError(PolydiscError):
    """Interpolation data admits no Schur-class solution."""


class ConstructionError(PolydiscError):
    """A constructed object failed its own verification contract."""
