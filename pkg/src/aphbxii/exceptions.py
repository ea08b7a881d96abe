"""Exception hierarchy for the aphbxii package."""


class AphbxiiError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(AphbxiiError, ValueError):
    """A distribution parameter is outside its valid domain."""


class SupportError(AphbxiiError, ValueError):
    """An evaluation point lies outside the distribution support."""


class RangeError(AphbxiiError, ValueError):
    """A quantity is requested where it is undefined (e.g. hrf with S=0)."""


class UnboundedQuantileError(AphbxiiError, ValueError):
    """quantile(1) requested; the support is unbounded above."""


class MomentExistenceError(AphbxiiError, ValueError):
    """A moment of order r >= phi*eta does not exist."""


class SeriesConvergenceError(AphbxiiError, ValueError):
    """Series evaluation requested outside its convergence region."""


class IntegrationError(AphbxiiError, RuntimeError):
    """Adaptive quadrature failed to converge."""


class FitError(AphbxiiError, RuntimeError):
    """Maximum-likelihood fitting failed for every starting point."""


class DataError(AphbxiiError, ValueError):
    """Invalid observations (nonpositive, non-numeric, or empty)."""
