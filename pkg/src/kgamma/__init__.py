"""Generalized k-gamma / p-k-gamma special functions, an independent
quadrature oracle, and a verification harness for the associated
Turán-type and Hölder-type inequalities."""

from .functions import (
    EvalPoint,
    k_gamma,
    k_gamma_deriv,
    k_polygamma,
    k_polygamma_magnitude_fractional,
    k_zeta,
    pk_gamma,
    pk_gamma_deriv,
    pk_zeta,
)
from .harness import GridSpec, HolderPair, InequalityCheck, scan_grid
from .policy import AccuracyPolicy, ComputationOverflowError, DomainError

__version__ = "0.1.0"

__all__ = [
    "AccuracyPolicy",
    "ComputationOverflowError",
    "DomainError",
    "EvalPoint",
    "GridSpec",
    "HolderPair",
    "InequalityCheck",
    "k_gamma",
    "k_gamma_deriv",
    "k_polygamma",
    "k_polygamma_magnitude_fractional",
    "k_zeta",
    "pk_gamma",
    "pk_gamma_deriv",
    "pk_zeta",
    "scan_grid",
]
