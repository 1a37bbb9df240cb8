"""Digamma-family special functions, double-exponential quadrature, and an
executable catalog of definite integrals with closed forms in terms of psi."""

from psitable.specfun import (
    DomainError,
    UnsupportedOrderError,
    alt_harmonic,
    beta,
    beta_incomplete_like,
    binomial,
    digamma,
    double_factorial,
    euler_gamma,
    gamma,
    harmonic,
    log_gamma,
    polygamma,
)
from psitable.quadrature import (
    IntegrandError,
    QuadOptions,
    QuadResult,
    integrate_finite,
    integrate_half_line,
    integrate_pv,
    integrate_whole_line,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "UnsupportedOrderError",
    "alt_harmonic",
    "beta",
    "beta_incomplete_like",
    "binomial",
    "digamma",
    "double_factorial",
    "euler_gamma",
    "gamma",
    "harmonic",
    "log_gamma",
    "polygamma",
    "IntegrandError",
    "QuadOptions",
    "QuadResult",
    "integrate_finite",
    "integrate_half_line",
    "integrate_pv",
    "integrate_whole_line",
]
