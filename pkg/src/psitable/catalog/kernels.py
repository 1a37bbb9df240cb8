"""Vectorised integrand kernels that stay accurate near removable
singularities and at the far ends of the double-exponential node sets.

Conventions: ``x`` is an array of abscissae, ``xc`` the matching distance to
the right endpoint (``1 - x`` on ``[0, 1]``) supplied by the quadrature in
complement mode. All parameters are Python floats.
"""

from __future__ import annotations

import math

import numpy as np

# below this distance from the removable point the Taylor branches take over;
# just above it, forms where two poles cancel lose about eps/x (~2e-12)
TAYLOR_SWITCH = 1e-4


def log_x(x, xc):
    """``ln x`` on ``(0, 1)``, taken from ``log1p(-xc)`` where ``x`` is near 1."""
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(x < 0.5, np.log(x), np.log1p(-xc))


def sigmoid(y):
    """``e^y / (1 + e^y)`` without overflow for either sign of ``y``."""
    y = np.asarray(y, dtype=float)
    with np.errstate(over="ignore"):
        e = np.exp(-np.abs(y))
    return np.where(y >= 0, 1.0 / (1.0 + e), e / (1.0 + e))


def exp_diff(y, a, b):
    """``e^{-a y} - e^{-b y}`` for ``y >= 0``, factoring out the slower
    exponential so nothing overflows."""
    if a <= b:
        return -np.exp(-a * y) * np.expm1(-(b - a) * y)
    return np.exp(-b * y) * np.expm1(-(a - b) * y)


def _binom_series(alpha: float, n: int) -> np.ndarray:
    """Coefficients of ``(1 - u)**alpha`` in powers of ``u``."""
    c = np.empty(n)
    c[0] = 1.0
    for k in range(1, n):
        c[k] = -c[k - 1] * (alpha - k + 1) / k
    return c


def _horner(coeffs, u):
    acc = np.zeros_like(u)
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


def _e1(y):
    # expm1(y)/y through y^3
    return 1.0 + y * (0.5 + y * (1.0 / 6.0 + y / 24.0))


def pow_diff_ratio(x, xc, alpha: float, beta: float, c: float = 1.0):
    """``(x^alpha - x^beta) / (1 - x^c)`` on ``(0, 1)``.

    Away from ``x = 1`` both differences are formed with ``expm1`` after
    factoring out the larger power. Within ``TAYLOR_SWITCH`` of 1 the ratio of
    ``expm1`` terms is replaced by its cubic expansion in ``ln x``.
    """
    L = log_x(x, xc)
    d = beta - alpha
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        if alpha <= beta:
            num = -np.exp(alpha * L) * np.expm1(d * L)
        else:
            num = np.exp(beta * L) * np.expm1(-d * L)
        far = num / -np.expm1(c * L)
        near = np.exp(alpha * L) * (d / c) * _e1(d * L) / _e1(c * L)
    return np.where(xc < TAYLOR_SWITCH, near, far)


def log_ratio(x, xc, alpha: float, c: float, power: int = 1):
    """``x^alpha ln^power(x) / (1 - x^c)`` on ``(0, 1)``."""
    L = log_x(x, xc)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        den = -np.expm1(c * L)
        # ln x / (1 - x^c) -> -1/c at x = 1
        q = np.where(np.abs(c * L) < 1e-8, -(1.0 - 0.5 * c * L) / c, L / den)
        return np.exp(alpha * L) * L ** (power - 1) * q


def pow_log(x, xc, alpha: float, k: float, beta: float):
    """``x^alpha (1 - x^k)^beta ln x`` on ``(0, 1)``."""
    L = log_x(x, xc)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        base = xc if k == 1.0 else -np.expm1(k * L)
        return np.exp(alpha * L) * base**beta * L


def log_recip_plus(x, xc, p: float, q: float):
    """``x^{p-1}/ln x + x^{q-1}/(1 - x)`` on ``(0, 1)``.

    The two poles at ``x = 1`` cancel; within ``TAYLOR_SWITCH`` of 1 the sum
    is evaluated from its cubic expansion in ``u = 1 - x``.
    """
    L = log_x(x, xc)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        far = np.exp((p - 1.0) * L) / L + np.exp((q - 1.0) * L) / xc
    # 1/ln(1-u) = -(1/u) * G(u)
    g = np.array([1.0, -0.5, -1.0 / 12.0, -1.0 / 24.0, -19.0 / 720.0])
    A = _binom_series(p - 1.0, 5)
    B = _binom_series(q - 1.0, 5)
    AG = np.convolve(A, g)[:5]
    coeffs = B[1:] - AG[1:]
    near = _horner(coeffs, np.asarray(xc, dtype=float))
    return np.where(xc < TAYLOR_SWITCH, near, far)


def psi_rep(x, a: float):
    """``(e^{-x} - (1 + x)^{-a}) / x`` on ``(0, inf)``, with a cubic Taylor
    branch below ``TAYLOR_SWITCH``."""
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        far = (np.expm1(-x) - np.expm1(-a * np.log1p(x))) / x
    e = np.array([(-1.0) ** k / math.factorial(k) for k in range(5)])
    coeffs = e[1:] - _binom_neg(a, 5)[1:]
    near = _horner(coeffs, x)
    return np.where(x < TAYLOR_SWITCH, near, far)


def _binom_neg(a: float, n: int) -> np.ndarray:
    """Coefficients of ``(1 + x)**-a``."""
    c = np.empty(n)
    c[0] = 1.0
    for k in range(1, n):
        c[k] = c[k - 1] * (-a - k + 1) / k
    return c


def _bernoulli_poly(n: int, y: float) -> float:
    if n == 1:
        return y - 0.5
    if n == 2:
        return y * y - y + 1.0 / 6.0
    if n == 3:
        return y**3 - 1.5 * y * y + 0.5 * y
    if n == 4:
        return y**4 - 2.0 * y**3 + y * y - 1.0 / 30.0
    raise ValueError(n)


def exp_over_expm1(x, a: float):
    """``e^{-x}/x - e^{-a x}/(1 - e^{-x})`` on ``(0, inf)``.

    Near 0 the two ``1/x`` poles cancel; below ``TAYLOR_SWITCH`` the cubic
    expansion built from Bernoulli polynomials ``B_n(1 - a)`` is used.
    """
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        far = np.exp(-x) / x + np.exp(-a * x) / np.expm1(-x)
    coeffs = [
        ((-1.0) ** (n + 1) - _bernoulli_poly(n + 1, 1.0 - a)) / math.factorial(n + 1)
        for n in range(4)
    ]
    near = _horner(coeffs, x)
    return np.where(x < TAYLOR_SWITCH, near, far)
