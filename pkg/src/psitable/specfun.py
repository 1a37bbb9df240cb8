"""Double-precision gamma, digamma and polygamma functions plus the small
combinatorial helpers used by the closed forms in :mod:`psitable.catalog`.

All functions are scalar, pure and reentrant.

Algorithms
----------
digamma
    Upward recurrence ``psi(x) = psi(x + 1) - 1/x`` until ``x >= 10``, then the
    asymptotic expansion with Bernoulli coefficients through ``x**-14``.
    Negative arguments use the reflection ``psi(x) = psi(1 - x) - pi cot(pi x)``.
    Near the positive root ``x0 = 1.4616...`` a Taylor series about ``x0`` keeps
    the relative error small where the recurrence would cancel.
polygamma
    Same shift-then-expand scheme (threshold 20, Bernoulli numbers through
    ``B_20``) with the recurrence term ``(-1)**n n! / x**(n+1)``.
log_gamma
    Stirling series with shift to ``x >= 15``; Taylor series in ``zeta(k) - 1``
    around ``x = 1`` and ``x = 2`` where ``ln Gamma`` vanishes.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "DomainError",
    "UnsupportedOrderError",
    "POLE_GUARD",
    "MAX_POLYGAMMA_ORDER",
    "euler_gamma",
    "log_gamma",
    "gamma",
    "digamma",
    "polygamma",
    "beta",
    "beta_incomplete_like",
    "harmonic",
    "alt_harmonic",
    "binomial",
    "double_factorial",
]

POLE_GUARD = 1e-9
MAX_POLYGAMMA_ORDER = 8

_EULER_GAMMA = 0.5772156649015329
_HALF_LOG_2PI = 0.9189385332046728
_GAMMA_OVERFLOW = 171.6243769563027

# B_2 .. B_20 (exact rationals; standard tabulated values).
_BERNOULLI = [
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
]

# psi asymptotic: psi(y) ~ ln y - 1/(2y) - sum B_2k / (2k y^2k), k = 1..7
_DIGAMMA_ASYM = [float(b / (2 * k)) for k, b in enumerate(_BERNOULLI[:7], start=1)]

# ln Gamma asymptotic: sum B_2k / (2k (2k - 1) y^(2k - 1)), k = 1..8
_STIRLING = [float(b / (2 * k * (2 * k - 1))) for k, b in enumerate(_BERNOULLI[:8], start=1)]

# Positive root of psi split into hi + lo, and Taylor coefficients
# psi^(k)(x0) / k!, k = 1..18 (computed with mpmath at 40 digits).
_PSI_ROOT_HI = 1.4616321449683622
_PSI_ROOT_LO = 9.549995429965697e-17
_PSI_ROOT_TAYLOR = [
    0.9676722454476212,
    -0.4427631689835921,
    0.258499760955651,
    -0.16394270544240652,
    0.10782405069126237,
    -0.07219956125645471,
    0.04880428816414311,
    -0.03316112647484736,
    0.022597648232218104,
    -0.01542476590494896,
    0.010538791616612175,
    -0.007204534386356869,
    0.004926781395729853,
    -0.003369801655439328,
    0.002305126326734928,
    -0.0015769367714301972,
    0.0010788252019162967,
    -0.0007380709389960052,
]

# zeta(k) - 1 for k = 2..25 (mpmath, 40 digits).
_ZETA_MINUS_ONE = [
    0.6449340668482264,
    0.2020569031595943,
    0.08232323371113819,
    0.03692775514336993,
    0.01734306198444914,
    0.008349277381922827,
    0.00407735619794434,
    0.0020083928260822143,
    0.0009945751278180853,
    0.0004941886041194645,
    0.0002460865533080483,
    0.00012271334757848915,
    6.124813505870483e-05,
    3.058823630702049e-05,
    1.528225940865187e-05,
    7.637197637899763e-06,
    3.81729326499984e-06,
    1.908212716553939e-06,
    9.539620338727962e-07,
    4.769329867878064e-07,
    2.38450502727733e-07,
    1.1921992596531106e-07,
    5.960818905125948e-08,
    2.980350351465228e-08,
]


class DomainError(ValueError):
    """Argument outside the domain of a special function (including poles)."""


class UnsupportedOrderError(ValueError):
    """Polygamma order outside ``0..MAX_POLYGAMMA_ORDER``."""


def _real(x, name: str = "x") -> float:
    try:
        v = float(x)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name}={x!r} is not a real number") from exc
    if not math.isfinite(v):
        raise DomainError(f"{name}={v!r} is not finite")
    return v


def _check_pole(x: float, name: str = "x") -> None:
    if x <= POLE_GUARD and abs(x - round(x)) < POLE_GUARD:
        raise DomainError(f"{name}={x!r} is within {POLE_GUARD} of a pole")


def _cotpi(x: float) -> float:
    r = x - round(x)
    return math.cos(math.pi * r) / math.sin(math.pi * r)


def _sinpi(x: float) -> float:
    n = round(x)
    s = math.sin(math.pi * (x - n))
    return -s if n % 2 else s


def euler_gamma() -> float:
    """Euler-Mascheroni constant, ``lim (H_n - ln n)``."""
    return _EULER_GAMMA


def _lgamma_near_one(z: float) -> float:
    # ln Gamma(1 + z) + ln(1 + z) = z (1 - gamma) + sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k
    acc = 0.0
    zk = z * z
    for k, c in enumerate(_ZETA_MINUS_ONE, start=2):
        term = c * zk / k
        acc += term if k % 2 == 0 else -term
        zk *= z
    return z * (1.0 - _EULER_GAMMA) + acc


def _stirling(y: float) -> float:
    inv = 1.0 / y
    inv2 = inv * inv
    series = 0.0
    for c in reversed(_STIRLING):
        series = series * inv2 + c
    return (y - 0.5) * math.log(y) - y + _HALF_LOG_2PI + series * inv


def log_gamma(x) -> float:
    """Natural logarithm of ``Gamma(x)`` for ``x > 0``.

    Raises
    ------
    DomainError
        If ``x`` is not positive or lies within the pole guard of zero.
    """
    x = _real(x)
    if x <= 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    _check_pole(x)
    if x == 1.0 or x == 2.0:
        return 0.0
    if 0.5 <= x < 1.5:
        z = x - 1.0
        return _lgamma_near_one(z) - math.log1p(z)
    if 1.5 <= x < 2.5:
        return _lgamma_near_one(x - 2.0)
    if x >= 15.0:
        return _stirling(x)
    n = math.ceil(15.0 - x)
    prod = 1.0
    for k in range(n):
        prod *= x + k
    return _stirling(x + n) - math.log(prod)


def gamma(x) -> float:
    """Gamma function for real ``x`` away from the non-positive integers.

    Positive arguments go through :func:`log_gamma` (integers are exact
    factorials); negative ones through the reflection rule.

    Raises
    ------
    DomainError
        Within the pole guard of ``0, -1, -2, ...``.
    OverflowError
        For ``x`` above about 171.62, where the result exceeds double range.
    """
    x = _real(x)
    _check_pole(x)
    if x > _GAMMA_OVERFLOW:
        raise OverflowError(f"gamma({x!r}) overflows double precision")
    if x > 0.0:
        if x == int(x):
            return float(math.factorial(int(x) - 1))
        return math.exp(log_gamma(x))
    s = _sinpi(x)
    if 1.0 - x <= _GAMMA_OVERFLOW:
        return math.pi / (s * gamma(1.0 - x))
    mag = math.log(math.pi) - math.log(abs(s)) - log_gamma(1.0 - x)
    return math.copysign(math.exp(mag), s)


def _digamma_asymptotic(y: float) -> float:
    inv2 = 1.0 / (y * y)
    series = 0.0
    for c in reversed(_DIGAMMA_ASYM):
        series = series * inv2 + c
    return math.log(y) - 0.5 / y - series * inv2


def digamma(x) -> float:
    """Digamma function ``psi(x) = Gamma'(x) / Gamma(x)``.

    Raises
    ------
    DomainError
        Within the pole guard of a non-positive integer.
    """
    x = _real(x)
    _check_pole(x)
    if x < 0.0:
        return digamma(1.0 - x) - math.pi * _cotpi(x)
    z = (x - _PSI_ROOT_HI) - _PSI_ROOT_LO
    if abs(z) < 0.15:
        acc = 0.0
        for c in reversed(_PSI_ROOT_TAYLOR):
            acc = (acc + c) * z
        return acc
    shift = 0.0
    while x < 10.0:
        shift += 1.0 / x
        x += 1.0
    return _digamma_asymptotic(x) - shift


def _polygamma_coeffs(n: int) -> list[float]:
    return [
        float(b * math.factorial(2 * k + n - 1) / math.factorial(2 * k))
        for k, b in enumerate(_BERNOULLI, start=1)
    ]


_POLYGAMMA_COEFFS = {n: _polygamma_coeffs(n) for n in range(1, MAX_POLYGAMMA_ORDER + 1)}


def polygamma(n, x) -> float:
    """``n``-th derivative of :func:`digamma`, for ``0 <= n <= 8``.

    ``polygamma(0, x)`` is ``digamma(x)``. Arguments below 20 are shifted
    upward with the recurrence, which also covers negative non-integer ``x``.

    Raises
    ------
    UnsupportedOrderError
        If ``n`` is not an integer in ``0..8``.
    DomainError
        Within the pole guard of a non-positive integer.
    """
    if isinstance(n, bool) or int(n) != n or not 0 <= n <= MAX_POLYGAMMA_ORDER:
        raise UnsupportedOrderError(f"polygamma order must be an integer in 0..8, got {n!r}")
    n = int(n)
    if n == 0:
        return digamma(x)
    x = _real(x)
    _check_pole(x)

    sign = 1.0 if n % 2 else -1.0
    nfact = math.factorial(n)

    terms = []
    while x < 20.0:
        terms.append(x ** -(n + 1))
        x += 1.0
    head = math.fsum(reversed(terms))

    inv = 1.0 / x
    inv2 = inv * inv
    series = 0.0
    for c in reversed(_POLYGAMMA_COEFFS[n]):
        series = series * inv2 + c
    xn = x**n
    tail = math.factorial(n - 1) / xn + nfact * inv / (2.0 * xn) + series * inv2 / xn
    return sign * (tail + nfact * head)


def beta(a, b) -> float:
    """Beta function ``B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)`` for ``a, b > 0``."""
    a = _real(a, "a")
    b = _real(b, "b")
    if a <= 0.0 or b <= 0.0:
        raise DomainError(f"beta requires a, b > 0, got a={a!r}, b={b!r}")
    return math.exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b))


def beta_incomplete_like(x) -> float:
    """``int_0^1 t**(x-1) / (1 + t) dt``, evaluated as
    ``(psi((x + 1)/2) - psi(x/2)) / 2``."""
    x = _real(x)
    if x <= 0.0:
        raise DomainError(f"beta_incomplete_like requires x > 0, got {x!r}")
    return 0.5 * (digamma(0.5 * (x + 1.0)) - digamma(0.5 * x))


def _nonneg_int(n, name: str = "n") -> int:
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {n!r}")
    return int(n)


def harmonic(n) -> float:
    """Harmonic number ``H_n = sum_{k=1}^n 1/k``; ``H_0 = 0``."""
    n = _nonneg_int(n)
    total = 0.0
    for k in range(1, n + 1):
        total += 1.0 / k
    return total


def alt_harmonic(n) -> float:
    """Alternating harmonic sum ``sum_{k=1}^n (-1)**(k-1) / k``."""
    n = _nonneg_int(n)
    total = 0.0
    for k in range(1, n + 1):
        total += (1.0 if k % 2 else -1.0) / k
    return total


def binomial(n, k) -> float:
    """Binomial coefficient for ``0 <= k <= n <= 60``, exact in double precision."""
    n = _nonneg_int(n)
    k = _nonneg_int(k, "k")
    if not k <= n <= 60:
        raise DomainError(f"binomial requires 0 <= k <= n <= 60, got n={n}, k={k}")
    return float(math.comb(n, k))


def double_factorial(n) -> float:
    """``n!! = n (n - 2) (n - 4) ...`` for ``0 <= n <= 300``; ``0!! = 1``."""
    n = _nonneg_int(n)
    if n > 300:
        raise DomainError(f"double_factorial requires n <= 300, got {n}")
    # exact integer product, rounded once
    return float(math.prod(range(n, 0, -2)))
