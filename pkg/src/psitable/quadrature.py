"""Double-exponential quadrature on finite, half-infinite and infinite domains,
plus Cauchy principal values across a simple interior pole.

Each rule is the trapezoidal rule in an auxiliary variable ``t`` after a
change of variables that makes the integrand decay doubly exponentially:

* finite ``[a, b]``: ``x = mid + half * tanh(pi/2 sinh t)`` (tanh-sinh)
* half line ``[a, inf)``: ``x = a + exp(pi/2 sinh t)`` (exp-sinh)
* whole line: ``x = sinh(pi/2 sinh t)`` (sinh-sinh)

Level ``k`` uses step ``2**-k``; each level reuses every node of the previous
one. Integration stops when two successive levels agree to the requested
tolerance.

Integrands are called either on scalars or, with ``vectorized=True``, on
numpy arrays of abscissae. With ``complement=True`` they receive a second
argument holding the distance to the relevant endpoint (``b - x`` on a finite
interval, ``x - a`` on a half line), computed without cancellation, so that
singular factors such as ``(1 - x)**-0.9`` stay accurate where ``x`` itself
has rounded to the endpoint.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

__all__ = [
    "Status",
    "QuadOptions",
    "QuadResult",
    "IntegrandError",
    "IntegrationDomain",
    "SingularitySpec",
    "integrate_finite",
    "integrate_half_line",
    "integrate_whole_line",
    "integrate_pv",
    "integrate",
    "combine",
    "integrate_sum",
]

_HALF_PI = 0.5 * math.pi
_EPS = np.finfo(float).eps
_MIN_LEVEL = 3
# |pi/2 sinh t| caps: keeps exp(-2s) and exp(s) inside double range
_S_MAX = {"finite": 350.0, "half": 700.0, "whole": 700.0}


class Status(str, enum.Enum):
    CONVERGED = "converged"
    MAX_DEPTH = "max_depth"
    SUSPECT = "suspect"


_SEVERITY = {Status.CONVERGED: 0, Status.MAX_DEPTH: 1, Status.SUSPECT: 2}


@dataclass(frozen=True)
class QuadOptions:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_level: int = 12

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if not 3 <= self.max_level <= 16:
            raise ValueError(f"max_level must be in [3, 16], got {self.max_level}")

    def tolerance(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    evaluations: int
    status: Status

    @property
    def converged(self) -> bool:
        return self.status is Status.CONVERGED


class IntegrandError(ArithmeticError):
    """The integrand returned a non-finite value at an abscissa."""

    def __init__(self, abscissa: float, value: float):
        super().__init__(f"integrand is not finite at x={abscissa!r} (value {value!r})")
        self.abscissa = abscissa
        self.value = value


@dataclass(frozen=True)
class IntegrationDomain:
    """``finite`` ``[a, b]``, ``half_line`` ``[a, inf)`` or ``whole_line``."""

    kind: str
    a: float = -math.inf
    b: float = math.inf

    def __post_init__(self):
        if self.kind == "finite":
            if not (math.isfinite(self.a) and math.isfinite(self.b) and self.a < self.b):
                raise ValueError(f"finite domain needs finite a < b, got [{self.a}, {self.b}]")
        elif self.kind == "half_line":
            if not math.isfinite(self.a):
                raise ValueError("half_line domain needs a finite left endpoint")
            object.__setattr__(self, "b", math.inf)
        elif self.kind == "whole_line":
            object.__setattr__(self, "a", -math.inf)
            object.__setattr__(self, "b", math.inf)
        else:
            raise ValueError(f"unknown domain kind {self.kind!r}")

    @classmethod
    def finite(cls, a: float, b: float) -> "IntegrationDomain":
        return cls("finite", float(a), float(b))

    @classmethod
    def half_line(cls, a: float = 0.0) -> "IntegrationDomain":
        return cls("half_line", float(a))

    @classmethod
    def whole_line(cls) -> "IntegrationDomain":
        return cls("whole_line")

    def contains_interior(self, c: float) -> bool:
        return self.a < c < self.b

    def describe(self) -> str:
        if self.kind == "finite":
            return f"[{self.a:g}, {self.b:g}]"
        if self.kind == "half_line":
            return f"[{self.a:g}, inf)"
        return "(-inf, inf)"


@dataclass(frozen=True)
class SingularitySpec:
    """Endpoint annotations (``"none"`` or ``"integrable"``) and an optional
    interior principal-value pole."""

    left: str = "none"
    right: str = "none"
    pv_pole: Optional[float] = None

    def __post_init__(self):
        for side in (self.left, self.right):
            if side not in ("none", "integrable"):
                raise ValueError(f"endpoint behaviour must be 'none' or 'integrable', got {side!r}")


# --------------------------------------------------------------------------
# node tables


@lru_cache(maxsize=None)
def _t_grid(kind: str, level: int) -> np.ndarray:
    t_max = math.asinh(_S_MAX[kind] / _HALF_PI)
    if level == 0:
        n = int(math.floor(t_max))
        t = np.arange(-n, n + 1, dtype=float)
    else:
        h = 2.0**-level
        n = int(math.floor((t_max / h - 1) / 2))
        pos = (2 * np.arange(n + 1) + 1) * h
        t = np.concatenate([-pos[::-1], pos])
    t.setflags(write=False)
    return t


@lru_cache(maxsize=None)
def _finite_nodes(level: int):
    """Normalised tanh-sinh nodes: side (-1 near a, +1 near b, 0 centre),
    endpoint distance on [-1, 1] and weight."""
    t = _t_grid("finite", level)
    s = _HALF_PI * np.sinh(np.abs(t))
    e = np.exp(-2.0 * s)
    dist = 2.0 * e / (1.0 + e)
    w = _HALF_PI * np.cosh(t) * 4.0 * e / (1.0 + e) ** 2
    side = np.sign(t)
    for arr in (t, side, dist, w):
        arr.setflags(write=False)
    return t, side, dist, w


@lru_cache(maxsize=None)
def _half_nodes(level: int):
    t = _t_grid("half", level)
    s = _HALF_PI * np.sinh(t)
    u = np.exp(s)
    w = _HALF_PI * np.cosh(t) * u
    for arr in (u, w):
        arr.setflags(write=False)
    return t, u, w


@lru_cache(maxsize=None)
def _whole_nodes(level: int):
    t = _t_grid("whole", level)
    s = _HALF_PI * np.sinh(t)
    x = np.sinh(s)
    w = _HALF_PI * np.cosh(t) * np.cosh(s)
    for arr in (x, w):
        arr.setflags(write=False)
    return t, x, w


# --------------------------------------------------------------------------
# evaluation


def _evaluate(f, x: np.ndarray, xc: Optional[np.ndarray], vectorized: bool) -> np.ndarray:
    args = (x,) if xc is None else (x, xc)
    if vectorized:
        with np.errstate(all="ignore"):
            y = np.asarray(f(*args), dtype=float)
        if y.shape != x.shape:
            y = np.broadcast_to(y, x.shape).astype(float)
    elif xc is None:
        y = np.array([f(float(xi)) for xi in x], dtype=float)
    else:
        y = np.array([f(float(xi), float(ci)) for xi, ci in zip(x, xc)], dtype=float)
    bad = ~np.isfinite(y)
    if bad.any():
        i = int(np.argmax(bad))
        raise IntegrandError(float(x[i]), float(y[i]))
    return y


def _tail_estimate(edge_t: np.ndarray, edge_wf: np.ndarray, h: float) -> float:
    """Neglected mass beyond the node window, extrapolated geometrically from
    the two outermost nodes on each side."""
    tail = 0.0
    for side in (edge_t < 0, edge_t > 0):
        if side.sum() < 2:
            continue
        order = np.argsort(np.abs(edge_t[side]))
        last, prev = np.abs(edge_wf[side][order[-1]]), np.abs(edge_wf[side][order[-2]])
        if last == 0.0:
            continue
        ratio = last / prev if prev > 0 else math.inf
        if ratio >= 1.0:
            # integrand not decaying at the window edge
            tail += 10.0 * last
        else:
            tail += h * last * ratio / (1.0 - ratio)
    return tail


def _run_levels(level_terms: Callable[[int], tuple], opts: QuadOptions, t_max: float) -> QuadResult:
    """Drive the level refinement.

    ``level_terms(k)`` returns ``(t, wf, n_evals)`` for the nodes new at level
    ``k``: their ``t`` values and weighted integrand values (unit step).
    """
    total = 0.0
    total_abs = 0.0
    edge_t = np.empty(0)
    edge_wf = np.empty(0)
    evaluations = 0
    prev = None
    diffs: list[float] = []
    nonshrink = 0
    status = Status.MAX_DEPTH
    value = err = tail = 0.0

    for level in range(opts.max_level + 1):
        t, wf, n = level_terms(level)
        evaluations += n
        total += math.fsum(wf)
        total_abs += float(np.sum(np.abs(wf)))
        near = np.abs(t) > t_max - 1.0
        edge_t = np.concatenate([edge_t, t[near]])
        edge_wf = np.concatenate([edge_wf, wf[near]])
        h = 2.0**-level
        value = total * h
        roundoff = 32.0 * _EPS * total_abs * h
        tail = _tail_estimate(edge_t, edge_wf, h)
        if prev is None:
            prev = value
            continue
        diff = abs(value - prev)
        err = max(diff, roundoff) + tail
        if diffs and diff >= diffs[-1] and diff > roundoff:
            nonshrink += 1
        else:
            nonshrink = 0
        diffs.append(diff)
        prev = value
        if level >= _MIN_LEVEL and err <= opts.tolerance(value):
            status = Status.CONVERGED
            break
        if nonshrink >= 3:
            status = Status.SUSPECT
            break
    else:
        if tail > opts.tolerance(value):
            status = Status.SUSPECT
    return QuadResult(float(value), float(err), max(evaluations, 1), status)


def _opts(opts: Optional[QuadOptions]) -> QuadOptions:
    return QuadOptions() if opts is None else opts


def integrate_finite(
    f,
    a: float,
    b: float,
    spec: Optional[SingularitySpec] = None,
    opts: Optional[QuadOptions] = None,
    *,
    vectorized: bool = False,
    complement: bool = False,
) -> QuadResult:
    """Tanh-sinh quadrature of ``f`` over ``[a, b]``.

    The endpoints are never sampled, so integrable singularities there are
    allowed. With ``complement=True`` the integrand is called as
    ``f(x, b - x)``.

    Raises
    ------
    IntegrandError
        If ``f`` is not finite at a generated abscissa.
    """
    opts = _opts(opts)
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise ValueError(f"integrate_finite needs finite a < b, got [{a}, {b}]")
    if spec is not None and spec.pv_pole is not None:
        raise ValueError("use integrate_pv for an interior pole")
    half = 0.5 * (b - a)
    width = b - a

    def terms(level):
        t, side, dist, w = _finite_nodes(level)
        d = half * dist
        right = side >= 0
        x = np.where(right, b - d, a + d)
        xc = np.where(right, d, width - d)
        keep = (d > 0) & (x != a)
        if not complement:
            keep &= x != b
        x, xc, wk, tk = x[keep], xc[keep], w[keep], t[keep]
        y = _evaluate(f, x, xc if complement else None, vectorized)
        return tk, half * wk * y, int(x.size)

    return _run_levels(terms, opts, math.asinh(_S_MAX["finite"] / _HALF_PI))


def integrate_half_line(
    f,
    a: float = 0.0,
    spec: Optional[SingularitySpec] = None,
    opts: Optional[QuadOptions] = None,
    *,
    vectorized: bool = False,
    complement: bool = False,
) -> QuadResult:
    """Exp-sinh quadrature of ``f`` over ``[a, inf)``.

    ``f`` may have an integrable singularity at ``a`` and must decay at
    infinity. With ``complement=True`` it is called as ``f(x, x - a)``.
    Non-decay at the edge of the node window, or level differences that stop
    shrinking, give ``status == "suspect"``.
    """
    opts = _opts(opts)
    a = float(a)
    if not math.isfinite(a):
        raise ValueError("integrate_half_line needs a finite left endpoint")
    if spec is not None and spec.pv_pole is not None:
        raise ValueError("use integrate_pv for an interior pole")

    def terms(level):
        t, u, w = _half_nodes(level)
        x = a + u
        keep = np.isfinite(x)
        if not complement:
            keep &= x != a
        x, uk, wk, tk = x[keep], u[keep], w[keep], t[keep]
        y = _evaluate(f, x, uk if complement else None, vectorized)
        return tk, wk * y, int(x.size)

    return _run_levels(terms, opts, math.asinh(_S_MAX["half"] / _HALF_PI))


def integrate_whole_line(
    f,
    spec: Optional[SingularitySpec] = None,
    opts: Optional[QuadOptions] = None,
    *,
    vectorized: bool = False,
) -> QuadResult:
    """Sinh-sinh quadrature of ``f`` over the real line."""
    opts = _opts(opts)
    if spec is not None and spec.pv_pole is not None:
        raise ValueError("use integrate_pv for an interior pole")

    def terms(level):
        t, x, w = _whole_nodes(level)
        y = _evaluate(f, x, None, vectorized)
        return t, w * y, int(x.size)

    return _run_levels(terms, opts, math.asinh(_S_MAX["whole"] / _HALF_PI))


# --------------------------------------------------------------------------
# composites


def combine(results: Sequence[QuadResult], opts: Optional[QuadOptions] = None) -> QuadResult:
    """Sum of independent pieces. Converged only if every piece converged and
    the summed error estimate meets the tolerance of the summed value."""
    opts = _opts(opts)
    value = math.fsum(r.value for r in results)
    err = sum(r.error_estimate for r in results)
    evals = sum(r.evaluations for r in results)
    status = max((r.status for r in results), key=_SEVERITY.__getitem__)
    if status is Status.CONVERGED and err > opts.tolerance(value):
        status = Status.MAX_DEPTH
    return QuadResult(value, err, evals, status)


def integrate_sum(pieces: Sequence[Callable[[QuadOptions], QuadResult]], opts: Optional[QuadOptions] = None) -> QuadResult:
    """Integrate a sum of pieces, each a callable ``opts -> QuadResult``.

    If the pieces cancel so that their errors exceed the tolerance of the
    total, they are re-run once with an absolute tolerance derived from the
    first-pass total.
    """
    opts = _opts(opts)
    results = [p(opts) for p in pieces]
    out = combine(results, opts)
    if out.status is Status.MAX_DEPTH and all(r.converged for r in results):
        share = opts.tolerance(out.value) / len(pieces)
        tight = QuadOptions(abs_tol=share, rel_tol=min(opts.rel_tol, 1e-15), max_level=opts.max_level)
        results = [p(tight) for p in pieces]
        retry = combine(results, opts)
        retry = QuadResult(retry.value, retry.error_estimate, retry.evaluations + out.evaluations, retry.status)
        out = retry
    return out


def integrate_pv(
    f,
    domain: IntegrationDomain,
    pole: float,
    opts: Optional[QuadOptions] = None,
    *,
    vectorized: bool = False,
) -> QuadResult:
    """Cauchy principal value of ``f`` across a simple pole at ``pole``.

    The symmetric neighbourhood ``(pole - r, pole + r)`` is folded onto
    ``(0, r]`` as ``g(u) = f(pole + u) + f(pole - u)``, which cancels the
    ``1/u`` term; ``r`` is half the distance from the pole to the nearest
    finite boundary. The remaining pieces are ordinary integrals. The folded
    offsets are snapped so that ``pole + u`` and ``pole - u`` are exactly
    symmetric in floating point.

    Raises
    ------
    ValueError
        If the pole is not strictly inside the domain.
    """
    opts = _opts(opts)
    c = float(pole)
    if not domain.contains_interior(c):
        raise ValueError(f"pole {c!r} is not interior to {domain.describe()}")
    dist = min(c - domain.a, domain.b - c)
    r = 0.5 * dist if math.isfinite(dist) else 0.5 * max(1.0, abs(c))

    def g(u):
        u = np.asarray(u, dtype=float)
        us = (c + u) - c
        live = us > 0
        out = np.zeros_like(u)
        if live.any():
            up = c + us[live]
            dn = c - us[live]
            if vectorized:
                fu = np.asarray(f(up), dtype=float)
                fd = np.asarray(f(dn), dtype=float)
            else:
                fu = np.array([f(float(v)) for v in up])
                fd = np.array([f(float(v)) for v in dn])
            out[live] = fu + fd
        return out

    pieces = [lambda o: _double_count(integrate_finite(g, 0.0, r, opts=o, vectorized=True))]
    if domain.kind == "finite" or domain.kind == "half_line":
        pieces.append(lambda o: integrate_finite(f, domain.a, c - r, opts=o, vectorized=vectorized))
    else:
        # (-inf, c - r] mirrored onto [r - c, inf)
        pieces.append(lambda o: integrate_half_line(lambda y: f(-y), r - c, opts=o, vectorized=vectorized))
    if domain.kind == "finite":
        pieces.append(lambda o: integrate_finite(f, c + r, domain.b, opts=o, vectorized=vectorized))
    else:
        pieces.append(lambda o: integrate_half_line(f, c + r, opts=o, vectorized=vectorized))
    return integrate_sum(pieces, opts)


def _double_count(r: QuadResult) -> QuadResult:
    # each folded node evaluates f twice
    return QuadResult(r.value, r.error_estimate, 2 * r.evaluations, r.status)


def integrate(
    f,
    domain: IntegrationDomain,
    spec: Optional[SingularitySpec] = None,
    opts: Optional[QuadOptions] = None,
    *,
    vectorized: bool = False,
    complement: bool = False,
) -> QuadResult:
    """Dispatch on the domain kind, routing an annotated pole to :func:`integrate_pv`."""
    spec = spec or SingularitySpec()
    if spec.pv_pole is not None:
        return integrate_pv(f, domain, spec.pv_pole, opts, vectorized=vectorized)
    if domain.kind == "finite":
        return integrate_finite(f, domain.a, domain.b, spec, opts, vectorized=vectorized, complement=complement)
    if domain.kind == "half_line":
        return integrate_half_line(f, domain.a, spec, opts, vectorized=vectorized, complement=complement)
    return integrate_whole_line(f, spec, opts, vectorized=vectorized)
