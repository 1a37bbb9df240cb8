"""The registry of integral identities.

Each entry pairs a vectorised integrand with a closed form built on
:mod:`psitable.specfun`. Integrands on ``[0, 1]`` receive ``xc = 1 - x`` and
those on ``[a, inf)`` receive ``xc = x - a``, so factors that vanish at the
endpoints are formed without cancellation. Parameter ranges are the sampled
ranges: each sits at least 0.05 inside the convergence domain.
"""

from __future__ import annotations

import math
from types import MappingProxyType

import numpy as np

from ..quadrature import (
    IntegrationDomain,
    QuadOptions,
    SingularitySpec,
    integrate_finite,
    integrate_half_line,
    integrate_sum,
)
from ..specfun import (
    alt_harmonic,
    beta,
    binomial,
    digamma as psi,
    double_factorial,
    euler_gamma,
    harmonic,
    log_gamma,
    polygamma,
)
from . import kernels as K
from .model import Constraint, Entry, ParamSpec

G = euler_gamma()
LN2 = math.log(2.0)
LN3 = math.log(3.0)
PI = math.pi
R3 = math.sqrt(3.0)

UNIT = IntegrationDomain.finite(0.0, 1.0)
HALF = IntegrationDomain.half_line(0.0)
LINE = IntegrationDomain.whole_line()

LEFT = SingularitySpec(left="integrable")
RIGHT = SingularitySpec(right="integrable")
BOTH = SingularitySpec(left="integrable", right="integrable")

_REGISTRY: dict[str, Entry] = {}


def _cot_pi(x: float) -> float:
    return 1.0 / math.tan(PI * x)


def _span(lo: float, hi: float, *names: str) -> tuple[ParamSpec, ...]:
    return tuple(ParamSpec(n, lo, hi) for n in names)


def _n(*choices: int) -> tuple[ParamSpec, ...]:
    return (ParamSpec.discrete("n", *choices),)


def _where(description: str, test, *names: str) -> Constraint:
    return Constraint(description, test, names)


def _add(id, section, formula, domain, integrand, closed, params=(), **kw):
    if id in _REGISTRY:
        raise ValueError(f"duplicate entry id {id!r}")
    kw.setdefault("anchor", f"Gradshteyn & Ryzhik {id}")
    _REGISTRY[id] = Entry(
        id=id, section=section, formula=formula, domain=domain,
        integrand=integrand, closed_form=closed, params=tuple(params), **kw,
    )


def _log1m(x, xc):
    """``ln(1 - x)`` on ``(0, 1)``."""
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(x < 0.5, np.log1p(-x), np.log(xc))


# ---------------------------------------------------------------- first representation

S2 = "first-representation"

_add("3.429", S2, "int_0^inf [e^-x - (1+x)^-a] dx/x = psi(a)", HALF,
     lambda s, x, xc: K.psi_rep(x, s["a"]),
     lambda s: psi(s["a"]), _span(0.1, 10, "a"),
     flags=("stable-kernel@0",))

_add("3.434.2", S2, "int_0^inf (e^-ax - e^-bx) dx/x = ln(b/a)", HALF,
     lambda s, x, xc: K.exp_diff(x, s["a"], s["b"]) / x,
     lambda s: math.log(s["b"] / s["a"]), _span(0.1, 10, "a", "b"))

_add("4.331.1", S2, "int_0^inf e^-ax ln x dx = -(gamma + ln a)/a", HALF,
     lambda s, x, xc: np.exp(-s["a"] * x) * np.log(x),
     lambda s: -(G + math.log(s["a"])) / s["a"], _span(0.1, 10, "a"),
     singularities=LEFT, flags=("fake-parameter",))

_add("3.435.3", S2, "int_0^inf (e^-x - 1/(1+x)) dx/x = -gamma", HALF,
     lambda s, x, xc: K.psi_rep(x, 1.0),
     lambda s: -G, flags=("stable-kernel@0",))


def _frac_log_form(x, xc, q):
    # [x - (1 - ln x)^-q] / (x ln x)
    L = K.log_x(x, xc)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        return (np.expm1(L) - np.expm1(-q * np.log1p(-L))) / (x * L)


_W_SPLIT = 8.0


def _route_4_275_2(s, opts):
    q = s["q"]
    x0 = math.exp(-_W_SPLIT)
    near_one = lambda o: integrate_finite(
        lambda x, xc: _frac_log_form(x, xc, q), x0, 1.0, opts=o, vectorized=True, complement=True)
    # x in (0, x0] is w = -ln x in [W, inf), where the integrand is -[e^-w - (1+w)^-q]/w
    tail = lambda o: integrate_half_line(
        lambda w: -K.psi_rep(w, q), _W_SPLIT, opts=o, vectorized=True)
    return integrate_sum([near_one, tail], opts)


_add("4.275.2", S2, "int_0^1 [x - (1 - ln x)^-q] dx/(x ln x) = -psi(q)", UNIT,
     lambda s, x, xc: _frac_log_form(x, xc, s["q"]),
     lambda s: -psi(s["q"]), _span(0.1, 10, "q"),
     singularities=BOTH, route=_route_4_275_2,
     flags=("both-endpoint-care", "custom-route"),
     notes=("Numerical route: the x-form on [e^-8, 1] plus the w = -ln x form on [8, inf). "
            "Near x = 0 the integrand spreads its mass over ln-scales that double precision "
            "cannot sample in x.",))


def _k_3_471_14(s, x, xc):
    L = K.log_x(x, xc)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        return (np.expm1(-xc / x) - np.expm1(s["a"] * L)) / (x * xc)


_add("3.471.14", S2, "int_0^1 (e^(1-1/t) - t^a) dt/(t(1-t)) = psi(a)", UNIT,
     _k_3_471_14, lambda s: psi(s["a"]), _span(0.1, 10, "a"), singularities=LEFT)

_add("3.435.4", S2, "int_0^inf (e^-bx - 1/(1+ax)) dx/x = ln(a/b) - gamma", HALF,
     lambda s, x, xc: np.expm1(-s["b"] * x) / x + s["a"] / (1.0 + s["a"] * x),
     lambda s: math.log(s["a"] / s["b"]) - G, _span(0.1, 10, "a", "b"))


def _exp_pow_pair(p, q):
    def f(s, x, xc):
        with np.errstate(over="ignore"):
            return (np.expm1(-x**p) - np.expm1(-x**q)) / x
    return f


_add("3.476.2", S2, "int_0^inf (e^-x^p - e^-x^q) dx/x = (p - q) gamma/(pq)", HALF,
     lambda s, x, xc: _exp_pow_pair(s["p"], s["q"])(s, x, xc),
     lambda s: (s["p"] - s["q"]) * G / (s["p"] * s["q"]), _span(0.3, 5, "p", "q"))

for _id, _p, _q, _val, _txt in [
    ("3.463", 2, 1, G / 2, "gamma/2"),
    ("3.469.2", 4, 1, 3 * G / 4, "3 gamma/4"),
    ("3.469.3", 4, 2, G / 4, "gamma/4"),
]:
    _add(_id, S2, f"int_0^inf (e^-x^{_p} - e^-x^{_q}) dx/x = {_txt}", HALF,
         _exp_pow_pair(_p, _q), lambda s, v=_val: v, flags=("special-case",))

_add("3.475.3", S2, "int_0^inf (e^-x^(2^n) - e^-x) dx/x = (1 - 2^-n) gamma", HALF,
     lambda s, x, xc: _exp_pow_pair(2.0 ** s["n"], 1.0)(s, x, xc),
     lambda s: (1.0 - 2.0 ** -s["n"]) * G, _n(1, 2, 3), flags=("special-case",))

_add("3.476.1", S2, "int_0^inf (e^-ax^p - e^-bx^p) dx/x = (ln b - ln a)/p", HALF,
     lambda s, x, xc: K.exp_diff(x ** s["p"], s["a"], s["b"]) / x,
     lambda s: (math.log(s["b"]) - math.log(s["a"])) / s["p"],
     _span(0.2, 5, "a", "b") + _span(0.3, 4, "p"))

_add("3.427.1", S2, "int_0^inf (e^-x/x - e^-ax/(1 - e^-x)) dx = psi(a)", HALF,
     lambda s, x, xc: K.exp_over_expm1(x, s["a"]),
     lambda s: psi(s["a"]), _span(0.1, 10, "a"), flags=("stable-kernel@0",))

_add("3.427.2", S2, "int_0^inf (1/(1 - e^-x) - 1/x) e^-x dx = gamma", HALF,
     lambda s, x, xc: -K.exp_over_expm1(x, 1.0),
     lambda s: G, flags=("stable-kernel@0",))

_add("4.281.4", S2, "int_0^1 (1/ln t + t^(a-1)/(1-t)) dt = -psi(a)", UNIT,
     lambda s, x, xc: K.log_recip_plus(x, xc, 1.0, s["a"]),
     lambda s: -psi(s["a"]), _span(0.1, 10, "a"), singularities=LEFT,
     flags=("stable-kernel@1",))

_add("4.281.1", S2, "int_0^1 (1/ln t + 1/(1-t)) dt = gamma", UNIT,
     lambda s, x, xc: K.log_recip_plus(x, xc, 1.0, 1.0),
     lambda s: G, flags=("stable-kernel@1",))

_add("4.281.5", S2, "int_0^1 (x^(p-1)/ln x + x^(q-1)/(1-x)) dx = ln p - psi(q)", UNIT,
     lambda s, x, xc: K.log_recip_plus(x, xc, s["p"], s["q"]),
     lambda s: math.log(s["p"]) - psi(s["q"]), _span(0.1, 10, "p", "q"),
     singularities=LEFT, flags=("stable-kernel@1",))

# ---------------------------------------------------------------- digamma differences

S3 = "digamma-differences"


def _ratio(alpha, beta_, c=lambda s: 1.0):
    return lambda s, x, xc: K.pow_diff_ratio(x, xc, alpha(s), beta_(s), c(s))


_add("3.231.5", S3, "int_0^1 (x^(p-1) - x^(q-1))/(1-x) dx = psi(q) - psi(p)", UNIT,
     _ratio(lambda s: s["p"] - 1, lambda s: s["q"] - 1),
     lambda s: psi(s["q"]) - psi(s["p"]), _span(0.05, 20, "p", "q"),
     singularities=LEFT, flags=("stable-kernel@1",))

_add("3.265", S3, "int_0^1 (1 - x^(q-1))/(1-x) dx = gamma + psi(q)", UNIT,
     _ratio(lambda s: 0.0, lambda s: s["q"] - 1),
     lambda s: G + psi(s["q"]), _span(0.1, 10, "q"),
     singularities=LEFT, flags=("stable-kernel@1",))

_add("3.268.2", S3, "int_0^1 (1 - x^a) x^(b-1)/(1-x) dx = psi(a+b) - psi(b)", UNIT,
     _ratio(lambda s: s["b"] - 1, lambda s: s["a"] + s["b"] - 1),
     lambda s: psi(s["a"] + s["b"]) - psi(s["b"]), _span(0.1, 10, "a", "b"),
     singularities=LEFT, flags=("stable-kernel@1",))

_add("3.231.1", S3, "int_0^1 (x^(p-1) - x^-p)/(1-x) dx = pi cot(pi p)", UNIT,
     _ratio(lambda s: s["p"] - 1, lambda s: -s["p"]),
     lambda s: PI * _cot_pi(s["p"]), _span(0.05, 0.95, "p"),
     singularities=LEFT, flags=("stable-kernel@1",),
     notes=("Converges only for 0 < p < 1.",))

_add("3.231.3", S3, "int_0^1 (x^a - x^-a)/(1-x) dx = pi cot(pi a) - 1/a", UNIT,
     _ratio(lambda s: s["a"], lambda s: -s["a"]),
     lambda s: PI * _cot_pi(s["a"]) - 1.0 / s["a"], _span(0.05, 0.95, "a"),
     singularities=LEFT, flags=("stable-kernel@1",),
     notes=("Converges only for 0 < a < 1.",))

_add("3.244.3", S3, "int_0^1 (t^(q-1) - t^(p-1))/(1 - t^q) dt = (gamma + psi(p/q))/q", UNIT,
     _ratio(lambda s: s["q"] - 1, lambda s: s["p"] - 1, lambda s: s["q"]),
     lambda s: (G + psi(s["p"] / s["q"])) / s["q"], _span(0.2, 5, "p", "q"),
     singularities=LEFT, flags=("stable-kernel@1",))

_add("3.244.2", S3, "int_0^1 (x^(b-1) - x^(a-b-1))/(1 - x^a) dx = (pi/a) cot(pi b/a)", UNIT,
     _ratio(lambda s: s["b"] - 1, lambda s: s["a"] - s["b"] - 1, lambda s: s["a"]),
     lambda s: PI / s["a"] * _cot_pi(s["b"] / s["a"]),
     (ParamSpec("a", 1.0, 5.0), ParamSpec("b", 0.05, 4.75)),
     constraints=(_where("0.05 < b/a < 0.95", lambda s: 0.05 < s["b"] / s["a"] < 0.95, "a", "b"),),
     singularities=LEFT, flags=("stable-kernel@1",),
     notes=("Needs 0 < b < a. a is sampled from (1, 5) so that both endpoint exponents b - 1 "
            "and a - b - 1 stay above -0.95.",))

_add("3.269.1", S3, "int_0^1 (x^p - x^-p) x/(1 - x^2) dx = (pi/2) cot(p pi/2) - 1/p", UNIT,
     _ratio(lambda s: s["p"] + 1, lambda s: 1 - s["p"], lambda s: 2.0),
     lambda s: 0.5 * PI * _cot_pi(0.5 * s["p"]) - 1.0 / s["p"], _span(0.1, 1.9, "p"),
     constraints=(_where("|p - 1| >= 0.05", lambda s: abs(s["p"] - 1) >= 0.05, "p"),),
     singularities=LEFT, flags=("stable-kernel@1",),
     notes=("Converges for 0 < p < 2.",))

_add("3.269.3", S3, "int_0^1 (x^a - x^b)/(1 - x^2) dx = [psi((b+1)/2) - psi((a+1)/2)]/2", UNIT,
     _ratio(lambda s: s["a"], lambda s: s["b"], lambda s: 2.0),
     lambda s: 0.5 * (psi(0.5 * (s["b"] + 1)) - psi(0.5 * (s["a"] + 1))),
     _span(-0.9, 10, "a", "b"), singularities=LEFT, flags=("stable-kernel@1",),
     notes=("Converges for a, b > -1.",))

# ---------------------------------------------------------------- half line

S4 = "half-line"


def _k_3_219(s, x, xc):
    with np.errstate(over="ignore", divide="ignore"):
        y = np.log1p(1.0 / x)  # -ln(t/(1+t))
    return K.exp_diff(y, s["p"], s["q"]) / x


_add("3.219", S4, "int_0^inf [(t/(1+t))^p - (t/(1+t))^q] dt/t = psi(q) - psi(p)", HALF,
     _k_3_219, lambda s: psi(s["q"]) - psi(s["p"]), _span(0.1, 10, "p", "q"),
     singularities=LEFT)

_add("3.219b", S4, "int_0^inf [(1+t)^-p - (1+t)^-q] dt/t = psi(q) - psi(p)", HALF,
     lambda s, x, xc: K.exp_diff(np.log1p(x), s["p"], s["q"]) / x,
     lambda s: psi(s["q"]) - psi(s["p"]), _span(0.1, 10, "p", "q"),
     anchor="Gradshteyn & Ryzhik 3.219, second form",
     notes=("Second form of 3.219, obtained from the first by t -> 1/t.",))

_add("3.233", S4, "int_0^inf [1/(1+t) - (1+t)^-q] dt/t = psi(q) + gamma", HALF,
     lambda s, x, xc: K.exp_diff(np.log1p(x), 1.0, s["q"]) / x,
     lambda s: psi(s["q"]) + G, _span(0.1, 10, "q"))


def _k_3_235(s, x, xc):
    a, b = s["a"], s["b"]
    w = np.log1p(x)
    return np.exp((a - b) * w) * -np.expm1(-a * w) / x


_add("3.235", S4, "int_0^inf [(1+x)^a - 1]/(1+x)^b dx/x = psi(b) - psi(b-a)", HALF,
     _k_3_235, lambda s: psi(s["b"]) - psi(s["b"] - s["a"]),
     (ParamSpec("a", 0.1, 5.0), ParamSpec("b", 0.2, 15.0)),
     constraints=(_where("0.1 < b - a < 10", lambda s: 0.1 < s["b"] - s["a"] < 10, "a", "b"),),
     notes=("Needs b > a > 0.",))


def _route_3_231_6(s, opts):
    p, q = s["p"], s["q"]
    inner = lambda o: integrate_finite(
        lambda x, xc: K.pow_diff_ratio(x, xc, p - 1, q - 1), 0.0, 1.0,
        opts=o, vectorized=True, complement=True)
    # [1, inf) mapped by x -> 1/x onto (0, 1]
    outer = lambda o: integrate_finite(
        lambda y, yc: -K.pow_diff_ratio(y, yc, -p, -q), 0.0, 1.0,
        opts=o, vectorized=True, complement=True)
    return integrate_sum([inner, outer], opts)


def _k_3_231_6(s, x, xc):
    p, q = s["p"], s["q"]
    with np.errstate(divide="ignore", invalid="ignore"):
        return (x ** (p - 1) - x ** (q - 1)) / (1.0 - x)


_add("3.231.6", S4, "int_0^inf (x^(p-1) - x^(q-1))/(1-x) dx = pi (cot(pi p) - cot(pi q))", HALF,
     _k_3_231_6, lambda s: PI * (_cot_pi(s["p"]) - _cot_pi(s["q"])),
     _span(0.05, 0.95, "p", "q"), singularities=LEFT, route=_route_3_231_6,
     flags=("split@1", "stable-kernel@1"),
     notes=("Split at 1; the part over [1, inf) is mapped onto (0, 1] by x -> 1/x. "
            "Converges only for 0 < p, q < 1.",))

# ---------------------------------------------------------------- exponential scale

S5 = "exponential-scale"


def _softplus_neg(x):
    # ln(1 + e^-x)
    return np.logaddexp(0.0, -x)


_add("3.317.2", S5, "int_R [(1+e^-x)^-p - (1+e^-x)^-q] dx = psi(q) - psi(p)", LINE,
     lambda s, x, xc: K.exp_diff(_softplus_neg(x), s["p"], s["q"]),
     lambda s: psi(s["q"]) - psi(s["p"]), _span(0.1, 10, "p", "q"))

_add("3.317.1", S5, "int_R [(1+e^-x)^-1 - (1+e^-x)^-q] dx = psi(q) + gamma", LINE,
     lambda s, x, xc: K.exp_diff(_softplus_neg(x), 1.0, s["q"]),
     lambda s: psi(s["q"]) + G, _span(0.1, 10, "q"))


def _k_3_316(s, x, xc):
    p, q = s["p"], s["q"]
    w = _softplus_neg(x)
    return np.exp((p - q) * w) * -np.expm1(-p * w)


_add("3.316", S5, "int_R [(1+e^-x)^p - 1]/(1+e^-x)^q dx = psi(q) - psi(q-p)", LINE,
     _k_3_316, lambda s: psi(s["q"]) - psi(s["q"] - s["p"]),
     (ParamSpec("p", 0.1, 5.0), ParamSpec("q", 0.2, 15.0)),
     constraints=(_where("0.1 < q - p < 10", lambda s: 0.1 < s["q"] - s["p"] < 10, "p", "q"),),
     notes=("Needs q > p > 0.",))

_add("3.311.7", S5, "int_0^inf (e^-pt - e^-qt)/(1 - e^-t) dt = psi(q) - psi(p)", HALF,
     lambda s, x, xc: K.exp_diff(x, s["p"], s["q"]) / -np.expm1(-x),
     lambda s: psi(s["q"]) - psi(s["p"]), _span(0.1, 10, "p", "q"))


def _k_3_311_5(s, x, xc):
    v = s["nu"]
    return -np.exp((v - 1.0) * x) * np.expm1(-v * x) / np.expm1(-x)


_add("3.311.5", S5, "int_0^inf (1 - e^(nu t))/(e^t - 1) dt = psi(nu) + gamma + pi cot(pi nu)", HALF,
     _k_3_311_5, lambda s: psi(s["nu"]) + G + PI * _cot_pi(s["nu"]), _span(0.05, 0.95, "nu"),
     notes=("Converges for nu < 1; sampled on (0, 1) away from the poles of cot.",))

_add("3.311.6", S5, "int_0^inf (e^-t - e^-qt)/(1 - e^-t) dt = psi(q) + gamma", HALF,
     lambda s, x, xc: K.exp_diff(x, 1.0, s["q"]) / -np.expm1(-x),
     lambda s: psi(s["q"]) + G, _span(0.1, 10, "q"))


def _exp_quot(x, p, q, r, s_):
    # (e^px - e^qx)/(e^rx - e^sx) with r > s, p < r, q < r
    return K.exp_diff(x, r - p, r - q) / -np.expm1(-(r - s_) * x)


def _exp_quot_closed(p, q, r, s_):
    d = r - s_
    return (psi((r - q) / d) - psi((r - p) / d)) / d


_add("3.311.11", S5,
     "int_0^inf (e^px - e^qx)/(e^rx - e^sx) dx = [psi((r-q)/(r-s)) - psi((r-p)/(r-s))]/(r-s)",
     HALF,
     lambda s, x, xc: _exp_quot(x, s["p"], s["q"], s["r"], s["s"]),
     lambda s: _exp_quot_closed(s["p"], s["q"], s["r"], s["s"]),
     _span(-3, 3, "p", "q", "r", "s"),
     constraints=(
         _where("r - s > 0.2", lambda s: s["r"] - s["s"] > 0.2, "r", "s"),
         _where("0.05 < (r-p)/(r-s) < 10",
                lambda s: 0.05 < (s["r"] - s["p"]) / (s["r"] - s["s"]) < 10, "p", "r", "s"),
         _where("0.05 < (r-q)/(r-s) < 10",
                lambda s: 0.05 < (s["r"] - s["q"]) / (s["r"] - s["s"]) < 10, "q", "r", "s"),
     ),
     notes=("Sufficient conditions for absolute convergence: r > s, p < r, q < r.",))


def _ln(s, k):
    return math.log(s[k])


_add("3.311.12", S5,
     "int_0^inf (a^x - b^x)/(c^x - d^x) dx = [psi(ln(c/b)/ln(c/d)) - psi(ln(c/a)/ln(c/d))]/ln(c/d)",
     HALF,
     lambda s, x, xc: _exp_quot(x, _ln(s, "a"), _ln(s, "b"), _ln(s, "c"), _ln(s, "d")),
     lambda s: _exp_quot_closed(_ln(s, "a"), _ln(s, "b"), _ln(s, "c"), _ln(s, "d")),
     _span(0.2, 5, "a", "b", "c", "d"),
     constraints=(
         _where("ln c - ln d > 0.2", lambda s: _ln(s, "c") - _ln(s, "d") > 0.2, "c", "d"),
         _where("0.05 < ln(c/a)/ln(c/d) < 10",
                lambda s: 0.05 < math.log(s["c"] / s["a"]) / math.log(s["c"] / s["d"]) < 10,
                "a", "c", "d"),
         _where("0.05 < ln(c/b)/ln(c/d) < 10",
                lambda s: 0.05 < math.log(s["c"] / s["b"]) / math.log(s["c"] / s["d"]) < 10,
                "b", "c", "d"),
     ),
     notes=("Exponentials in natural base reduce this to 3.311.11; sufficient conditions "
            "c > d > 0 and a, b < c.",))


def _cot_closed_3_311_10(s):
    p, q = s["p"], s["q"]
    return PI / (p + q) * _cot_pi(p / (p + q))


_add("3.311.10", S5, "int_0^inf (e^-px - e^-qx)/(1 - e^-(p+q)x) dx = pi/(p+q) cot(p pi/(p+q))",
     HALF,
     lambda s, x, xc: K.exp_diff(x, s["p"], s["q"]) / -np.expm1(-(s["p"] + s["q"]) * x),
     _cot_closed_3_311_10, _span(0.2, 5, "p", "q"),
     notes=("The sixth-edition printing has 1 + e^-(p+q)x in the denominator, which is wrong; "
            "it is kept as the negative control 3.311.10-sixth-edition.",))

_add("3.311.10-sixth-edition", S5,
     "int_0^inf (e^-px - e^-qx)/(1 + e^-(p+q)x) dx = pi/(p+q) cot(p pi/(p+q))  [misprint]",
     HALF,
     lambda s, x, xc: K.exp_diff(x, s["p"], s["q"]) / (1.0 + np.exp(-(s["p"] + s["q"]) * x)),
     _cot_closed_3_311_10, _span(0.2, 5, "p", "q"),
     constraints=(_where("|p - q| >= 0.5", lambda s: abs(s["p"] - s["q"]) >= 0.5, "p", "q"),),
     control=True, flags=("negative-control",),
     anchor="Gradshteyn & Ryzhik 3.311.10, sixth edition",
     notes=("Negative control: sign error in the denominator. Expected to fail. "
            "Samples keep |p - q| >= 0.5 because both sides vanish at p = q.",))

_add("3.312.2", S5,
     "int_0^inf (1 - e^-ax)(1 - e^-bx) e^-px/(1 - e^-x) dx = psi(p+a) + psi(p+b) - psi(p+a+b) - psi(p)",
     HALF,
     lambda s, x, xc: np.expm1(-s["a"] * x) * np.expm1(-s["b"] * x) * np.exp(-s["p"] * x)
     / -np.expm1(-x),
     lambda s: psi(s["p"] + s["a"]) + psi(s["p"] + s["b"]) - psi(s["p"] + s["a"] + s["b"]) - psi(s["p"]),
     _span(0.1, 5, "a", "b", "p"))

# ---------------------------------------------------------------- principal values

_add("3.311.8", "singular-pv",
     "PV int_0^inf t^(mu-1)/(b-t) dt = b^(mu-1) pi cot(pi mu)", HALF,
     lambda s, x, xc: x ** (s["mu"] - 1) / (s["b"] - x),
     lambda s: s["b"] ** (s["mu"] - 1) * PI * _cot_pi(s["mu"]),
     (ParamSpec("b", 0.2, 5.0), ParamSpec("mu", 0.05, 0.95)),
     pole=lambda s: s["b"], singularities=LEFT, flags=("pv",),
     notes=("Registered in the t = e^-x form of the integral over the real line; the simple "
            "pole at t = b is taken as a Cauchy principal value. b < 0 is not covered.",))


def _k_3_234_1(s, x, xc):
    a, q = s["a"], s["q"]
    if a == 1.0:
        return K.pow_diff_ratio(x, xc, q - 1, -q)
    with np.errstate(divide="ignore", invalid="ignore"):
        if a > 1.0:
            # 1 - a x written as a (c - x) so the pole sits exactly at the float c
            c = 1.0 / a
            return x ** (q - 1) / (a * (c - x)) - x ** (-q) / (a - x)
        return x ** (q - 1) / (1.0 - a * x) - x ** (-q) / (a - x)


def _pole_3_234_1(s):
    a = s["a"]
    if a == 1.0:
        return None
    return 1.0 / a if a > 1.0 else a


_add("3.234.1", "fake-parameter",
     "int_0^1 [x^(q-1)/(1-ax) - x^-q/(a-x)] dx = (pi/a^q) cot(pi q)", UNIT,
     _k_3_234_1, lambda s: PI / s["a"] ** s["q"] * _cot_pi(s["q"]),
     (ParamSpec("a", 0.3, 3.0), ParamSpec("q", 0.05, 0.95)),
     pole=_pole_3_234_1, singularities=LEFT, flags=("pv", "fake-parameter"),
     notes=("For a != 1 there is a simple interior pole at x = 1/a (a > 1) or x = a (a < 1), "
            "taken as a principal value; at a = 1 the point x = 1 is removable and the "
            "ordinary rule is used.",))

# ---------------------------------------------------------------- polygamma

S8 = "polygamma-derivatives"

_add("4.251.4", S8, "int_0^1 x^(p-1) ln x/(1-x) dx = -psi'(p)", UNIT,
     lambda s, x, xc: K.log_ratio(x, xc, s["p"] - 1, 1.0),
     lambda s: -polygamma(1, s["p"]), _span(0.1, 10, "p"), singularities=LEFT)

_add("4.254.1", S8, "int_0^1 t^(p-1) ln t/(1 - t^q) dt = -psi'(p/q)/q^2", UNIT,
     lambda s, x, xc: K.log_ratio(x, xc, s["p"] - 1, s["q"]),
     lambda s: -polygamma(1, s["p"] / s["q"]) / s["q"] ** 2, _span(0.2, 5, "p", "q"),
     singularities=LEFT,
     notes=("Integration variable is t throughout (a stray dx appears in some printings).",))

_add("4.254.6", S8, "int_0^1 x^(q-1) ln x/(1 - x^(2q)) dx = -pi^2/(8 q^2)", UNIT,
     lambda s, x, xc: K.log_ratio(x, xc, s["q"] - 1, 2 * s["q"]),
     lambda s: -PI**2 / (8 * s["q"] ** 2), _span(0.2, 5, "q"), singularities=LEFT)

_add("4.271.15", S8, "int_0^1 ln^n x x^(p-1)/(1 - x^q) dx = -psi^(n)(p/q)/q^(n+1)", UNIT,
     lambda s, x, xc: K.log_ratio(x, xc, s["p"] - 1, s["q"], int(s["n"])),
     lambda s: -polygamma(int(s["n"]), s["p"] / s["q"]) / s["q"] ** (s["n"] + 1),
     _n(1, 2, 3, 4) + _span(0.2, 5, "p", "q"), singularities=LEFT,
     notes=("Orders n = 1..4 only.",))

# ---------------------------------------------------------------- logarithmic family

S9 = "logarithmic-family"


def _pl(alpha, k, beta_):
    """Integrand ``x^alpha (1 - x^k)^beta ln x`` with parameter-dependent
    exponents given as callables or constants."""
    val = lambda v, s: v(s) if callable(v) else v
    return lambda s, x, xc: K.pow_log(x, xc, val(alpha, s), val(k, s), val(beta_, s))


_add("beta-log", S9, "int_0^1 x^(a-1) (1-x)^(b-1) ln x dx = B(a,b) [psi(a) - psi(a+b)]", UNIT,
     _pl(lambda s: s["a"] - 1, 1.0, lambda s: s["b"] - 1),
     lambda s: beta(s["a"], s["b"]) * (psi(s["a"]) - psi(s["a"] + s["b"])),
     _span(0.1, 10, "a", "b"), singularities=BOTH,
     anchor="logarithmic derivative of the beta integral",
     notes=("Parent identity of the logarithmic family; not a numbered table entry.",))


def _closed_4_253_1(s):
    a, b, c = s["a"], s["b"], s["c"]
    r = a / c
    return beta(r, b) / c**2 * (psi(r) - psi(r + b))


_add("4.253.1", S9,
     "int_0^1 x^(a-1) (1 - x^c)^(b-1) ln x dx = B(a/c, b)/c^2 [psi(a/c) - psi(a/c + b)]", UNIT,
     _pl(lambda s: s["a"] - 1, lambda s: s["c"], lambda s: s["b"] - 1),
     _closed_4_253_1, _span(0.1, 10, "a", "b", "c"), singularities=BOTH)


def _k_4_256(s, x, xc):
    mu, m, n = s["mu"], s["m"], s["n"]
    return -K.pow_log(x, xc, mu - 1, n, -(n - m) / n)


_add("4.256", S9,
     "int_0^1 ln(1/x) x^(mu-1) (1 - x^n)^(-(n-m)/n) dx = B(mu/n, m/n)/n^2 [psi((mu+m)/n) - psi(mu/n)]",
     UNIT, _k_4_256,
     lambda s: beta(s["mu"] / s["n"], s["m"] / s["n"]) / s["n"] ** 2
     * (psi((s["mu"] + s["m"]) / s["n"]) - psi(s["mu"] / s["n"])),
     (ParamSpec("mu", 0.1, 5.0), ParamSpec.discrete("m", 1, 2, 3, 4),
      ParamSpec.discrete("n", 2, 3, 4, 5)),
     constraints=(_where("m < n", lambda s: s["m"] < s["n"], "m", "n"),),
     singularities=BOTH)


def _c2n(n):
    return binomial(2 * n, n)


_add("4.241.1", S9, "int_0^1 x^(2n) ln x/sqrt(1-x^2) dx = C(2n,n) pi/2^(2n+1) [A(2n) - ln 2]",
     UNIT, _pl(lambda s: 2 * s["n"], 2.0, -0.5),
     lambda s: _c2n(s["n"]) * PI / 2 ** (2 * s["n"] + 1) * (alt_harmonic(2 * s["n"]) - LN2),
     _n(0, 1, 2, 3), singularities=RIGHT,
     notes=("A(m) = sum_{k=1}^m (-1)^(k-1)/k.",))

_add("4.241.2", S9,
     "int_0^1 x^(2n+1) ln x/sqrt(1-x^2) dx = (2n)!!/(2n+1)!! [ln 2 - A(2n+1)]",
     UNIT, _pl(lambda s: 2 * s["n"] + 1, 2.0, -0.5),
     lambda s: double_factorial(2 * s["n"]) / double_factorial(2 * s["n"] + 1)
     * (LN2 - alt_harmonic(2 * s["n"] + 1)),
     _n(0, 1, 2, 3), singularities=RIGHT)

_add("4.241.3", S9,
     "int_0^1 x^(2n) sqrt(1-x^2) ln x dx = -C(2n,n) pi/(2^(2n+2)(n+1)) [ln 2 + 1/(2n+2) - A(2n)]",
     UNIT, _pl(lambda s: 2 * s["n"], 2.0, 0.5),
     lambda s: -_c2n(s["n"]) * PI / (2 ** (2 * s["n"] + 2) * (s["n"] + 1))
     * (LN2 + 1.0 / (2 * s["n"] + 2) - alt_harmonic(2 * s["n"])),
     _n(0, 1, 2, 3))

_add("4.241.4", S9,
     "int_0^1 x^(2n+1) sqrt(1-x^2) ln x dx = 2^(2n+1)/((n+1)(n+2) C(2n+3,n+1)) [ln 2 - 1/(2n+3) - A(2n+1)]",
     UNIT, _pl(lambda s: 2 * s["n"] + 1, 2.0, 0.5),
     lambda s: 2 ** (2 * s["n"] + 1)
     / ((s["n"] + 1) * (s["n"] + 2) * binomial(2 * s["n"] + 3, s["n"] + 1))
     * (LN2 - 1.0 / (2 * s["n"] + 3) - alt_harmonic(2 * s["n"] + 1)),
     _n(0, 1, 2, 3))


def _closed_4_241_5(s):
    n = s["n"]
    return -_c2n(n) * PI / 2 ** (2 * n + 2) * (2 * LN2 + harmonic(n))


for _id, _note in [("4.241.5", ()), ("4.246", ("Same integral as 4.241.5.",))]:
    _add(_id, S9, "int_0^1 (1-x^2)^(n-1/2) ln x dx = -C(2n,n) pi/2^(2n+2) [2 ln 2 + H(n)]",
         UNIT, _pl(0.0, 2.0, lambda s: s["n"] - 0.5), _closed_4_241_5,
         _n(0, 1, 2, 3), singularities=BOTH, notes=_note)

_add("4.241.7", S9, "int_0^1 ln x/sqrt(1-x^2) dx = -(pi/2) ln 2", UNIT,
     _pl(0.0, 2.0, -0.5), lambda s: -0.5 * PI * LN2, singularities=BOTH)


def _k_4_241_8(s, x, u):
    with np.errstate(over="ignore"):
        return np.log1p(u) / (x * x * np.sqrt(u * (u + 2.0)))


_add("4.241.8", S9, "int_1^inf ln x/(x^2 sqrt(x^2-1)) dx = 1 - ln 2",
     IntegrationDomain.half_line(1.0), _k_4_241_8, lambda s: 1.0 - LN2, singularities=LEFT)

_add("4.241.9", S9, "int_0^1 sqrt(1-x^2) ln x dx = -(pi/8)(2 ln 2 + 1)", UNIT,
     _pl(0.0, 2.0, 0.5), lambda s: -PI / 8 * (2 * LN2 + 1), singularities=LEFT)

_add("4.241.10", S9, "int_0^1 x sqrt(1-x^2) ln x dx = (3 ln 2 - 4)/9", UNIT,
     _pl(1.0, 2.0, 0.5), lambda s: (3 * LN2 - 4) / 9)

_add("4.241.11", S9, "int_0^1 ln x/sqrt(x(1-x^2)) dx = -(sqrt(2 pi)/8) Gamma(1/4)^2", UNIT,
     _pl(-0.5, 2.0, -0.5),
     lambda s: -math.sqrt(2 * PI) / 8 * math.exp(2 * log_gamma(0.25)), singularities=BOTH)

_add("4.243", S9, "int_0^1 x ln x/sqrt(1-x^4) dx = -(pi/8) ln 2", UNIT,
     _pl(1.0, 4.0, -0.5), lambda s: -PI / 8 * LN2, singularities=RIGHT)

_add("4.244.1", S9, "int_0^1 ln x/(x(1-x^2)^2)^(1/3) dx = -Gamma(1/3)^3/8", UNIT,
     _pl(-1.0 / 3.0, 2.0, -2.0 / 3.0),
     lambda s: -math.exp(3 * log_gamma(1.0 / 3.0)) / 8, singularities=BOTH)

_add("4.244.2", S9, "int_0^1 ln x/(1-x^3)^(1/3) dx = -(pi/(3 sqrt 3))(ln 3 + pi/(3 sqrt 3))", UNIT,
     _pl(0.0, 3.0, -1.0 / 3.0),
     lambda s: -PI / (3 * R3) * (LN3 + PI / (3 * R3)), singularities=BOTH)

_add("4.244.3", S9, "int_0^1 x ln x/(1-x^3)^(2/3) dx = -(pi/(3 sqrt 3))(ln 3 - pi/(3 sqrt 3))", UNIT,
     _pl(1.0, 3.0, -2.0 / 3.0),
     lambda s: -PI / (3 * R3) * (LN3 - PI / (3 * R3)), singularities=RIGHT,
     flags=("reconstructed-integrand",),
     notes=("Integrand reconstructed as x (1-x^3)^(-2/3) ln x: the printed left side repeats "
            "4.244.2, while the stated value is Gamma(2/3) Gamma(1/3)/9 [psi(2/3) + gamma], "
            "which is this integrand. The intended table entry is unconfirmed.",))

_add("4.245.1", S9, "int_0^1 x^(4n+1) ln x/sqrt(1-x^4) dx = pi C(2n,n)/2^(2n+3) [A(2n) - ln 2]",
     UNIT, _pl(lambda s: 4 * s["n"] + 1, 4.0, -0.5),
     lambda s: PI * _c2n(s["n"]) / 2 ** (2 * s["n"] + 3) * (alt_harmonic(2 * s["n"]) - LN2),
     _n(0, 1, 2, 3), singularities=RIGHT)

_add("4.245.2", S9,
     "int_0^1 x^(4n+3) ln x/sqrt(1-x^4) dx = 2^(2n-2)/((2n+1) C(2n,n)) [ln 2 - A(2n+1)]",
     UNIT, _pl(lambda s: 4 * s["n"] + 3, 4.0, -0.5),
     lambda s: 2.0 ** (2 * s["n"] - 2) / ((2 * s["n"] + 1) * _c2n(s["n"]))
     * (LN2 - alt_harmonic(2 * s["n"] + 1)),
     _n(0, 1, 2, 3), singularities=RIGHT)


def _b2n(n):
    return beta(0.5 / n, 0.5 / n) / math.sin(0.5 * PI / n)


_add("4.247.1", S9, "int_0^1 ln x/(1-x^(2n))^(1/n) dx = -(pi/8) B(1/2n, 1/2n)/(n^2 sin(pi/2n))",
     UNIT, _pl(0.0, lambda s: 2.0 * s["n"], lambda s: -1.0 / s["n"]),
     lambda s: -PI / 8 * _b2n(s["n"]) / s["n"] ** 2, _n(1, 2, 3, 4), singularities=BOTH)

_add("4.247.2", S9, "int_0^1 ln x/(x^(n-1)(1-x^2))^(1/n) dx = -(pi/8) B(1/2n, 1/2n)/sin(pi/2n)",
     UNIT, _pl(lambda s: -(s["n"] - 1.0) / s["n"], 2.0, lambda s: -1.0 / s["n"]),
     lambda s: -PI / 8 * _b2n(s["n"]), _n(1, 2, 3, 4), singularities=BOTH,
     notes=("The beta-function form is the reference value; a Gamma-ratio rewriting of it "
            "seen in print contains a misprint and is not used.",))

_add("4.293.8", S9, "int_0^1 x^(a-1) ln(1-x) dx = -(psi(a+1) + gamma)/a", UNIT,
     lambda s, x, xc: x ** (s["a"] - 1) * _log1m(x, xc),
     lambda s: -(psi(s["a"] + 1) + G) / s["a"], _span(0.1, 10, "a"), singularities=BOTH)

_add("4.293.13", S9, "int_0^1 x^(a-1) (1-x)^(b-1) ln(1-x) dx = B(a,b) [psi(b) - psi(a+b)]", UNIT,
     lambda s, x, xc: x ** (s["a"] - 1) * xc ** (s["b"] - 1) * _log1m(x, xc),
     lambda s: beta(s["a"], s["b"]) * (psi(s["b"]) - psi(s["a"] + s["b"])),
     _span(0.1, 10, "a", "b"), singularities=BOTH)


def _k_3_457_1(s, x, xc):
    n = s["n"]
    return x * np.exp(-x) * (-np.expm1(-2.0 * x)) ** (n - 0.5)


_add("3.457.1", S9,
     "int_0^inf x e^-x (1 - e^-2x)^(n-1/2) dx = C(2n,n) pi/2^(2n+2) [2 ln 2 + H(n)]", HALF,
     _k_3_457_1, lambda s: _c2n(s["n"]) * PI / 2 ** (2 * s["n"] + 2) * (2 * LN2 + harmonic(s["n"])),
     _n(0, 1, 2, 3),
     notes=("The base inside the power is 1 - e^-2x; with e^2x it would be negative.",))

# ---------------------------------------------------------------- exponential vs rational

S10 = "exp-rational-family"


def _exp_rational(a, b):
    def f(s, x, xc):
        # e^-x^a - 1/(1+x^b) = expm1(-x^a) + x^b/(1+x^b)
        with np.errstate(over="ignore", divide="ignore"):
            return (np.expm1(-x**a) + K.sigmoid(b * np.log(x))) / x
    return f


_add("exp-power-rational", S10, "int_0^inf (e^-x^a - 1/(1+x^b)) dx/x = -gamma/a", HALF,
     lambda s, x, xc: _exp_rational(s["a"], s["b"])(s, x, xc),
     lambda s: -G / s["a"], _span(0.5, 4, "a", "b"),
     anchor="two-parameter exponential-rational family, value independent of b",
     flags=("fake-parameter",),
     notes=("Parent identity of 3.475.1, 3.475.2 and 3.467; not a numbered table entry.",))

_add("3.475.1", S10, "int_0^inf (e^-x^(2^n) - 1/(1+x^(2^(n+1)))) dx/x = -gamma/2^n", HALF,
     lambda s, x, xc: _exp_rational(2.0 ** s["n"], 2.0 ** (s["n"] + 1))(s, x, xc),
     lambda s: -G / 2.0 ** s["n"], _n(1, 2, 3), flags=("special-case",))

_add("3.475.2", S10, "int_0^inf (e^-x^(2^n) - 1/(1+x^2)) dx/x = -gamma/2^n", HALF,
     lambda s, x, xc: _exp_rational(2.0 ** s["n"], 2.0)(s, x, xc),
     lambda s: -G / 2.0 ** s["n"], _n(1, 2, 3), flags=("special-case",))

_add("3.467", S10, "int_0^inf (e^-x^2 - 1/(1+x^2)) dx/x = -gamma/2", HALF,
     _exp_rational(2.0, 2.0), lambda s: -G / 2, flags=("special-case",))


def _k_3_442_3(s, x, xc):
    p, a = s["p"], s["a"]
    with np.errstate(over="ignore", divide="ignore"):
        # 1/(1 + a^2 x^2) = 1 - sigmoid(2 ln(a x))
        return (np.expm1(-p * x) + K.sigmoid(2.0 * np.log(a * x))) / x


_add("3.442.3", S10, "int_0^inf (e^-px - 1/(1+a^2 x^2)) dx/x = ln(a/p) - gamma", HALF,
     _k_3_442_3, lambda s: math.log(s["a"] / s["p"]) - G, _span(0.2, 5, "a", "p"),
     notes=("Stored as ln(a/p) - gamma: a Frullani integral gives ln(a/p) and the rest is the "
            "a = 1, b = 2 member of the exponential-rational family, -gamma. The printed value "
            "gamma + ln(a/p) has the wrong sign on gamma and is kept as the negative control "
            "3.442.3-printed.",))

_add("3.442.3-printed", S10,
     "int_0^inf (e^-px - 1/(1+a^2 x^2)) dx/x = gamma + ln(a/p)  [misprint]", HALF,
     _k_3_442_3, lambda s: G + math.log(s["a"] / s["p"]), _span(0.2, 5, "a", "p"),
     control=True, flags=("negative-control",),
     anchor="Gradshteyn & Ryzhik 3.442.3, printed value",
     notes=("Negative control: the printed value with +gamma. Expected to fail by 2 gamma.",))


REGISTRY = MappingProxyType(_REGISTRY)
