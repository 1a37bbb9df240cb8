"""Twenty integrals with known closed forms used to audit the quadrature
error estimates. Each case is (name, kind, bounds, integrand, complement,
exact); ``complement`` integrands take ``(x, xc)``."""

import math

import numpy as np

EG = 0.5772156649015329

KNOWN = [
    ("x^2 on [0,1]", "finite", (0.0, 1.0), lambda x: x * x, False, 1 / 3),
    ("cubic on [-1,2]", "finite", (-1.0, 2.0), lambda x: x**3 - 2 * x + 1, False, 3.75),
    ("ln x", "finite", (0.0, 1.0), np.log, False, -1.0),
    ("ln^2 x", "finite", (0.0, 1.0), lambda x: np.log(x) ** 2, False, 2.0),
    ("sqrt(x) ln x", "finite", (0.0, 1.0), lambda x: np.sqrt(x) * np.log(x), False, -4 / 9),
    ("ln(1-x)", "finite", (0.0, 1.0), lambda x, xc: np.log(xc), True, -1.0),
    ("x^-1/2", "finite", (0.0, 1.0), lambda x: x**-0.5, False, 2.0),
    ("x^-0.9", "finite", (0.0, 1.0), lambda x: x**-0.9, False, 10.0),
    ("(1-x)^-1/2", "finite", (0.0, 1.0), lambda x, xc: xc**-0.5, True, 2.0),
    ("1/sqrt(x(1-x))", "finite", (0.0, 1.0), lambda x, xc: 1 / np.sqrt(x * xc), True, math.pi),
    ("ln x/sqrt(1-x^2)", "finite", (0.0, 1.0),
     lambda x, xc: np.log(x) / np.sqrt(xc * (1 + x)), True, -0.5 * math.pi * math.log(2)),
    ("1/(1+x^2) on [0,1]", "finite", (0.0, 1.0), lambda x: 1 / (1 + x * x), False, math.pi / 4),
    ("e^x on [0,1]", "finite", (0.0, 1.0), np.exp, False, math.e - 1),
    ("e^-x", "half", (0.0,), lambda x: np.exp(-x), False, 1.0),
    ("1/(1+x^2) on [0,inf)", "half", (0.0,), lambda x: 1 / (1 + x * x), False, math.pi / 2),
    ("x^-1/2 e^-x", "half", (0.0,), lambda x: np.exp(-x) / np.sqrt(x), False, math.sqrt(math.pi)),
    ("e^-x ln x", "half", (0.0,), lambda x: np.exp(-x) * np.log(x), False, -EG),
    ("x^-2 on [1,inf)", "half", (1.0,), lambda x: 1 / (x * x), False, 1.0),
    ("gaussian", "whole", (), lambda x: np.exp(-x * x), False, math.sqrt(math.pi)),
    ("1/(1+x^2) on the line", "whole", (), lambda x: 1 / (1 + x * x), False, math.pi),
]


def run(case, opts=None):
    from psitable.quadrature import integrate_finite, integrate_half_line, integrate_whole_line

    _, kind, bounds, f, complement, _ = case
    if kind == "finite":
        return integrate_finite(f, *bounds, opts=opts, vectorized=True, complement=complement)
    if kind == "half":
        return integrate_half_line(f, *bounds, opts=opts, vectorized=True, complement=complement)
    return integrate_whole_line(f, opts=opts, vectorized=True)
