"""Stable integrand kernels against high-precision values, on both sides of
the series switch-over and far inside the cancellation zone."""

import numpy as np
import pytest

from psitable.catalog.kernels import (
    TAYLOR_SWITCH,
    exp_diff,
    exp_over_expm1,
    log_ratio,
    log_recip_plus,
    pow_diff_ratio,
    psi_rep,
    sigmoid,
)

# mpmath at 60 digits; points straddle the 1e-4 switch
PTS = [1e-12, 3e-7, 9.9e-5, 1.01e-4, 0.3]
PSI_REP = [1.499999999996125, 1.4999988375005757, 1.4996164376768486, 1.499608690234643, 0.7394965949606982]
EXP_OVER_EXPM1 = [0.9999999999985417, 0.9999995625000975, 0.9998556356172232, 0.9998527193838573, 0.6468641288195576]
POW_DIFF = [2.499999999998875, 2.499999662500022, 2.4998886273278744, 2.4998863774228828, 2.1889118656805704]
LOG_RECIP = [1.6000000000001182, 1.600000035500018, 1.6000117169636439, 1.600011953710455, 1.6602788017284178]
LOG_RATIO = [-1.4285714285715, -1.4285714500000009, -1.4285785000816702, -1.428578642942146, -1.4505063344388014]


def near_one(u):
    u = np.array([u])
    return 1.0 - u, u


@pytest.mark.parametrize("i", range(len(PTS)))
def test_kernels_match_high_precision(i):
    t = PTS[i]
    x, xc = near_one(t)
    cases = [
        (psi_rep(np.array([t]), 2.5), PSI_REP[i]),
        (exp_over_expm1(np.array([t]), 2.5), EXP_OVER_EXPM1[i]),
        (pow_diff_ratio(x, xc, -0.3, 2.2), POW_DIFF[i]),
        (log_recip_plus(x, xc, 1.7, 0.6), LOG_RECIP[i]),
        (log_ratio(x, xc, 0.3, 0.7), LOG_RATIO[i]),
    ]
    # above the switch, kernels whose two poles cancel lose about eps/x
    pole_cancel_budget = 64 * np.finfo(float).eps / t
    for k, (got, want) in enumerate(cases):
        tol = 1e-13
        if k in (1, 3) and t > TAYLOR_SWITCH:
            tol = max(tol, pole_cancel_budget)
        assert abs(got[0] - want) <= tol * abs(want)


@pytest.mark.parametrize("a", [0.1, 1.0, 3.7, 10.0])
def test_psi_rep_continuous_at_switch(a):
    # adjacent doubles on either side of the switch
    lo, hi = np.nextafter(TAYLOR_SWITCH, 0.0), TAYLOR_SWITCH
    v = psi_rep(np.array([lo, hi]), a)
    # at a = 1 the value is itself O(x), so compare on the unit scale
    assert abs(v[0] - v[1]) <= 1e-13 * max(1.0, abs(v[1]))


def test_overflow_safe_helpers():
    y = np.array([-1e4, -50.0, 0.0, 50.0, 1e4])
    s = sigmoid(y)
    assert np.all(np.isfinite(s)) and s[0] == 0.0 and s[2] == 0.5 and s[-1] == 1.0
    big = np.array([0.0, 1.0, 1e3, 1e6])
    d = exp_diff(big, 0.5, 2.0)
    assert np.all(np.isfinite(d))
    assert d[1] == pytest.approx(np.exp(-0.5) - np.exp(-2.0), rel=1e-15)
    assert np.all(exp_diff(big, 2.0, 0.5) == -d)
