from __future__ import annotations

import cmath
import math

import pytest

from lagrev.errors import BranchError, PoleError, ZeroAtOrigin
from lagrev.expr import parse_expr
from lagrev.inversion import (
    G_from_P0,
    F1_forward,
    F1_inverse,
    F1_inverse_deriv,
    build_context,
    cauchy_taylor,
    eval_series,
    funcspec_from_callable,
    h_of,
    p_of_z,
    solve_w_direct,
    to_funcspec,
    w_of_q_via_integral,
    y_of,
)
from lagrev.specfun import e_map, lambert_w

TWO_PI_I = 2j * math.pi


@pytest.fixture(scope="module")
def lambert_ctx():
    return build_context(to_funcspec(parse_expr("exp(A)"), order=48), 48)


class TestContext:
    def test_series_against_newton(self, lambert_ctx):
        f = lambert_ctx.f
        for q in (0.05, -0.08, 0.04 + 0.03j):
            via_series, _ = eval_series(lambert_ctx.w_series, q)
            assert abs(via_series - solve_w_direct(f, q)) < 1e-12

    def test_lambert_closed_form(self, lambert_ctx):
        # w e^{-w} = q means w = -W(-q)
        for q in (0.05, 0.1, 0.02 + 0.06j):
            via_series, _ = eval_series(lambert_ctx.w_series, q)
            assert abs(via_series + lambert_w(-q)) < 1e-12

    def test_newton_rejects_zero_constant(self):
        f = funcspec_from_callable(lambda a: a)
        with pytest.raises(ZeroAtOrigin):
            solve_w_direct(f, 0.1)

    def test_black_box_funcspec(self):
        f = funcspec_from_callable(lambda a: cmath.exp(a))
        assert abs(f.series[3] - 1 / 6) < 1e-12


class TestReciprocalSeries:
    def test_pole_balance(self, lambert_ctx):
        # P * q w'(q) = 1 by construction
        z = 0.1 + 0.5j
        q = e_map(z).q
        wprime, _ = eval_series(lambert_ctx.w_series.derivative(), q)
        assert abs(p_of_z(lambert_ctx, z) * q * wprime - 1.0) < 1e-12

    def test_integral_recovers_w(self, lambert_ctx):
        z = 0.2 + 0.6j
        q = e_map(z).q
        w, _ = eval_series(lambert_ctx.w_series, q)
        assert abs(w_of_q_via_integral(lambert_ctx, z) - w) < 1e-12


class TestF1:
    def test_frozen_anchors(self):
        assert abs(F1_inverse(0.2) - 1.56932424422317538692601316093) < 1e-12
        assert abs(F1_inverse(0.5) - 3.39862308863694797496339826298) < 1e-12

    def test_forward_inverse_pair(self):
        for a in (0.1, 0.2, 0.5):
            assert abs(F1_forward(F1_inverse(a)) - a) < 1e-11

    def test_derivative_consistency(self):
        y = 0.3
        h = 1e-6
        fd = (F1_inverse(y + h) - F1_inverse(y - h)) / (2 * h)
        assert abs(fd - F1_inverse_deriv(y)) < 1e-7


class TestChain:
    def test_g_cancels_reciprocal(self, lambert_ctx):
        g = G_from_P0(lambda u: 1.0 + 0j, lambert_ctx.c)
        for z in (0.1 + 0.5j, -0.2 + 0.6j):
            assert abs(g(y_of(lambert_ctx, z)) + p_of_z(lambert_ctx, z)) < 1e-10

    def test_g_pole_guard(self):
        g = G_from_P0(lambda u: 0j, 0j)
        with pytest.raises(PoleError):
            g(F1_inverse(1e-60))

    def test_h_branch_cut(self):
        with pytest.raises(BranchError):
            h_of(lambda u: 0j, 0j, -0.5j)  # c - 2 pi i A lands on (-inf, 0]

    def test_h_pure_log_case(self):
        # with P0 = 0 the analytic tail vanishes
        c = 1.0 + 0j
        a = 0.1 + 0.02j
        expected = cmath.log(c - TWO_PI_I * a) / TWO_PI_I
        assert abs(h_of(lambda u: 0j, c, a) - expected) < 1e-12


class TestCauchyTaylor:
    def test_exponential_coefficients(self):
        coeffs = cauchy_taylor(cmath.exp, 0j, 8)
        for k, c in enumerate(coeffs):
            assert abs(c - 1 / math.factorial(k)) < 1e-12

    def test_shifted_center(self):
        coeffs = cauchy_taylor(lambda z: z * z, 1.0 + 0j, 2)
        assert abs(coeffs[0] - 1) < 1e-12
        assert abs(coeffs[1] - 2) < 1e-12
        assert abs(coeffs[2] - 1) < 1e-12
