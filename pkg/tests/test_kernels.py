"""Kernel evaluation against high-precision oracles, including the
near-diagonal Taylor regime where naive formulas cancel catastrophically."""

import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gapspec.errors import ArgumentError, DomainError
from gapspec.kernels import (
    AIRY,
    SINE,
    Family,
    IntervalSpec,
    KernelSpec,
    airy_convolution,
    bessel_spec,
    delta_switch,
    kernel_diag,
    kernel_eval,
)

mp.mp.dps = 40


def mp_sine(x, y):
    x, y = mp.mpf(x), mp.mpf(y)
    if x == y:
        return 1 / mp.pi
    return mp.sin(x - y) / (mp.pi * (x - y))


def mp_airy(x, y):
    # the numerator cancels to O(x - y): push oracle precision well past
    # the digits lost so the reference stays trustworthy arbitrarily close
    # to the diagonal
    with mp.workdps(400):
        x, y = mp.mpf(x), mp.mpf(y)
        if x == y:
            return mp.airyai(x, 1) ** 2 - x * mp.airyai(x) ** 2
        num = mp.airyai(x) * mp.airyai(y, 1) - mp.airyai(x, 1) * mp.airyai(y)
        return num / (x - y)


def mp_bessel(a, x, y):
    a, x, y = mp.mpf(a), mp.mpf(x), mp.mpf(y)

    def phi(t):
        return mp.besselj(a, mp.sqrt(t))

    def psi(t):
        return mp.sqrt(t) * mp.besselj(a, mp.sqrt(t), derivative=1)

    if x == y:
        sx = mp.sqrt(x)
        j = mp.besselj(a, sx)
        return (j**2 - mp.besselj(a + 1, sx) * mp.besselj(a - 1, sx)) / 4
    return (phi(x) * psi(y) - psi(x) * phi(y)) / (2 * (x - y))


class TestSpecs:
    def test_singletons(self):
        assert SINE.family is Family.SINE
        assert AIRY.family is Family.AIRY
        assert bessel_spec(0.5).a == 0.5

    def test_bessel_order_domain(self):
        with pytest.raises(DomainError):
            bessel_spec(-1.0)

    def test_interval_spec_family_coercion(self):
        iv = IntervalSpec("sine", 2.0)
        assert iv.family is Family.SINE

    def test_kernel_spec_frozen(self):
        with pytest.raises(AttributeError):
            SINE.a = 1.0  # type: ignore[misc]


class TestSineKernel:
    @given(
        st.floats(min_value=-8.0, max_value=8.0),
        st.floats(min_value=-8.0, max_value=8.0),
    )
    @settings(max_examples=150, deadline=None)
    def test_matches_oracle(self, x, y):
        got = kernel_eval(SINE, x, y)
        assert abs(got - float(mp_sine(x, y))) < 1e-14

    def test_near_diagonal(self):
        for d in (0.0, 1e-12, 1e-7, 1e-5, 9e-5):
            got = kernel_eval(SINE, 1.0, 1.0 + d)
            assert abs(got - float(mp_sine(1.0, 1.0 + d))) < 1e-15

    def test_diag(self):
        assert abs(kernel_diag(SINE, 3.7) - 1.0 / math.pi) < 1e-16


class TestAiryKernel:
    @given(
        st.floats(min_value=-10.0, max_value=6.0),
        st.floats(min_value=-10.0, max_value=6.0),
    )
    @settings(max_examples=150, deadline=None)
    def test_matches_oracle(self, x, y):
        got = kernel_eval(AIRY, x, y)
        ref = float(mp_airy(x, y))
        assert abs(got - ref) < 1e-12 * max(1.0, abs(ref))

    def test_near_diagonal(self):
        for x in (-6.0, -1.0, 0.0, 2.0):
            for d in (0.0, 1e-11, 1e-6, 5e-5):
                got = kernel_eval(AIRY, x, x + d)
                ref = float(mp_airy(x, x + d))
                assert abs(got - ref) < 1e-12 * max(1.0, abs(ref))

    def test_diag_formula(self):
        for x in (-5.0, -0.5, 1.5):
            assert abs(kernel_diag(AIRY, x) - float(mp_airy(x, x))) < 1e-13


class TestBesselKernel:
    @pytest.mark.parametrize("a", [-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 3.7])
    def test_matches_oracle_grid(self, a):
        spec = bessel_spec(a)
        pts = [1e-8, 1e-4, 0.03, 0.5, 2.0, 9.0, 40.0, 100.0]
        for x in pts:
            for y in pts:
                got = kernel_eval(spec, x, y)
                ref = float(mp_bessel(a, x, y))
                assert abs(got - ref) < 1e-10 * max(1.0, abs(ref)), (a, x, y)

    @pytest.mark.parametrize("a", [-0.5, 0.0, 1.0, 3.7])
    def test_near_diagonal(self, a):
        spec = bessel_spec(a)
        for x in (1e-6, 1e-3, 0.7, 13.0, 90.0):
            for rel_d in (0.0, 1e-13, 1e-9, 1e-6, 4e-5):
                y = x * (1.0 + rel_d)
                got = kernel_eval(spec, x, y)
                ref = float(mp_bessel(a, x, y))
                assert abs(got - ref) < 1e-10 * max(1.0, abs(ref)), (a, x, rel_d)

    def test_diag_origin_limits(self):
        assert abs(kernel_diag(bessel_spec(0.0), 0.0) - 0.25) < 1e-16
        assert kernel_diag(bessel_spec(1.5), 0.0) == 0.0
        with pytest.raises(DomainError):
            kernel_diag(bessel_spec(-0.5), 0.0)

    @given(
        st.floats(min_value=-0.9, max_value=4.0),
        st.floats(min_value=1e-6, max_value=100.0),
        st.floats(min_value=1e-6, max_value=100.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_symmetry(self, a, x, y):
        spec = bessel_spec(a)
        assert kernel_eval(spec, x, y) == kernel_eval(spec, y, x)


class TestDeltaSwitch:
    def test_scales_with_magnitude(self):
        assert delta_switch(0.0, 0.0) == 1e-4
        assert delta_switch(100.0, 100.0) == pytest.approx(2e-2)

    @given(
        st.floats(min_value=-50.0, max_value=50.0),
        st.floats(min_value=-50.0, max_value=50.0),
    )
    @settings(max_examples=50, deadline=None)
    def test_positive_and_symmetric(self, lam, mu):
        d = delta_switch(lam, mu)
        assert d > 0.0
        assert d == delta_switch(mu, lam)


class TestAiryConvolution:
    def test_reproduces_kernel(self):
        # the Airy kernel equals the convolution of Ai against itself on
        # the half-line; the quadrature form must match kernel_eval
        for x, y in [(-2.0, 1.0), (0.0, 0.0), (-4.5, -4.5), (1.0, 2.5)]:
            got = airy_convolution(x, y)
            ref = kernel_eval(AIRY, x, y)
            assert abs(got - ref) < 1e-8 * max(1.0, abs(ref))

    def test_minimum_panel_size(self):
        with pytest.raises(ArgumentError):
            airy_convolution(0.0, 0.0, n=10)
