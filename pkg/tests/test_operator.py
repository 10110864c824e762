"""Discretization and spectral machinery: quadrature against an independent
generator, spectra against trace identities, counting statistics against a
direct polynomial expansion."""

import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gapspec.errors import ArgumentError, DegeneracyError, PoleError
from gapspec.kernels import AIRY, SINE, Family, IntervalSpec, bessel_spec, kernel_diag
from gapspec.operator import (
    Spectrum,
    airy_truncation,
    build_discretization,
    compute_spectrum,
    compute_spectrum_with_vectors,
    counting_prob,
    counting_ratio,
    d_ds_log_det,
    discretization_grid,
    fredholm_det,
    gauss_legendre,
    log_fredholm_det,
    trace_norm,
)

mp.mp.dps = 30


class TestGaussLegendre:
    @pytest.mark.parametrize("n", [1, 2, 3, 7, 20, 64, 121, 400])
    def test_matches_numpy(self, n):
        q = gauss_legendre(n)
        x_ref, w_ref = np.polynomial.legendre.leggauss(n)
        assert np.max(np.abs(q.nodes - x_ref)) < 5e-15
        assert np.max(np.abs(q.weights - w_ref)) < 1e-12

    @pytest.mark.parametrize("n", [5, 40, 200])
    def test_polynomial_exactness(self, n):
        # exact for degree <= 2n - 1
        q = gauss_legendre(n)
        rng = np.random.default_rng(7)
        coeffs = rng.standard_normal(2 * n)  # degree 2n - 1
        integral = sum(
            c / (k + 1) * (1.0 - (-1.0) ** (k + 1)) for k, c in enumerate(coeffs)
        )
        approx = float(np.polynomial.polynomial.polyval(q.nodes, coeffs) @ q.weights)
        assert abs(approx - integral) < 1e-12 * max(1.0, abs(integral))

    def test_symmetry(self):
        for n in (9, 10):
            q = gauss_legendre(n)
            assert np.array_equal(q.nodes, -q.nodes[::-1])
            assert np.array_equal(q.weights, q.weights[::-1])
        assert gauss_legendre(9).nodes[4] == 0.0

    def test_arguments(self):
        with pytest.raises(ArgumentError):
            gauss_legendre(0)
        with pytest.raises(ArgumentError):
            gauss_legendre(2001)

    def test_read_only(self):
        q = gauss_legendre(12)
        with pytest.raises(ValueError):
            q.nodes[0] = 0.0


class TestGrid:
    def test_family_mismatch(self):
        with pytest.raises(ArgumentError):
            discretization_grid(SINE, IntervalSpec(Family.AIRY, -2.0), 40)

    def test_airy_truncation_floor(self):
        assert airy_truncation(-100.0) == pytest.approx((45.0 * 0.75) ** (2.0 / 3.0))
        assert airy_truncation(5.0) == 15.0

    def test_bessel_substituted_grid(self):
        nodes, weights, hi = discretization_grid(bessel_spec(0.5), IntervalSpec(Family.BESSEL, 9.0), 50)
        assert hi == 9.0
        assert nodes[0] > 0.0 and nodes[-1] < 9.0
        # under x = u^2 the integral of 1 over [0, 9] is still 9
        assert abs(float(np.sum(weights)) - 9.0) < 1e-12

    def test_bessel_even_integer_plain_grid(self):
        nodes, _, _ = discretization_grid(bessel_spec(2.0), IntervalSpec(Family.BESSEL, 4.0), 30)
        base = gauss_legendre(30)
        assert np.allclose(nodes, 2.0 + 2.0 * base.nodes)


class TestSpectrum:
    def test_matrix_symmetric_bitwise(self):
        for spec, iv in [
            (SINE, IntervalSpec(Family.SINE, 2.0)),
            (AIRY, IntervalSpec(Family.AIRY, -3.0)),
            (bessel_spec(0.5), IntervalSpec(Family.BESSEL, 9.0)),
        ]:
            d = build_discretization(spec, iv, 60)
            m = np.asarray(d.matrix)
            assert np.array_equal(m, m.T)

    def test_trace_identity(self):
        # sum of eigenvalues equals the quadrature trace exactly (both are
        # the trace of the same symmetric matrix)
        d = build_discretization(SINE, IntervalSpec(Family.SINE, 3.0), 80)
        sp = compute_spectrum(d)
        tr = float(np.trace(np.asarray(d.matrix)))
        assert abs(float(np.sum(sp.eigenvalues)) - tr) < 1e-12

    def test_sine_trace_closed_form(self):
        # diag of the sine kernel is 1/pi, so the trace is 2s/pi
        s = 2.5
        assert abs(trace_norm(SINE, IntervalSpec(Family.SINE, s)) - 2.0 * s / math.pi) < 1e-13

    def test_airy_trace_against_quadrature_oracle(self):
        s = -4.0
        hi = airy_truncation(s)
        ref = float(mp.quad(lambda t: mp.airyai(t, 1) ** 2 - t * mp.airyai(t) ** 2, [s, hi]))
        assert abs(trace_norm(AIRY, IntervalSpec(Family.AIRY, s), n=80) - ref) < 1e-10

    def test_bessel_trace_against_quadrature_oracle(self):
        a, s = 0.5, 9.0
        ref = float(
            mp.quad(
                lambda x: (
                    mp.besselj(a, mp.sqrt(x)) ** 2
                    - mp.besselj(a + 1, mp.sqrt(x)) * mp.besselj(a - 1, mp.sqrt(x))
                )
                / 4,
                [0, s],
            )
        )
        assert abs(trace_norm(bessel_spec(a), IntervalSpec(Family.BESSEL, s), n=80) - ref) < 1e-10

    @pytest.mark.parametrize(
        "spec,iv",
        [
            (SINE, IntervalSpec(Family.SINE, 2.0)),
            (AIRY, IntervalSpec(Family.AIRY, -4.0)),
            (bessel_spec(-0.5), IntervalSpec(Family.BESSEL, 16.0)),
            (bessel_spec(2.0), IntervalSpec(Family.BESSEL, 16.0)),
        ],
    )
    def test_spectrum_converged(self, spec, iv):
        # the top of the spectrum must be n-independent at working precision
        a = compute_spectrum(build_discretization(spec, iv, 60)).eigenvalues[:8]
        b = compute_spectrum(build_discretization(spec, iv, 120)).eigenvalues[:8]
        assert np.max(np.abs(np.asarray(a) - np.asarray(b))) < 1e-12

    def test_spectrum_in_unit_interval(self):
        sp = compute_spectrum(build_discretization(SINE, IntervalSpec(Family.SINE, 4.0), 80))
        ev = np.asarray(sp.eigenvalues)
        assert np.all(ev >= 0.0) and np.all(ev < 1.0)
        assert np.all(np.diff(ev) <= 0.0)

    def test_eigenvectors_consistent(self):
        d = build_discretization(AIRY, IntervalSpec(Family.AIRY, -3.0), 60)
        sp, vecs = compute_spectrum_with_vectors(d)
        m = np.asarray(d.matrix)
        for i in range(5):
            v = vecs[:, i]
            assert np.linalg.norm(m @ v - sp.eigenvalues[i] * v) < 1e-12

    def test_meta_fields(self):
        d = build_discretization(bessel_spec(1.0), IntervalSpec(Family.BESSEL, 9.0), 50)
        sp = compute_spectrum(d)
        assert sp.meta["family"] == "bessel"
        assert sp.meta["a"] == 1.0
        assert sp.meta["n"] == 50
        assert "clamped_zero" in sp.meta


def _fake_spectrum(eigs):
    return Spectrum(np.asarray(eigs, dtype=float), len(eigs), {})


class TestDeterminants:
    def test_log_det_matches_product(self):
        sp = _fake_spectrum([0.9, 0.5, 0.1, 1e-8])
        assert math.exp(log_fredholm_det(sp, 0.7)) == pytest.approx(fredholm_det(sp, 0.7), rel=1e-14)

    def test_pole_error(self):
        sp = _fake_spectrum([0.5])
        with pytest.raises(PoleError):
            log_fredholm_det(sp, 2.0)

    def test_gamma_zero(self):
        sp = _fake_spectrum([0.3, 0.2])
        assert fredholm_det(sp, 0.0) == 1.0
        assert log_fredholm_det(sp, 0.0) == 0.0


class TestCounting:
    @given(st.lists(st.floats(min_value=1e-12, max_value=0.999), min_size=1, max_size=12))
    @settings(max_examples=80, deadline=None)
    def test_esp_against_numpy_poly(self, lam):
        # e_n(mu) are (up to sign) the coefficients of prod(x - mu_i),
        # which numpy.poly computes by convolution: an independent oracle
        sp = _fake_spectrum(sorted(lam, reverse=True))
        mu = np.asarray(lam) / (1.0 - np.asarray(lam))
        coeffs = np.poly(-mu)  # prod(x + mu_i): coeffs[k] = e_k(mu)
        det = float(np.prod(1.0 - np.asarray(lam)))
        for n in range(len(lam) + 1):
            ref = det * coeffs[n]
            assert counting_prob(sp, n) == pytest.approx(ref, rel=1e-9, abs=1e-300)

    def test_normalization(self):
        sp = compute_spectrum(build_discretization(SINE, IntervalSpec(Family.SINE, 3.0), 100))
        total = sum(counting_prob(sp, n) for n in range(len(sp.eigenvalues) + 1))
        assert abs(total - 1.0) < 1e-10

    def test_thinned_normalization(self):
        sp = _fake_spectrum([0.8, 0.4, 0.05])
        total = sum(counting_prob(sp, n, gamma=0.35) for n in range(4))
        assert abs(total - 1.0) < 1e-14

    def test_ratio_consistent(self):
        sp = _fake_spectrum([0.7, 0.2, 0.01])
        for n in (1, 2, 3):
            assert counting_ratio(sp, n) == pytest.approx(
                counting_prob(sp, n) / counting_prob(sp, 0), rel=1e-12
            )

    def test_arguments(self):
        sp = _fake_spectrum([0.5])
        with pytest.raises(ArgumentError):
            counting_prob(sp, -1)
        with pytest.raises(ArgumentError):
            counting_ratio(sp, 0)
        assert counting_prob(sp, 5) == 0.0

    def test_degenerate_gamma(self):
        sp = _fake_spectrum([1.0 - 1e-16])
        with pytest.raises(DegeneracyError):
            counting_prob(sp, 0, gamma=1.0 + 1e-5)


class TestLogDetDerivative:
    def test_matches_direct_difference(self):
        s, gamma, h = 3.0, 0.8, 1e-3
        got = d_ds_log_det(SINE, s, gamma, h=h, n=80)
        vals = []
        for ss in (s + h, s - h):
            sp = compute_spectrum(build_discretization(SINE, IntervalSpec(Family.SINE, ss), 80))
            vals.append(log_fredholm_det(sp, gamma))
        assert got == pytest.approx((vals[0] - vals[1]) / (2 * h), rel=1e-12)

    def test_step_validation(self):
        with pytest.raises(ArgumentError):
            d_ds_log_det(SINE, 2.0, 1.0, h=1.0)

    def test_sine_derivative_value(self):
        # d/ds log D must be negative (the gap shrinks the determinant) and
        # stable under refinement
        a = d_ds_log_det(SINE, 2.0, 1.0, n=80)
        b = d_ds_log_det(SINE, 2.0, 1.0, n=140)
        assert a < 0.0
        assert abs(a - b) < 1e-9 * max(1.0, abs(a))
