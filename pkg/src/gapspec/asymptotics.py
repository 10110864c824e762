"""Closed-form eigenvalue laws, gap and transition determinants, Stokes-curve
parameterizations and the sigma coefficients for the log-derivative estimates.

All determinant expansions are computed and compared in log space: the
prefactors like exp(s^3/12) underflow long before the regimes of interest.
"""

import math
from dataclasses import dataclass

from .errors import ArgumentError, DomainError, PoleError
from .kernels import Family, _coerce_family
from .specfun import log_barnes_g, log_gamma, zeta_prime_minus_one

__all__ = [
    "StokesPoint",
    "TransitionExpansion",
    "chi_decompose",
    "p_of_chi",
    "stokes_v",
    "stokes_chi",
    "sine_eig",
    "airy_eig",
    "bessel_eig",
    "d_coeff",
    "airy_gap",
    "bessel_gap",
    "sine_det_sub",
    "sine_det_crit",
    "sine_transition",
    "airy_transition",
    "bessel_transition",
    "sigma_pm",
    "airy_logderiv_asymp",
    "bessel_logderiv_asymp",
]

_SQRT2 = math.sqrt(2.0)
_LN2 = math.log(2.0)


def chi_decompose(chi):
    """Split chi = k + alpha with integer k >= 0 and alpha in [-1/2, 1/2)."""
    chi = float(chi)
    if chi < -0.5:
        raise ArgumentError(f"chi_decompose requires chi >= -1/2, got {chi}")
    k = math.floor(chi + 0.5)
    if k < 0:
        k = 0
    alpha = chi - k
    # guard rounding at the upper edge so alpha stays in [-1/2, 1/2)
    if alpha >= 0.5:
        k += 1
        alpha = chi - k
    return k, alpha


def p_of_chi(chi, family):
    """Number of transition factors prescribed for curve parameter chi."""
    fam = _coerce_family(family)
    chi = float(chi)
    if fam is Family.SINE:
        if chi < 0.5:
            return 1
    elif chi < -0.5:
        return 0
    # unique integer in (chi + 1/2, chi + 3/2]
    return math.floor(chi + 1.5)


def stokes_v(family, t, chi, a=0.0):
    """v on the Stokes curve with parameter chi at scale t."""
    fam = _coerce_family(family)
    t = float(t)
    if t <= 1.0:
        raise ArgumentError(f"stokes_v requires t > 1, got {t}")
    if fam is Family.SINE:
        return 2.0 * t - chi * math.log(t)
    if fam is Family.AIRY:
        return (2.0 * _SQRT2 / 3.0) * t - chi * math.log(t)
    return 2.0 * t - 2.0 * (chi + 0.5 * a) * math.log(t)


def stokes_chi(family, t, v, a=0.0):
    """Invert stokes_v: the curve parameter chi passing through (t, v)."""
    fam = _coerce_family(family)
    t = float(t)
    if t <= 1.0:
        raise ArgumentError(f"stokes_chi requires t > 1, got {t}")
    lt = math.log(t)
    if fam is Family.SINE:
        return (2.0 * t - v) / lt
    if fam is Family.AIRY:
        return ((2.0 * _SQRT2 / 3.0) * t - v) / lt
    return (2.0 * t - v) / (2.0 * lt) - 0.5 * a


@dataclass(frozen=True)
class StokesPoint:
    """A point (t, v) on the Stokes curve with parameter chi = k + alpha."""

    family: Family
    t: float
    v: float
    chi: float
    k: int
    alpha: float
    a: float = 0.0

    @property
    def kappa(self):
        return self.v / self.t

    @classmethod
    def from_chi(cls, family, t, chi, a=0.0):
        fam = _coerce_family(family)
        k, alpha = chi_decompose(chi)
        return cls(fam, float(t), stokes_v(fam, t, chi, a), float(chi), k, alpha, float(a))


@dataclass(frozen=True)
class TransitionExpansion:
    """Log-space transition determinant: exp(log_prefactor) * prod(factors).

    excesses[i] = factors[i] - 1 held at full precision, so that identities
    involving factor - 1 do not lose digits when the factor is close to 1.
    """

    log_prefactor: float
    factors: tuple
    p: int
    error_exponent: float = math.nan
    excesses: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(float(f) for f in self.factors))
        if self.excesses is None:
            object.__setattr__(
                self, "excesses", tuple(f - 1.0 for f in self.factors)
            )
        else:
            object.__setattr__(self, "excesses", tuple(float(e) for e in self.excesses))
        if len(self.factors) != self.p or len(self.excesses) != self.p:
            raise ArgumentError("TransitionExpansion: len(factors) must equal p")

    @property
    def log_value(self):
        return self.log_prefactor + sum(math.log1p(e) for e in self.excesses)


def _log_factorial(i):
    return log_gamma(i + 1.0)


def sine_eig(i, s):
    """Predicted 1 - lambda_i for the sine operator on [-s, s]."""
    i = _check_index(i)
    s = float(s)
    if s < 2.0:
        raise ArgumentError(f"sine_eig requires s >= 2, got {s}")
    lg = (
        0.5 * math.log(math.pi)
        - _log_factorial(i)
        + (3 * i + 2) * _LN2
        + (i + 0.5) * math.log(s)
        - 2.0 * s
    )
    return math.exp(lg)


def airy_eig(i, s):
    """Predicted 1 - lambda_i for the Airy operator on (s, inf), s < 0."""
    i = _check_index(i)
    s = float(s)
    if s >= 0.0:
        raise ArgumentError(f"airy_eig requires s < 0, got {s}")
    t = (-s) ** 1.5
    if t < 5.0:
        raise ArgumentError(f"airy_eig requires t = (-s)^(3/2) >= 5, got {t}")
    lg = (
        0.5 * math.log(math.pi)
        - _log_factorial(i)
        + (3.5 * i + 2.25) * _LN2
        + (i + 0.5) * math.log(t)
        - (2.0 * _SQRT2 / 3.0) * t
    )
    return math.exp(lg)


def bessel_eig(i, s, a):
    """Predicted 1 - lambda_i for the Bessel operator on [0, s]."""
    i = _check_index(i)
    s = float(s)
    a = _check_order(a)
    t = math.sqrt(s)
    if t < 4.0:
        raise ArgumentError(f"bessel_eig requires t = sqrt(s) >= 4, got {t}")
    lg = (
        math.log(math.pi)
        - _log_factorial(i)
        + (4 * i + 2 * a + 3) * _LN2
        - log_gamma(1.0 + a + i)
        + (2 * i + 1 + a) * math.log(t)
        - 2.0 * t
    )
    return math.exp(lg)


def d_coeff(i, a):
    """d_i(a) = i! Gamma(1+a+i) / (pi 2^{4i+2a+3}), via log-gamma."""
    i = _check_index(i)
    a = _check_order(a)
    lg = (
        _log_factorial(i)
        + log_gamma(1.0 + a + i)
        - math.log(math.pi)
        - (4 * i + 2 * a + 3) * _LN2
    )
    return math.exp(lg)


def _check_index(i):
    i = int(i)
    if i < 0:
        raise ArgumentError(f"index must be >= 0, got {i}")
    return i


def _check_order(a):
    a = float(a)
    if a <= -1.0:
        raise DomainError(f"Bessel order must satisfy a > -1, got {a}")
    return a


def _log_c0():
    # c0 = exp((1/24) ln 2 + zeta'(-1))
    return _LN2 / 24.0 + zeta_prime_minus_one()


def _log_c0_crit():
    # c0' = exp((1/12) ln 2 + 3 zeta'(-1))
    return _LN2 / 12.0 + 3.0 * zeta_prime_minus_one()


def _log_tau(a):
    # tau_a = G(1+a) / (2 pi)^{a/2}
    return log_barnes_g(1.0 + a).real - 0.5 * a * math.log(2.0 * math.pi)


def airy_gap(s):
    """log D(J_Ai; 1) expansion: s^3/12 - (1/8) ln|s| + ln c0."""
    s = float(s)
    if s > -2.0:
        raise ArgumentError(f"airy_gap requires s <= -2, got {s}")
    return s**3 / 12.0 - 0.125 * math.log(-s) + _log_c0()


def bessel_gap(s, a):
    """log D(J_Bess; 1) expansion: -s/4 + a sqrt(s) - (a^2/4) ln s + ln tau_a."""
    s = float(s)
    a = _check_order(a)
    if s < 4.0:
        raise ArgumentError(f"bessel_gap requires s >= 4, got {s}")
    return -0.25 * s + a * math.sqrt(s) - 0.25 * a * a * math.log(s) + _log_tau(a)


def sine_det_sub(s, v):
    """Sub-critical log D(J_sin; gamma), gamma = 1 - e^{-v} < 1."""
    s = float(s)
    v = float(v)
    if s < 2.0:
        raise ArgumentError(f"sine_det_sub requires s >= 2, got {s}")
    if v <= 0.0:
        raise ArgumentError(f"sine_det_sub requires v > 0, got {v}")
    return (
        -(2.0 * v / math.pi) * s
        + (v * v / (2.0 * math.pi**2)) * math.log(4.0 * s)
        + 4.0 * log_barnes_g(complex(1.0, v / (2.0 * math.pi))).real
    )


def sine_det_crit(s):
    """Critical log D(J_sin; 1): -s^2/2 - (1/4) ln s + ln c0'."""
    s = float(s)
    if s < 2.0:
        raise ArgumentError(f"sine_det_crit requires s >= 2, got {s}")
    return -0.5 * s * s - 0.25 * math.log(s) + _log_c0_crit()


def _error_exponent(family, p, chi):
    if chi is None:
        return math.nan
    gap = p - chi - 0.5
    if family is Family.SINE:
        return min(gap, 1.0)
    if family is Family.AIRY:
        return min(gap, 0.5)
    # Bessel: the bound is max(t^{-2 gap}, ln t / t); report the power part
    return 2.0 * gap


def sine_transition(s, v, p, chi=None):
    """Transition determinant for the sine kernel with p explicit factors."""
    s = float(s)
    v = float(v)
    p = int(p)
    if p < 1:
        raise ArgumentError(f"sine_transition requires p >= 1, got {p}")
    if s < 2.0:
        raise ArgumentError(f"sine_transition requires s >= 2, got {s}")
    if v <= 0.0:
        raise ArgumentError(f"sine_transition requires v > 0, got {v}")
    pref = -0.5 * s * s - 0.25 * math.log(s) + _log_c0_crit()
    exc = []
    for i in range(p):
        lg = (
            _log_factorial(i)
            - 0.5 * math.log(math.pi)
            - (3 * i + 2) * _LN2
            - (i + 0.5) * math.log(s)
            + 2.0 * s
            - v
        )
        exc.append(math.exp(lg))
    return TransitionExpansion(
        pref,
        tuple(1.0 + e for e in exc),
        p,
        _error_exponent(Family.SINE, p, chi),
        tuple(exc),
    )


def airy_transition(s, v, p, chi=None):
    """Transition determinant for the Airy kernel with p explicit factors."""
    s = float(s)
    v = float(v)
    p = int(p)
    if p < 0:
        raise ArgumentError(f"airy_transition requires p >= 0, got {p}")
    if s >= 0.0 or (-s) ** 1.5 < 5.0:
        raise ArgumentError(f"airy_transition requires t = (-s)^(3/2) >= 5, got s={s}")
    if v <= 0.0:
        raise ArgumentError(f"airy_transition requires v > 0, got {v}")
    t = (-s) ** 1.5
    pref = s**3 / 12.0 - 0.125 * math.log(-s) + _log_c0()
    exc = []
    for i in range(p):
        lg = (
            _log_factorial(i)
            - 0.5 * math.log(math.pi)
            - (3.5 * i + 2.25) * _LN2
            - (i + 0.5) * math.log(t)
            + (2.0 * _SQRT2 / 3.0) * t
            - v
        )
        exc.append(math.exp(lg))
    return TransitionExpansion(
        pref,
        tuple(1.0 + e for e in exc),
        p,
        _error_exponent(Family.AIRY, p, chi),
        tuple(exc),
    )


def bessel_transition(s, v, a, p, chi=None):
    """Transition determinant for the Bessel kernel with p explicit factors."""
    s = float(s)
    v = float(v)
    a = _check_order(a)
    p = int(p)
    if p < 0:
        raise ArgumentError(f"bessel_transition requires p >= 0, got {p}")
    if s <= 0.0 or math.sqrt(s) < 4.0:
        raise ArgumentError(f"bessel_transition requires t = sqrt(s) >= 4, got s={s}")
    if v <= 0.0:
        raise ArgumentError(f"bessel_transition requires v > 0, got {v}")
    t = math.sqrt(s)
    pref = -0.25 * s + a * t - 0.25 * a * a * math.log(s) + _log_tau(a)
    exc = []
    for i in range(p):
        lg = (
            _log_factorial(i)
            + log_gamma(1.0 + a + i)
            - math.log(math.pi)
            - (4 * i + 2 * a + 3) * _LN2
            - (2 * i + 1 + a) * math.log(t)
            + 2.0 * t
            - v
        )
        exc.append(math.exp(lg))
    return TransitionExpansion(
        pref,
        tuple(1.0 + e for e in exc),
        p,
        _error_exponent(Family.BESSEL, p, chi),
        tuple(exc),
    )


def _hermite_norm_ratio(k):
    # h_k / (2 pi) with h_k = k! sqrt(pi) / 2^k, in log space
    return _log_factorial(k) + 0.5 * math.log(math.pi) - k * _LN2 - math.log(2.0 * math.pi)


def sigma_pm(family, sign, k, alpha, t, a=0.0):
    """sigma+/- coefficients of the log-derivative estimates.

    For the '+' branch the expansion parameter is t^{alpha-1/2}-small; for the
    '-' branch it is t^{-alpha-1/2}-small; both built from the Hermite (Airy)
    or Laguerre (Bessel) norms h_k.
    """
    fam = _coerce_family(family)
    k = _check_index(k)
    alpha = float(alpha)
    t = float(t)
    if t <= 0.0:
        raise ArgumentError(f"sigma_pm requires t > 0, got {t}")
    if sign not in ("+", "-"):
        raise ArgumentError(f"sign must be '+' or '-', got {sign!r}")
    if fam is Family.AIRY:
        if sign == "+":
            # x = (h_k / 2pi) 2^{-5k/2 - 5/4} t^{alpha - 1/2}
            lx = _hermite_norm_ratio(k) - (2.5 * k + 1.25) * _LN2 + (alpha - 0.5) * math.log(t)
            x = math.exp(lx)
            return _ratio(x, 1.0 + x)
        if k == 0:
            return 0.0
        # y = (2pi / h_{k-1}) 2^{5k/2 - 5/4} t^{-alpha - 1/2}
        ly = -_hermite_norm_ratio(k - 1) + (2.5 * k - 1.25) * _LN2 + (-alpha - 0.5) * math.log(t)
        y = math.exp(ly)
        return _ratio(y, 1.0 + y)
    if fam is Family.BESSEL:
        a = _check_order(a)
        if sign == "+":
            x = d_coeff(k, a) * t ** (-1.0 + 2.0 * alpha)
            return _ratio(-2.0 * x, 1.0 + x)
        if k == 0:
            return 0.0
        y = t ** (-1.0 - 2.0 * alpha)
        return _ratio(-2.0 * y, d_coeff(k - 1, a) + y)
    raise ArgumentError("sigma_pm is defined for the Airy and Bessel families")


def _ratio(num, den):
    if den == 0.0:
        raise PoleError("sigma_pm: vanishing denominator")
    return num / den


def _sigma_airy_v(sign, k, alpha, t, v):
    """Airy sigma with the curve substitution t^alpha = t^{-k} e^{(2sqrt2/3)t - v}."""
    zeta = (2.0 * _SQRT2 / 3.0) * t
    if sign == "+":
        lx = _hermite_norm_ratio(k) - (2.5 * k + 1.25) * _LN2 + (-k - 0.5) * math.log(t) + zeta - v
        if lx > 700.0:
            return 1.0
        x = math.exp(lx)
        return x / (1.0 + x)
    if k == 0:
        return 0.0
    ly = -_hermite_norm_ratio(k - 1) + (2.5 * k - 1.25) * _LN2 + (k - 0.5) * math.log(t) + v - zeta
    if ly > 700.0:
        return 1.0
    y = math.exp(ly)
    return y / (1.0 + y)


def _sigma_bessel_v(sign, k, alpha, t, v, a):
    """Bessel sigma with the substitution t^{2 alpha} = t^{-2k-a} e^{2t - v}."""
    if sign == "+":
        lx = (
            math.log(d_coeff(k, a))
            + (-2.0 * k - a - 1.0) * math.log(t)
            + 2.0 * t
            - v
        )
        if lx > 700.0:
            return -2.0
        x = math.exp(lx)
        return -2.0 * x / (1.0 + x)
    if k == 0:
        return 0.0
    ly = (2.0 * k + a - 1.0) * math.log(t) + v - 2.0 * t
    if ly > 700.0:
        return -2.0
    y = math.exp(ly)
    return -2.0 * y / (d_coeff(k - 1, a) + y)


def airy_logderiv_asymp(s, v, chi):
    """d/ds log D(J_Ai; gamma) along the curve, gamma = 1 - e^{-v}."""
    s = float(s)
    v = float(v)
    t = (-s) ** 1.5 if s < 0.0 else 0.0
    if t < 5.0:
        raise ArgumentError(f"airy_logderiv_asymp requires t = (-s)^(3/2) >= 5, got s={s}")
    k, alpha = chi_decompose(chi)
    root = _SQRT2 * math.sqrt(-s)
    base = s * s / 4.0 - 1.0 / (8.0 * s) - root * k - 2.0 * k * k / s
    if alpha >= 0.0:
        sig = 0.0 if math.isinf(v) else _sigma_airy_v("+", k, alpha, t, v)
        return base - root * sig + (7.0 * k / (12.0 * s)) * (k + 1.0)
    sig = 1.0 if math.isinf(v) else _sigma_airy_v("-", k, alpha, t, v)
    return base + root * sig + (7.0 * k / (12.0 * s)) * (k - 1.0)


def bessel_logderiv_asymp(s, v, chi, a):
    """d/ds log D(J_Bess; gamma) along the curve, gamma = 1 - e^{-v}."""
    s = float(s)
    v = float(v)
    a = _check_order(a)
    t = math.sqrt(s) if s > 0.0 else 0.0
    if t < 4.0:
        raise ArgumentError(f"bessel_logderiv_asymp requires t = sqrt(s) >= 4, got s={s}")
    k, alpha = chi_decompose(chi)
    base = (
        -0.25
        + a / (2.0 * t)
        - a * a / (4.0 * s)
        + k / t
        - k * (k + a) / (2.0 * s)
    )
    if alpha >= 0.0:
        sig = 0.0 if math.isinf(v) else _sigma_bessel_v("+", k, alpha, t, v, a)
        return base - sig / (2.0 * t)
    sig = -2.0 if math.isinf(v) else _sigma_bessel_v("-", k, alpha, t, v, a)
    return base + sig / (2.0 * t)
