"""Special-function surface: Airy Ai/Ai', Bessel J_a/J_a', Gamma family,
complex log-Barnes-G, and the zeta derivative constant.

Scalar Airy/Bessel evaluation is delegated to the active backend (compiled
extension or pure Python, see _backend).  This module adds domain validation,
the complex Gamma/Barnes ladder, and the certified-branch metadata used by
the overlap cross-checks.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _backend
from .errors import DomainError

__all__ = [
    "EvalRange",
    "BRANCH_RANGES",
    "airy_ai",
    "airy_ai_prime",
    "bessel_j",
    "bessel_j_prime",
    "log_gamma",
    "log_gamma_complex",
    "log_barnes_g",
    "zeta_prime_minus_one",
    "zeta_real",
    "backend_name",
]

backend_name = _backend.backend_name

_AIRY_LO, _AIRY_HI = -40.0, 200.0
_BESSEL_XMAX = 1e4


@dataclass(frozen=True)
class EvalRange:
    """Argument interval over which one implementation branch is certified."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError("EvalRange requires lo < hi")


# Certified branch tilings (each adjacent pair overlaps by well over 10%).
# Airy branches in x; Bessel branches in x for moderate orders (the Miller
# and asymptotic seams shift with the order a, see _specfun_py).
BRANCH_RANGES = {
    "airy_ai": (
        EvalRange(-40.0, -11.0),  # oscillatory asymptotics
        EvalRange(-13.0, -3.0),  # negative Chebyshev zone
        EvalRange(-4.0, 2.5),  # Maclaurin series
        EvalRange(2.0, 15.5),  # positive Chebyshev zone
        EvalRange(13.0, 200.0),  # decaying asymptotics
    ),
    "airy_ai_prime": (
        EvalRange(-40.0, -11.0),
        EvalRange(-13.0, -3.0),
        EvalRange(-4.0, 2.5),
        EvalRange(2.0, 15.5),
        EvalRange(13.0, 200.0),
    ),
    "bessel_j": (
        EvalRange(0.0, 9.0),  # ascending series
        EvalRange(8.0, 40.0),  # backward recurrence (order-dependent top)
        EvalRange(30.0, 1e4),  # large-argument asymptotics (order 0 seam)
    ),
}


def airy_ai(x):
    """Airy function Ai(x), certified for x in [-40, 200]."""
    x = float(x)
    if not _AIRY_LO <= x <= _AIRY_HI:
        raise DomainError(f"airy_ai: x={x} outside [{_AIRY_LO}, {_AIRY_HI}]")
    return _backend.airy_ai(x)


def airy_ai_prime(x):
    """Derivative Ai'(x), certified for x in [-40, 200]."""
    x = float(x)
    if not _AIRY_LO <= x <= _AIRY_HI:
        raise DomainError(f"airy_ai_prime: x={x} outside [{_AIRY_LO}, {_AIRY_HI}]")
    return _backend.airy_ai_prime(x)


def bessel_j(a, x):
    """Bessel J_a(x) for real order a > -1, x in [0, 1e4]."""
    a = float(a)
    x = float(x)
    if a <= -1.0:
        raise DomainError(f"bessel_j: order a={a} must exceed -1")
    if not 0.0 <= x <= _BESSEL_XMAX:
        raise DomainError(f"bessel_j: x={x} outside [0, {_BESSEL_XMAX}]")
    return _backend.bessel_j(a, x)


def bessel_j_prime(a, x):
    """Derivative J_a'(x) for real order a > -1, x in (0, 1e4]."""
    a = float(a)
    x = float(x)
    if a <= -1.0:
        raise DomainError(f"bessel_j_prime: order a={a} must exceed -1")
    if not 0.0 <= x <= _BESSEL_XMAX:
        raise DomainError(f"bessel_j_prime: x={x} outside [0, {_BESSEL_XMAX}]")
    return _backend.bessel_j_prime(a, x)


def log_gamma(x):
    """log Gamma(x) for real x > 0."""
    x = float(x)
    if x <= 0.0:
        raise DomainError(f"log_gamma: x={x} must be positive")
    return math.lgamma(x)


# ---------------------------------------------------------------------------
# complex log-gamma (Lanczos, g = 607/128, 15 terms; principal branch,
# accurate to ~1e-14 relative for Re z > 0)

_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


def log_gamma_complex(z):
    """Principal-branch log Gamma(z) for complex z with Re z > 0."""
    z = complex(z)
    if z.real <= 0.0:
        raise DomainError(f"log_gamma_complex: Re z={z.real} must be positive")
    if z.imag == 0.0:
        return complex(math.lgamma(z.real))
    zm = z - 1.0
    s = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        s += _LANCZOS_C[k] / (zm + k)
    t = zm + _LANCZOS_G + 0.5
    return (zm + 0.5) * cmath.log(t) - t + _LOG_SQRT_2PI + cmath.log(s)


# ---------------------------------------------------------------------------
# Riemann zeta on integers >= 2 (Borwein's alternating-series algorithm)

_BORWEIN_N = 40


def _borwein_d():
    n = _BORWEIN_N
    d = [Fraction(0)] * (n + 1)
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(
            math.factorial(n + i - 1) * 4**i,
            math.factorial(n - i) * math.factorial(2 * i),
        )
        d[i] = n * acc
    return d


_BW_FRAC = _borwein_d()


def zeta_real(s):
    """Riemann zeta(s) for real s >= 2, ~1e-16 relative accuracy."""
    if s < 2:
        raise DomainError("zeta_real requires s >= 2")
    n = _BORWEIN_N
    dn = _BW_FRAC[n]
    total = 0.0
    for k in range(n):
        c = float((_BW_FRAC[k] - dn) / dn)
        total += (-1.0) ** k * c / float(k + 1) ** s
    return -total / (1.0 - 2.0 ** (1.0 - s))


_ZETA_INT = {k: zeta_real(k) for k in range(2, 80)}

# exact Bernoulli numbers B_0..B_32 via the defining recurrence
_BERN = [Fraction(1)]
for _m in range(1, 33):
    _s = Fraction(0)
    for _k in range(_m):
        _s += Fraction(math.comb(_m + 1, _k)) * _BERN[_k]
    _BERN.append(-_s / (_m + 1))
_BERN_F = [float(b) for b in _BERN]

_EULER_GAMMA = 0.5772156649015328606


def _zeta_prime_2():
    """zeta'(2) = -sum_{n>=2} ln(n)/n^2, Euler-Maclaurin accelerated."""
    big_n = 64
    s = 0.0
    for n in range(2, big_n):
        s += math.log(n) / (n * n)
    # tail sum_{n>=N} f(n) with f = ln(x)/x^2:
    #   integral + f(N)/2 - sum_k B_{2k}/(2k)! f^{(2k-1)}(N)
    # f^{(m)}(x) = x^{-(m+2)} (a_m + b_m ln x), a_0 = 0, b_0 = 1,
    # a_{m+1} = b_m - (m+2) a_m, b_{m+1} = -(m+2) b_m
    ln_n = math.log(big_n)
    tail = (ln_n + 1.0) / big_n + 0.5 * ln_n / (big_n * big_n)
    a, b = 0.0, 1.0
    derivs = {}
    for m in range(0, 12):
        derivs[m] = (a, b)
        a, b = b - (m + 2) * a, -(m + 2) * b
    for k in range(1, 6):
        am, bm = derivs[2 * k - 1]
        fd = (am + bm * ln_n) / big_n ** (2 * k + 1)
        tail -= _BERN_F[2 * k] / math.factorial(2 * k) * fd
    return -(s + tail)


_ZETA_PRIME_MINUS_ONE = None


def zeta_prime_minus_one():
    """zeta'(-1) via the Glaisher-Kinkelin relation zeta'(-1) = 1/12 - ln A."""
    global _ZETA_PRIME_MINUS_ONE
    if _ZETA_PRIME_MINUS_ONE is None:
        ln_a = (_EULER_GAMMA + math.log(2.0 * math.pi)) / 12.0 - _zeta_prime_2() / (
            2.0 * math.pi**2
        )
        _ZETA_PRIME_MINUS_ONE = 1.0 / 12.0 - ln_a
    return _ZETA_PRIME_MINUS_ONE


# ---------------------------------------------------------------------------
# complex log-Barnes-G, principal branch, Re z > 0

_BARNES_TAYLOR_RADIUS = 0.5
_BARNES_ASYM_RADIUS = 15.0


def _log_barnes_taylor(w):
    """ln G(1+w) for |w| <= ~0.6 from the zeta-coefficient Taylor series."""
    w = complex(w)
    s = 0.5 * w * math.log(2.0 * math.pi) - 0.5 * w * (1.0 + w)
    s -= 0.5 * _EULER_GAMMA * w * w
    wp = w * w  # holds w^{n-1} entering the n-th term
    sign = 1.0
    for n in range(3, 200):
        wp *= w
        term = sign * _ZETA_INT[n - 1] * wp / n
        s += term
        if abs(term) < 1e-18:
            break
        sign = -sign
    return s


def _log_barnes_asym(w):
    """ln G(1+w) for large |w|, Re w > 0 (Stirling-type expansion)."""
    lw = cmath.log(w)
    s = (
        0.5 * w * w * lw
        - 0.75 * w * w
        + 0.5 * w * math.log(2.0 * math.pi)
        - lw / 12.0
        + zeta_prime_minus_one()
    )
    w2 = w * w
    wp = w2
    for k in range(1, 14):
        term = _BERN_F[2 * k + 2] / (2 * k * (2 * k + 2) * wp)
        s += term
        if abs(term) < 1e-18 * max(1.0, abs(s)):
            break
        wp *= w2
    return s


def log_barnes_g(z):
    """Principal-branch ln G(z) for complex z with Re z > 0.

    Uses the Taylor series of ln G(1+w) near w = 0, the recurrence
    ln G(z+1) = ln Gamma(z) + ln G(z) for moderate reduction, and a
    Stirling-type expansion once |z| is large.
    """
    z = complex(z)
    if z.real <= 0.0:
        raise DomainError(f"log_barnes_g: Re z={z.real} must be positive")
    w = z - 1.0
    if abs(w) <= _BARNES_TAYLOR_RADIUS:
        return _log_barnes_taylor(w)
    # climb with the recurrence until the asymptotic zone, then descend in log
    shift = 0.0
    zz = z
    acc = 0.0 + 0.0j
    while abs(zz - 1.0) < _BARNES_ASYM_RADIUS:
        acc += log_gamma_complex(zz)
        zz += 1.0
        shift += 1.0
        if shift > 64:
            break
    return _log_barnes_asym(zz - 1.0) - acc
