"""Pure-Python scalar special functions: Airy Ai/Ai', Bessel J_a/J_a', log-gamma.

Double-precision implementations built from power series, frozen Chebyshev
tables (see _coeffs.py) and optimally-truncated asymptotic expansions, with
branch seams placed where each representation still has headroom.  These are
the scalar hot paths mirrored by the compiled backend; everything here uses
only the math module so the two backends can share one algorithm.
"""

import math

from . import _coeffs

__all__ = [
    "airy_ai",
    "airy_ai_prime",
    "bessel_j",
    "bessel_j_prime",
    "bessel_j_pair",
    "log_gamma_real",
]

_SQRT_PI = math.sqrt(math.pi)
_TWO_THIRDS = 2.0 / 3.0

# Maclaurin values Ai(0) = 3^{-2/3}/Gamma(2/3), -Ai'(0) = 3^{-1/3}/Gamma(1/3)
_AI_C1 = 0.3550280538878172
_AI_C2 = 0.2588194037928068

# seams: Maclaurin on (-YLO, XLO), Chebyshev zones, asymptotics beyond
_X_POS_CHEB = _coeffs.AIRY_POS_XLO  # 2.0
_X_POS_ASYM = _coeffs.AIRY_POS_XHI  # 15.5
_Y_NEG_CHEB = _coeffs.AIRY_NEG_YLO  # 3.0
_Y_NEG_ASYM = _coeffs.AIRY_NEG_YHI  # 13.0


def _clenshaw(cs, u):
    b1 = 0.0
    b2 = 0.0
    for k in range(len(cs) - 1, 0, -1):
        b1, b2 = 2.0 * u * b1 - b2 + cs[k], b1
    return u * b1 - b2 + cs[0]


def _airy_maclaurin(x):
    """(Ai, Ai') on the central zone via the two entire solutions f, g."""
    x3 = x * x * x
    # f = sum a_k x^{3k}, g = sum b_k x^{3k+1}
    f = 1.0
    fp = 0.0
    g = x
    gp = 1.0
    ta = 1.0  # a_k x^{3k}
    tb = x  # b_k x^{3k+1}
    k = 1
    while True:
        ta *= x3 / ((3 * k) * (3 * k - 1))
        tb *= x3 / ((3 * k) * (3 * k + 1))
        f += ta
        g += tb
        if x != 0.0:
            fp += 3 * k * ta / x
            gp += (3 * k + 1) * tb / x
        if abs(ta) < 1e-18 * abs(f) and abs(tb) < 1e-18 * max(abs(g), 1e-30):
            break
        k += 1
        if k > 80:
            break
    ai = _AI_C1 * f - _AI_C2 * g
    aip = _AI_C1 * fp - _AI_C2 * gp
    return ai, aip


def _airy_uk_sums(zeta, want_v):
    """Optimally truncated sums S_u = sum (-1)^k u_k zeta^{-k} and likewise S_v."""
    su = 1.0
    sv = 1.0
    u = 1.0
    sign = 1.0
    prev = 1.0
    k = 1
    while True:
        u *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        term = u / zeta**k
        if term > prev:  # divergence onset: stop at the smallest term
            break
        prev = term
        sign = -sign
        su += sign * term
        if want_v:
            sv += sign * term * (6 * k + 1) / (1 - 6 * k)
        if term < 1e-18:
            break
        k += 1
        if k > 60:
            break
    return su, sv


def _airy_pos_asym(x):
    zeta = _TWO_THIRDS * x * math.sqrt(x)
    su, sv = _airy_uk_sums(zeta, True)
    if zeta > 700.0:
        # e^{-zeta} underflows; split the exponent through the prefactor
        lg = -zeta - math.log(2.0 * _SQRT_PI) - 0.25 * math.log(x)
        if lg < -745.0:
            return 0.0, 0.0
        pre = math.exp(lg)
        return pre * su, -pre * x**0.5 * sv
    pre = math.exp(-zeta) / (2.0 * _SQRT_PI)
    x4 = x**0.25
    return pre / x4 * su, -pre * x4 * sv


def _airy_neg_trig(y):
    """cos and sin of zeta + pi/4 with argument reduction in extended precision."""
    zeta = _TWO_THIRDS * y * math.sqrt(y)
    zp = zeta + 0.25 * math.pi
    return zeta, math.cos(zp), math.sin(zp)


def _airy_neg_asym(y):
    zeta, c, s = _airy_neg_trig(y)
    # even/odd splits of the u_k and v_k series
    sp = 1.0
    sq = 0.0
    sr = 1.0
    ssum = 0.0
    u = 1.0
    v = 1.0
    prev = 1.0
    zk = 1.0
    for k in range(1, 60):
        u *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        v = u * (6 * k + 1) / (1 - 6 * k)
        zk /= zeta
        term = u * zk
        if term > prev:
            break
        prev = term
        m = k // 2
        sgn = -1.0 if (m % 2) else 1.0
        if k % 2 == 1:
            sq += sgn * term
            ssum -= sgn * v * zk
        else:
            sp += sgn * term
            sr += sgn * v * zk
        if term < 1e-18:
            break
    y4 = y**0.25
    ai = (s * sp - c * sq) / (_SQRT_PI * y4)
    aip = -(c * sr - s * ssum) * y4 / _SQRT_PI
    return ai, aip


def _airy_pos_cheb(x):
    zeta = _TWO_THIRDS * x * math.sqrt(x)
    r = 1.0 / zeta
    u = (2.0 * r - (_coeffs.AIRY_POS_RLO + _coeffs.AIRY_POS_RHI)) / (
        _coeffs.AIRY_POS_RHI - _coeffs.AIRY_POS_RLO
    )
    fa = _clenshaw(_coeffs.AIRY_FA, u)
    fap = _clenshaw(_coeffs.AIRY_FAP, u)
    pre = math.exp(-zeta) / (2.0 * _SQRT_PI)
    x4 = x**0.25
    return pre / x4 * fa, -pre * x4 * fap


def _airy_neg_cheb(y):
    zeta, c, s = _airy_neg_trig(y)
    r = 1.0 / zeta
    u = (2.0 * r - (_coeffs.AIRY_NEG_RLO + _coeffs.AIRY_NEG_RHI)) / (
        _coeffs.AIRY_NEG_RHI - _coeffs.AIRY_NEG_RLO
    )
    p = _clenshaw(_coeffs.AIRY_NEG_P, u)
    q = _clenshaw(_coeffs.AIRY_NEG_Q, u)
    rr = _clenshaw(_coeffs.AIRY_NEG_R, u)
    ss = _clenshaw(_coeffs.AIRY_NEG_S, u)
    y4 = y**0.25
    ai = (s * p - c * q) / (_SQRT_PI * y4)
    aip = -(c * rr - s * ss) * y4 / _SQRT_PI
    return ai, aip


def _airy_pair(x):
    if x >= _X_POS_CHEB:
        if x <= _X_POS_ASYM:
            return _airy_pos_cheb(x)
        return _airy_pos_asym(x)
    if x > -_Y_NEG_CHEB:
        return _airy_maclaurin(x)
    y = -x
    if y <= _Y_NEG_ASYM:
        return _airy_neg_cheb(y)
    return _airy_neg_asym(y)


def airy_ai(x):
    """Airy function Ai(x) in double precision."""
    return _airy_pair(x)[0]


def airy_ai_prime(x):
    """Derivative Ai'(x) in double precision."""
    return _airy_pair(x)[1]


# ---------------------------------------------------------------------------
# Bessel J_a for real order a > -1


def _bessel_series(a, x):
    """Ascending power series; accurate for x <= 9."""
    if x == 0.0:
        return 1.0 if a == 0.0 else 0.0
    xh = 0.5 * x
    lpre = a * math.log(xh) - math.lgamma(a + 1.0)
    q = -xh * xh
    term = 1.0
    s = 1.0
    k = 1
    while True:
        term *= q / (k * (k + a))
        s += term
        if abs(term) < 1e-18 * max(abs(s), 1e-3):
            break
        k += 1
        if k > 200:
            break
    if lpre < -700.0:
        return math.exp(lpre + math.log(abs(s))) * math.copysign(1.0, s) if s != 0 else 0.0
    return math.exp(lpre) * s


def _bessel_hankel_sums(a, x):
    """P and Q sums of the large-x expansion, optimally truncated."""
    mu = 4.0 * a * a
    p = 1.0
    q = 0.0
    ak = 1.0
    prev = math.inf
    k = 1
    while k < 60:
        ak *= (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        t = abs(ak)
        if t > prev:
            break
        prev = t
        m = k // 2
        sgn = -1.0 if (m % 2) else 1.0
        if k % 2 == 1:
            q += sgn * ak
        else:
            p += sgn * ak
        if t < 1e-18:
            break
        k += 1
    return p, q


def _bessel_hankel(a, x):
    p, q = _bessel_hankel_sums(a, x)
    om = x - (0.5 * a + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (math.cos(om) * p - math.sin(om) * q)


def _bessel_miller_pair(a, x):
    """(J_a, J_{a+1}) by backward recurrence with Gegenbauer normalization."""
    n_start = int(x + 12.0 * math.sqrt(x) + 22.0)
    f_hi = 0.0
    f = 1e-300
    # normalization sum S = sum_k c_k f_{a+2k} with
    # c_0 = Gamma(a+1), c_k = (a+2k) Gamma(a+k) / k!;  S -> (x/2)^a
    # accumulate ratios c_k / c_0 in log space to keep scale sane
    vals = [0.0] * (n_start + 2)
    vals[n_start + 1] = f_hi
    vals[n_start] = f
    for n in range(n_start, 0, -1):
        fm = (2.0 * (a + n) / x) * vals[n] - vals[n + 1]
        vals[n - 1] = fm
        if abs(fm) > 1e250:
            scale = 1e-250
            for i in range(n - 1, n_start + 2):
                vals[i] *= scale
    lg_a1 = math.lgamma(a + 1.0)
    s = 0.0
    for k in range(0, n_start // 2 + 1):
        if k == 0:
            c = 1.0
        else:
            c = (a + 2.0 * k) * math.exp(math.lgamma(a + k) - lg_a1 - math.lgamma(k + 1.0))
        s += c * vals[2 * k]
    target = math.exp(a * math.log(0.5 * x) - lg_a1)
    scale = target / s
    return vals[0] * scale, vals[1] * scale


def bessel_j_pair(a, x):
    """Return (J_a(x), J_{a+1}(x)) for real order a > -1, x >= 0."""
    x_series = 9.0
    x_asym = 30.0 + a * a
    if x <= x_series:
        return _bessel_series(a, x), _bessel_series(a + 1.0, x)
    if x >= x_asym:
        return _bessel_hankel(a, x), _bessel_hankel(a + 1.0, x)
    return _bessel_miller_pair(a, x)


def bessel_j(a, x):
    """Bessel function of the first kind J_a(x), real order a > -1, x >= 0."""
    return bessel_j_pair(a, x)[0]


def bessel_j_prime(a, x):
    """Derivative J_a'(x) via the recurrence J_a' = (a/x) J_a - J_{a+1}."""
    if x == 0.0:
        if a == 1.0:
            return 0.5
        if a == 0.0 or a > 1.0:
            return 0.0
        return math.inf if a > 0.0 else -math.inf
    ja, ja1 = bessel_j_pair(a, x)
    return (a / x) * ja - ja1


# ---------------------------------------------------------------------------
# real log-gamma (thin wrapper so both backends expose the same name)


def log_gamma_real(x):
    """log Gamma(x) for x > 0."""
    if x <= 0.0:
        raise ValueError("log_gamma_real requires x > 0")
    return math.lgamma(x)
