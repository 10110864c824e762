# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar special functions: Airy Ai/Ai', Bessel J_a/J_a', log-gamma.

Mirrors the algorithms in _specfun_py exactly (same branch seams, same
truncation rules) so the two backends are interchangeable; see that module
for the derivations.  Selected at import time by the backend dispatcher.
"""

from libc.math cimport (
    sqrt, exp, log, cos, sin, fabs, pow, lgamma, copysign, INFINITY, M_PI
)
from libc.stdlib cimport malloc, free

from . import _coeffs

__all__ = [
    "airy_ai",
    "airy_ai_prime",
    "bessel_j",
    "bessel_j_prime",
    "bessel_j_pair",
    "log_gamma_real",
]

cdef double SQRT_PI = sqrt(M_PI)
cdef double TWO_THIRDS = 2.0 / 3.0
cdef double AI_C1 = 0.3550280538878172
cdef double AI_C2 = 0.2588194037928068

DEF MAXCOEF = 64

cdef double FA[MAXCOEF]
cdef double FAP[MAXCOEF]
cdef double NP_[MAXCOEF]
cdef double NQ[MAXCOEF]
cdef double NR[MAXCOEF]
cdef double NS[MAXCOEF]
cdef int NFA, NFAP, NNP, NNQ, NNR, NNS
cdef double POS_RLO, POS_RHI, NEG_RLO, NEG_RHI
cdef double X_POS_CHEB, X_POS_ASYM, Y_NEG_CHEB, Y_NEG_ASYM

cdef int _load(object src, double* dst) except -1:
    cdef int i, n = len(src)
    if n > MAXCOEF:
        raise RuntimeError("coefficient table too long")
    for i in range(n):
        dst[i] = src[i]
    return n

NFA = _load(_coeffs.AIRY_FA, FA)
NFAP = _load(_coeffs.AIRY_FAP, FAP)
NNP = _load(_coeffs.AIRY_NEG_P, NP_)
NNQ = _load(_coeffs.AIRY_NEG_Q, NQ)
NNR = _load(_coeffs.AIRY_NEG_R, NR)
NNS = _load(_coeffs.AIRY_NEG_S, NS)
POS_RLO = _coeffs.AIRY_POS_RLO
POS_RHI = _coeffs.AIRY_POS_RHI
NEG_RLO = _coeffs.AIRY_NEG_RLO
NEG_RHI = _coeffs.AIRY_NEG_RHI
X_POS_CHEB = _coeffs.AIRY_POS_XLO
X_POS_ASYM = _coeffs.AIRY_POS_XHI
Y_NEG_CHEB = _coeffs.AIRY_NEG_YLO
Y_NEG_ASYM = _coeffs.AIRY_NEG_YHI


cdef double _clenshaw(double* cs, int n, double u) noexcept nogil:
    cdef double b1 = 0.0, b2 = 0.0, t
    cdef int k
    for k in range(n - 1, 0, -1):
        t = 2.0 * u * b1 - b2 + cs[k]
        b2 = b1
        b1 = t
    return u * b1 - b2 + cs[0]


cdef void _airy_maclaurin(double x, double* ai, double* aip) noexcept nogil:
    cdef double x3 = x * x * x
    cdef double f = 1.0, fp = 0.0, g = x, gp = 1.0
    cdef double ta = 1.0, tb = x
    cdef double gm
    cdef int k = 1
    while True:
        ta *= x3 / ((3 * k) * (3 * k - 1))
        tb *= x3 / ((3 * k) * (3 * k + 1))
        f += ta
        g += tb
        if x != 0.0:
            fp += 3 * k * ta / x
            gp += (3 * k + 1) * tb / x
        gm = fabs(g)
        if gm < 1e-30:
            gm = 1e-30
        if fabs(ta) < 1e-18 * fabs(f) and fabs(tb) < 1e-18 * gm:
            break
        k += 1
        if k > 80:
            break
    ai[0] = AI_C1 * f - AI_C2 * g
    aip[0] = AI_C1 * fp - AI_C2 * gp


cdef void _airy_pos_asym(double x, double* ai, double* aip) noexcept nogil:
    cdef double zeta = TWO_THIRDS * x * sqrt(x)
    cdef double su = 1.0, sv = 1.0, u = 1.0, sign = 1.0, prev = 1.0
    cdef double term, pre, lg, x4
    cdef int k = 1
    while True:
        u *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        term = u / pow(zeta, k)
        if term > prev:
            break
        prev = term
        sign = -sign
        su += sign * term
        sv += sign * term * (6 * k + 1) / (1 - 6 * k)
        if term < 1e-18:
            break
        k += 1
        if k > 60:
            break
    if zeta > 700.0:
        lg = -zeta - log(2.0 * SQRT_PI) - 0.25 * log(x)
        if lg < -745.0:
            ai[0] = 0.0
            aip[0] = 0.0
            return
        pre = exp(lg)
        ai[0] = pre * su
        aip[0] = -pre * sqrt(x) * sv
        return
    pre = exp(-zeta) / (2.0 * SQRT_PI)
    x4 = pow(x, 0.25)
    ai[0] = pre / x4 * su
    aip[0] = -pre * x4 * sv


cdef void _airy_neg_asym(double y, double* ai, double* aip) noexcept nogil:
    cdef double zeta = TWO_THIRDS * y * sqrt(y)
    cdef double zp = zeta + 0.25 * M_PI
    cdef double c = cos(zp), s = sin(zp)
    cdef double sp = 1.0, sq = 0.0, sr = 1.0, ssum = 0.0
    cdef double u = 1.0, v, prev = 1.0, zk = 1.0
    cdef double term, sgn, y4
    cdef int k, m
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
    y4 = pow(y, 0.25)
    ai[0] = (s * sp - c * sq) / (SQRT_PI * y4)
    aip[0] = -(c * sr - s * ssum) * y4 / SQRT_PI


cdef void _airy_pos_cheb(double x, double* ai, double* aip) noexcept nogil:
    cdef double zeta = TWO_THIRDS * x * sqrt(x)
    cdef double r = 1.0 / zeta
    cdef double u = (2.0 * r - (POS_RLO + POS_RHI)) / (POS_RHI - POS_RLO)
    cdef double fa = _clenshaw(FA, NFA, u)
    cdef double fap = _clenshaw(FAP, NFAP, u)
    cdef double pre = exp(-zeta) / (2.0 * SQRT_PI)
    cdef double x4 = pow(x, 0.25)
    ai[0] = pre / x4 * fa
    aip[0] = -pre * x4 * fap


cdef void _airy_neg_cheb(double y, double* ai, double* aip) noexcept nogil:
    cdef double zeta = TWO_THIRDS * y * sqrt(y)
    cdef double zp = zeta + 0.25 * M_PI
    cdef double c = cos(zp), s = sin(zp)
    cdef double r = 1.0 / zeta
    cdef double u = (2.0 * r - (NEG_RLO + NEG_RHI)) / (NEG_RHI - NEG_RLO)
    cdef double p = _clenshaw(NP_, NNP, u)
    cdef double q = _clenshaw(NQ, NNQ, u)
    cdef double rr = _clenshaw(NR, NNR, u)
    cdef double ss = _clenshaw(NS, NNS, u)
    cdef double y4 = pow(y, 0.25)
    ai[0] = (s * p - c * q) / (SQRT_PI * y4)
    aip[0] = -(c * rr - s * ss) * y4 / SQRT_PI


cdef void _airy_pair(double x, double* ai, double* aip) noexcept nogil:
    if x >= X_POS_CHEB:
        if x <= X_POS_ASYM:
            _airy_pos_cheb(x, ai, aip)
        else:
            _airy_pos_asym(x, ai, aip)
    elif x > -Y_NEG_CHEB:
        _airy_maclaurin(x, ai, aip)
    elif -x <= Y_NEG_ASYM:
        _airy_neg_cheb(-x, ai, aip)
    else:
        _airy_neg_asym(-x, ai, aip)


def airy_ai(double x):
    """Airy function Ai(x) in double precision."""
    cdef double ai, aip
    _airy_pair(x, &ai, &aip)
    return ai


def airy_ai_prime(double x):
    """Derivative Ai'(x) in double precision."""
    cdef double ai, aip
    _airy_pair(x, &ai, &aip)
    return aip


cdef double _bessel_series(double a, double x) noexcept nogil:
    cdef double xh, lpre, q, term, s, sm
    cdef int k
    if x == 0.0:
        return 1.0 if a == 0.0 else 0.0
    xh = 0.5 * x
    lpre = a * log(xh) - lgamma(a + 1.0)
    q = -xh * xh
    term = 1.0
    s = 1.0
    k = 1
    while True:
        term *= q / (k * (k + a))
        s += term
        sm = fabs(s)
        if sm < 1e-3:
            sm = 1e-3
        if fabs(term) < 1e-18 * sm:
            break
        k += 1
        if k > 200:
            break
    if lpre < -700.0:
        if s == 0.0:
            return 0.0
        return exp(lpre + log(fabs(s))) * copysign(1.0, s)
    return exp(lpre) * s


cdef double _bessel_hankel(double a, double x) noexcept nogil:
    cdef double mu = 4.0 * a * a
    cdef double p = 1.0, q = 0.0, ak = 1.0, prev = INFINITY
    cdef double t, sgn, om
    cdef int k = 1, m
    while k < 60:
        ak *= (mu - (2 * k - 1) * (2 * k - 1)) / (8.0 * k * x)
        t = fabs(ak)
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
    om = x - (0.5 * a + 0.25) * M_PI
    return sqrt(2.0 / (M_PI * x)) * (cos(om) * p - sin(om) * q)


cdef int _bessel_miller_pair(double a, double x, double* ja, double* ja1) except -1 nogil:
    cdef int n_start = <int>(x + 12.0 * sqrt(x) + 22.0)
    cdef double* vals = <double*>malloc((n_start + 2) * sizeof(double))
    cdef double fm, scale, lg_a1, s, c, target
    cdef int n, i, k
    if vals == NULL:
        with gil:
            raise MemoryError()
    vals[n_start + 1] = 0.0
    vals[n_start] = 1e-300
    for n in range(n_start, 0, -1):
        fm = (2.0 * (a + n) / x) * vals[n] - vals[n + 1]
        vals[n - 1] = fm
        if fabs(fm) > 1e250:
            for i in range(n - 1, n_start + 2):
                vals[i] *= 1e-250
    lg_a1 = lgamma(a + 1.0)
    s = 0.0
    for k in range(0, n_start // 2 + 1):
        if k == 0:
            c = 1.0
        else:
            c = (a + 2.0 * k) * exp(lgamma(a + k) - lg_a1 - lgamma(k + 1.0))
        s += c * vals[2 * k]
    target = exp(a * log(0.5 * x) - lg_a1)
    scale = target / s
    ja[0] = vals[0] * scale
    ja1[0] = vals[1] * scale
    free(vals)
    return 0


cdef int _bessel_pair(double a, double x, double* ja, double* ja1) except -1 nogil:
    cdef double x_asym = 30.0 + a * a
    if x <= 9.0:
        ja[0] = _bessel_series(a, x)
        ja1[0] = _bessel_series(a + 1.0, x)
    elif x >= x_asym:
        ja[0] = _bessel_hankel(a, x)
        ja1[0] = _bessel_hankel(a + 1.0, x)
    else:
        _bessel_miller_pair(a, x, ja, ja1)
    return 0


def bessel_j_pair(double a, double x):
    """Return (J_a(x), J_{a+1}(x)) for real order a > -1, x >= 0."""
    cdef double ja, ja1
    _bessel_pair(a, x, &ja, &ja1)
    return ja, ja1


def bessel_j(double a, double x):
    """Bessel function of the first kind J_a(x), real order a > -1, x >= 0."""
    cdef double ja, ja1
    _bessel_pair(a, x, &ja, &ja1)
    return ja


def bessel_j_prime(double a, double x):
    """Derivative J_a'(x) via the recurrence J_a' = (a/x) J_a - J_{a+1}."""
    cdef double ja, ja1
    if x == 0.0:
        if a == 1.0:
            return 0.5
        if a == 0.0 or a > 1.0:
            return 0.0
        return INFINITY if a > 0.0 else -INFINITY
    _bessel_pair(a, x, &ja, &ja1)
    return (a / x) * ja - ja1


def log_gamma_real(double x):
    """log Gamma(x) for x > 0."""
    if x <= 0.0:
        raise ValueError("log_gamma_real requires x > 0")
    return lgamma(x)
