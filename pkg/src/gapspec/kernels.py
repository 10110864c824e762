"""Pointwise evaluation of the sine, Airy and Bessel integrable kernels.

Each kernel has the form K(lam, mu) = (phi(lam) psi(mu) - psi(lam) phi(mu))
/ (lam - mu) (times 1/2 for Bessel).  The difference quotient cancels
catastrophically near the diagonal, so inside |lam - mu| <= delta_switch the
kernel is evaluated by a 3-term Taylor expansion about the midpoint, with
all derivatives reduced through the defining ODEs.
"""

import enum
import math
from dataclasses import dataclass, field

from . import specfun
from ._backend import bessel_j_pair
from .errors import ArgumentError, DomainError

__all__ = [
    "Family",
    "KernelSpec",
    "IntervalSpec",
    "SINE",
    "AIRY",
    "delta_switch",
    "kernel_eval",
    "kernel_diag",
    "airy_convolution",
]


class Family(enum.Enum):
    SINE = "sine"
    AIRY = "airy"
    BESSEL = "bessel"


def _coerce_family(family):
    if isinstance(family, Family):
        return family
    try:
        return Family(str(family).lower())
    except ValueError:
        raise ArgumentError(f"unknown kernel family: {family!r}") from None


@dataclass(frozen=True)
class KernelSpec:
    """Which integrable kernel: sine, Airy, or Bessel with order a > -1."""

    family: Family
    a: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "family", _coerce_family(self.family))
        object.__setattr__(self, "a", float(self.a))
        if self.family is Family.BESSEL and self.a <= -1.0:
            raise DomainError(f"Bessel order a={self.a} must exceed -1")


SINE = KernelSpec(Family.SINE)
AIRY = KernelSpec(Family.AIRY)


def bessel_spec(a):
    return KernelSpec(Family.BESSEL, a)


@dataclass(frozen=True)
class IntervalSpec:
    """Family-consistent endpoint s and the derived interval J.

    Sine: J = (-s, s), s > 0.  Airy: J = (s, inf).  Bessel: J = (0, s), s > 0.
    Carries the double-scaling variable t = (-s)^{3/2} (Airy, s < 0) or
    t = sqrt(s) (Bessel) when defined.
    """

    family: Family
    s: float
    lo: float = field(init=False)
    hi: float = field(init=False)
    t: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "family", _coerce_family(self.family))
        object.__setattr__(self, "s", float(self.s))
        fam, s = self.family, self.s
        if fam is Family.SINE:
            if s <= 0:
                raise DomainError(f"sine interval requires s > 0, got {s}")
            lo, hi, t = -s, s, float("nan")
        elif fam is Family.AIRY:
            lo, hi = s, math.inf
            t = (-s) ** 1.5 if s < 0 else float("nan")
        else:
            if s <= 0:
                raise DomainError(f"Bessel interval requires s > 0, got {s}")
            lo, hi, t = 0.0, s, math.sqrt(s)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "t", t)


def delta_switch(lam, mu):
    """Near-diagonal switch radius for the Taylor branch."""
    return 1e-4 * max(1.0, abs(lam) + abs(mu))


def _check_domain(spec, x):
    if spec.family is Family.BESSEL and x < 0.0:
        raise DomainError(f"Bessel kernel argument must be > 0, got {x}")


def _airy_phi_psi(x):
    return specfun.airy_ai(x), specfun.airy_ai_prime(x)


def _bessel_phi_psi(a, x):
    """phi(x) = J_a(sqrt x), psi(x) = sqrt(x) J_a'(sqrt x)."""
    u = math.sqrt(x)
    ja, ja1 = bessel_j_pair(a, u)
    # u * J_a'(u) = a J_a(u) - u J_{a+1}(u)
    return ja, a * ja - u * ja1


def _sine_exact(lam, mu):
    d = lam - mu
    return math.sin(d) / (math.pi * d)


def _sine_taylor(lam, mu):
    d2 = (lam - mu) ** 2
    return (1.0 - d2 / 6.0 * (1.0 - d2 / 20.0)) / math.pi


def _airy_exact(lam, mu):
    a1, p1 = _airy_phi_psi(lam)
    a2, p2 = _airy_phi_psi(mu)
    return (a1 * p2 - p1 * a2) / (lam - mu)


def _airy_taylor(lam, mu):
    m = 0.5 * (lam + mu)
    h = 0.5 * (lam - mu)
    a = specfun.airy_ai(m)
    b = specfun.airy_ai_prime(m)
    s1 = b * b - m * a * a
    # h^2 coefficient from the ODE Ai'' = x Ai:
    #   (1/3)(phi''' psi - phi psi''') + (phi' psi'' - phi'' psi')
    s3 = a * b + 2.0 * m * b * b - 2.0 * m * m * a * a
    return s1 + h * h / 3.0 * s3


def _bessel_pq(a, u):
    """p(u) = J_a(u), q(u) = u J_a'(u); the kernel in the u = sqrt(x)
    variable is built from this pair and is regular at the hard edge."""
    ja, ja1 = bessel_j_pair(a, u)
    # u * J_a'(u) = a J_a(u) - u J_{a+1}(u)
    return ja, a * ja - u * ja1


def _bessel_u_numer_exact(a, u, w):
    """(p(u) q(w) - q(u) p(w)) / (u - w).

    The a J_a(u) J_a(w) parts of the cross terms cancel algebraically, so the
    numerator is formed directly as u J_{a+1}(u) J_a(w) - w J_{a+1}(w) J_a(u)
    to avoid losing digits at small arguments and large orders.
    """
    ja_u, j1_u = bessel_j_pair(a, u)
    ja_w, j1_w = bessel_j_pair(a, w)
    return (u * j1_u * ja_w - w * j1_w * ja_u) / (u - w)


def _bessel_u_numer_taylor(a, u, w):
    """Even Taylor expansion of the same quotient about the midpoint.

    Derivatives of p, q follow from the Bessel equation:
    q' = -(u - a^2/u) p, p' = q/u.
    """
    m = 0.5 * (u + w)
    h = 0.5 * (u - w)
    ja, ja1 = bessel_j_pair(a, m)
    p = ja
    q = a * ja - m * ja1
    a2 = a * a
    m2 = m * m
    m3 = m2 * m
    p1 = q / m
    q1 = -(m - a2 / m) * p
    p2 = -(1.0 - a2 / m2) * p - q / m2
    q2 = -(1.0 + a2 / m2) * p - (1.0 - a2 / m2) * q
    p3 = p * (1.0 / m - 3.0 * a2 / m3) + q * (-1.0 / m + (a2 + 2.0) / m3)
    q3 = p * (m - 2.0 * a2 / m + (a2 * a2 + 2.0 * a2) / m3) - q * (
        1.0 / m + 3.0 * a2 / m3
    )
    # s1 = p'q - pq' = (q^2 - a^2 p^2)/m + m p^2; the first part is written
    # through q - ap = -m J_{a+1} so the a^2 p^2 pieces never meet head-on
    s1 = m * p * p - ja1 * (2.0 * a * p - m * ja1)
    bracket = (p3 * q - p * q3) / 3.0 + (p1 * q2 - p2 * q1)
    return s1 + 0.5 * h * h * bracket


def _bessel_eval_u(a, u, w):
    """K(u^2, w^2) with the near-diagonal switch taken in the u variable.

    The switch is relative in u: the Taylor expansion parameter is
    (u - w)/(u + w), and the exact branch only cancels badly when that
    ratio is small, so both branches stay accurate at any scale.
    """
    if abs(u - w) <= 1e-4 * (u + w):
        numer = _bessel_u_numer_taylor(a, u, w)
    else:
        numer = _bessel_u_numer_exact(a, u, w)
    return numer / (2.0 * (u + w))


def kernel_eval(spec, lam, mu):
    """Kernel value K(lam, mu); bit-symmetric in (lam, mu)."""
    lam = float(lam)
    mu = float(mu)
    _check_domain(spec, lam)
    _check_domain(spec, mu)
    if mu > lam:  # evaluate on the sorted pair for exact symmetry
        lam, mu = mu, lam
    fam = spec.family
    near = abs(lam - mu) <= delta_switch(lam, mu)
    if fam is Family.SINE:
        return _sine_taylor(lam, mu) if near else _sine_exact(lam, mu)
    if fam is Family.AIRY:
        return _airy_taylor(lam, mu) if near else _airy_exact(lam, mu)
    if lam == 0.0 and mu == 0.0:
        return kernel_diag(spec, 0.0)
    # Bessel: work in u = sqrt(x), where the kernel is regular at the
    # hard edge and the Taylor switch scale stays meaningful for small x.
    return _bessel_eval_u(spec.a, math.sqrt(lam), math.sqrt(mu))


def kernel_diag(spec, lam):
    """Closed-form diagonal K(lam, lam)."""
    lam = float(lam)
    _check_domain(spec, lam)
    fam = spec.family
    if fam is Family.SINE:
        return 1.0 / math.pi
    if fam is Family.AIRY:
        a = specfun.airy_ai(lam)
        b = specfun.airy_ai_prime(lam)
        return b * b - lam * a * a
    a = spec.a
    if lam == 0.0:
        # series limit of (J_a^2 - J_{a+1} J_{a-1})/4 at the origin
        if a == 0.0:
            return 0.25
        if a > 0.0:
            return 0.0
        raise DomainError("Bessel kernel diagonal diverges at 0 for a < 0")
    u = math.sqrt(lam)
    ja, ja1 = bessel_j_pair(a, u)
    jam1 = (2.0 * a / u) * ja - ja1
    return (ja * ja - ja1 * jam1) / 4.0


def airy_convolution(lam, mu, upper=None, n=60):
    """Airy kernel via its convolution form: integral of Ai(lam+t)Ai(t+mu)
    over t in [0, upper], by Gauss-Legendre quadrature."""
    lam = float(lam)
    mu = float(mu)
    if n < 40:
        raise ArgumentError(f"airy_convolution requires n >= 40, got {n}")
    if upper is None:
        # place both shifted arguments where Ai^2 < 1e-18: Ai(11) ~ 1e-11
        upper = max(11.0 - min(lam, mu), 11.0)
    upper = float(upper)
    from .operator import gauss_legendre

    quad = gauss_legendre(int(n))
    half = 0.5 * upper
    total = 0.0
    # symmetrized accumulation keeps (lam, mu) -> (mu, lam) bit-identical
    lo_arg, hi_arg = (lam, mu) if lam <= mu else (mu, lam)
    for x, w in zip(quad.nodes, quad.weights):
        tt = half * (x + 1.0)
        total += w * specfun.airy_ai(lo_arg + tt) * specfun.airy_ai(tt + hi_arg)
    return half * total
