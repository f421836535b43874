"""Associated Legendre functions of the first kind on the real axis z > 1,
for integer degree and any integer order, plus degree-derivatives at integer
degree and a slow general-degree evaluator used as an oracle.

Evaluation strategy (all branches are cancellation-free for z > 1):

* order m = 0..p: P_p^m(z) = (z^2-1)^{m/2} q_m(z) with q_m the m-th derivative
  of the Legendre polynomial; q_m is expanded about z = 1, where every Taylor
  coefficient is positive, so the sum loses no digits however close z is to 1.
* order m >= p+1: exactly zero.
* order -n < 0: terminating Gauss sum
      P_p^{-n}(z) = ((z-1)/(z+1))^{n/2} / n! * S_{p,n}(z),
      S_{p,n}(z) = sum_{j=0}^{p} [(-p)_j (p+1)_j / (j! (1+n)_j)] ((1-z)/2)^j,
  whose terms are again all positive for z > 1.

When the argument is coth(eta) the factors (z-1), (z+1), (z^2-1)^{1/2} and
((z-1)/(z+1))^{1/2} collapse to stable functions of eta (2/expm1(2 eta),
csch eta, e^{-eta}); pass eta to use those forms.  Everything here is also
evaluable in exact rational arithmetic in t = e^eta, which legendre_p_exact
exposes for the identity checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConvergenceError
from .scalars import eta_from_chi, harmonic

__all__ = [
    "LegendreArg",
    "legendre_p",
    "legendre_p_nu",
    "legendre_deg_deriv",
    "legendre_p_exact",
    "neg_order_sum",
    "taylor_coeffs_at1",
]


@dataclass(frozen=True)
class LegendreArg:
    """Argument bundle z = coth(eta) = chi / sqrt(chi^2 - 1) with z > 1."""

    z: float
    eta: float

    def __post_init__(self):
        if not (self.z > 1.0 and self.eta > 0.0):
            raise ValueError("LegendreArg needs z > 1 and eta > 0")

    @classmethod
    def from_chi(cls, chi: float) -> "LegendreArg":
        eta = eta_from_chi(chi)
        return cls(z=chi / math.sqrt((chi - 1.0) * (chi + 1.0)), eta=eta)

    @classmethod
    def from_eta(cls, eta: float) -> "LegendreArg":
        if not eta > 0.0:
            raise ValueError("from_eta needs eta > 0")
        return cls(z=1.0 / math.tanh(eta), eta=eta)


@lru_cache(maxsize=None)
def _poly_coeffs(p: int) -> tuple[Fraction, ...]:
    """Exact monomial coefficients of the Legendre polynomial P_p."""
    coeffs = [Fraction(0)] * (p + 1)
    for j in range(p // 2 + 1):
        c = Fraction((-1) ** j * math.comb(p, j) * math.comb(2 * p - 2 * j, p), 2**p)
        coeffs[p - 2 * j] = c
    return tuple(coeffs)


@lru_cache(maxsize=None)
def taylor_coeffs_at1(p: int, m: int) -> tuple[Fraction, ...]:
    """Exact Taylor coefficients about z = 1 of d^m P_p / dz^m (0 <= m <= p).

    Built from the exact polynomial by symbolic differentiation and shift;
    all entries are positive, equal to (p+m+j)! / (2^{m+j} (m+j)! (p-m-j)! j!).
    """
    if not 0 <= m <= p:
        raise ValueError("taylor_coeffs_at1 needs 0 <= m <= p")
    mono = list(_poly_coeffs(p))
    for _ in range(m):
        mono = [i * c for i, c in enumerate(mono)][1:]
    shifted = [Fraction(0)] * len(mono)
    for j in range(len(mono)):
        shifted[j] = sum(math.comb(i, j) * mono[i] for i in range(j, len(mono)))
    return tuple(shifted)


def _taylor_eval(p: int, m: int, u: float) -> float:
    acc = 0.0
    for c in reversed(taylor_coeffs_at1(p, m)):
        acc = acc * u + float(c)
    return acc


def neg_order_sum(p: int, n: int, z: float) -> float:
    """Terminating Gauss sum S_{p,n}(z); all terms positive for z > 1.

    P_p^{-n}(z) = ((z-1)/(z+1))^{n/2} S_{p,n}(z) / n!; callers that must avoid
    under/overflow fold the exponential prefactor and 1/n! analytically.
    """
    if p < 0 or n < 0:
        raise ValueError("neg_order_sum needs p >= 0 and n >= 0")
    w = (1.0 - z) / 2.0
    term = 1.0
    total = 1.0
    for j in range(p):
        term *= (j - p) * (p + 1 + j) * w / ((j + 1) * (1 + n + j))
        total += term
    return total


def legendre_p(p: int, m: int, z: float, *, eta: float | None = None) -> float:
    """P_p^m(z) for integer degree p >= 0, any integer order m, z > 1."""
    if p < 0:
        raise ValueError("legendre_p rejects negative degree")
    if eta is not None:
        if not eta > 0.0:
            raise ValueError("legendre_p needs eta > 0")
        u = 2.0 / math.expm1(2.0 * eta)
        z = 1.0 + u
    else:
        if not z > 1.0:
            raise ValueError("legendre_p needs z > 1")
        u = z - 1.0
    if m > p:
        return 0.0
    if m == 0:
        return _taylor_eval(p, 0, u)
    if m > 0:
        if eta is not None:
            pref = math.sinh(eta) ** (-m)
        else:
            pref = math.exp(0.5 * m * math.log(u * (z + 1.0)))
        return pref * _taylor_eval(p, m, u)
    n = -m
    if eta is not None:
        pref = math.exp(-n * eta)
    else:
        pref = math.exp(0.5 * n * math.log(u / (z + 1.0)))
    return pref * float(Fraction(1, math.factorial(n))) * neg_order_sum(p, n, z)


def legendre_p_exact(p: int, m: int, t: Fraction) -> Fraction:
    """P_p^m(coth eta) in exact rational arithmetic, parametrized by t = e^eta.

    coth eta = (t^2+1)/(t^2-1), csch eta = 2t/(t^2-1) and e^{-eta} = 1/t are
    rational in t, hence so is P_p^m(coth eta) for every integer order.
    """
    if p < 0:
        raise ValueError("legendre_p_exact rejects negative degree")
    if not t > 1:
        raise ValueError("legendre_p_exact needs t > 1")
    if m > p:
        return Fraction(0)
    tt = t * t
    z = Fraction(tt + 1, tt - 1)
    if m >= 0:
        csch = 2 * t / (tt - 1)
        acc = Fraction(0)
        for c in reversed(taylor_coeffs_at1(p, m)):
            acc = acc * (z - 1) + c
        return csch**m * acc
    n = -m
    w = (1 - z) / 2
    term = Fraction(1)
    total = Fraction(1)
    for j in range(p):
        term *= Fraction((j - p) * (p + 1 + j), (j + 1) * (1 + n + j)) * w
        total += term
    return total / (t**n * math.factorial(n))


def legendre_p_nu(nu: float, m: int, z: float, *, max_terms: int = 10**6) -> float:
    """P_nu^m(z) for real degree nu, integer order m <= 0, z in (1, 3).

    Gauss series about z = 1; the term ratio tends to (z-1)/2, so convergence
    requires z < 3.  Slow but independent of the integer-degree code; used as
    the oracle for degree-derivatives.
    """
    if m > 0:
        raise ValueError("legendre_p_nu handles m <= 0 only")
    if not 1.0 < z < 3.0:
        raise ValueError("legendre_p_nu needs z in (1, 3)")
    n = -m
    w = (1.0 - z) / 2.0
    term = 1.0
    total = 1.0
    for j in range(max_terms):
        term *= (j - nu) * (nu + 1 + j) * w / ((j + 1) * (1 + n + j))
        total += term
        if abs(term) <= 1e-17 * abs(total) and j > nu:
            break
    else:
        raise ConvergenceError("legendre_p_nu hit the term cap")
    pref = math.exp(0.5 * n * math.log((z - 1.0) / (z + 1.0))) / math.gamma(1 + n)
    return pref * total


def legendre_deg_deriv(p: int, m: int, z: float) -> float:
    """Derivative of P_nu^m(z) with respect to the degree nu, at nu = p >= 0.

    For 0 <= m <= p the value collapses to Legendre evaluations at integer
    parameters with rational weights; for m >= p+1 it is a single negative-order
    evaluation.  All weights are assembled exactly before rounding.
    """
    if p < 0:
        raise ValueError("legendre_deg_deriv needs p >= 0")
    if m < 0:
        raise ValueError("legendre_deg_deriv handles m >= 0 only")
    if not z > 1.0:
        raise ValueError("legendre_deg_deriv needs z > 1")
    if m >= p + 1:
        w = math.factorial(p + m) * math.factorial(m - p - 1)
        return (-1) ** (p + m + 1) * w * legendre_p(p, -m, z)
    out = math.log((z + 1.0) / 2.0) * legendre_p(p, m, z)
    # 2 psi(2p+1) - psi(p+1) - psi(p-m+1), exact
    dig = 2 * harmonic(2 * p) - harmonic(p) - harmonic(p - m)
    out += float(dig) * legendre_p(p, m, z)
    acc = 0.0
    for k in range(p - m):
        w = Fraction(2 * k + 2 * m + 1, (p - m - k) * (p + m + k + 1)) * (
            1
            + Fraction(
                math.factorial(k) * math.factorial(p + m),
                math.factorial(k + 2 * m) * math.factorial(p - m),
            )
        )
        acc += (-1) ** k * float(w) * legendre_p(k + m, m, z)
    out += (-1) ** (p + m) * acc
    acc = 0.0
    for k in range(m):
        w = Fraction(2 * k + 1, (p - k) * (p + k + 1))
        acc += (-1) ** k * float(w) * legendre_p(k, -m, z)
    out += (-1) ** p * float(Fraction(math.factorial(p + m), math.factorial(p - m))) * acc
    return out
