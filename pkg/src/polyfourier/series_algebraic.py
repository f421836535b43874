"""Cosine-series coefficients of the log kernel by the algebraic route.

The expansion of (cosh eta - cos psi)^p log(cosh eta - cos psi) is obtained by
multiplying the finite power series against the elementary log series
log(cosh eta - cos psi) = eta - log 2 - 2 sum_{n>=1} e^{-n eta} cos(n psi)/n
and reindexing the resulting double sum.  The per-coefficient building block is

    r_frak(n, p, k1, k2, eta)
        = 2 sum_{k=k1}^{k2} (-1)^{k+1} e^{k eta} R_p^k(cosh eta) / (n - k),

an alternating sum that is compensated (Kahan) because adjacent terms can
cancel to many digits at small eta.  p_frak assembles the branch structure in
n (constant band, middle band, n = p edge, exponential tail) and q_frak adds
the power term carrying the (eta - log 2) weight.
"""

from __future__ import annotations

import math

from .logpoly import logpoly_eval, logpoly_recurrence
from .scalars import eta_from_chi
from .series_limit import power_coefficient
from .tables import FourierCoeffTable, default_nmax

__all__ = [
    "r_frak",
    "re_frak",
    "p_frak",
    "q_frak",
    "log_series_algebraic",
]

_LOG2 = math.log(2.0)


def r_frak(n: int, p: int, k1: int, k2: int, eta: float) -> float:
    """Weighted alternating sum of log-polynomial values (see module docstring).

    Requires -p <= k1 <= k2 <= p and n outside [k1, k2] so no term divides by
    zero.  Each term is formed as exp(k eta + log R_p^k(cosh eta)) -- the
    values R_p^k(cosh eta) are positive -- and the signed accumulation is
    compensated.
    """
    if not (-p <= k1 <= k2 <= p):
        raise ValueError("r_frak needs -p <= k1 <= k2 <= p")
    if k1 <= n <= k2:
        raise ValueError("r_frak needs n outside [k1, k2]")
    if not eta > 0.0:
        raise ValueError("r_frak needs eta > 0")
    x = math.cosh(eta)

    def terms():
        for k in range(k1, k2 + 1):
            val = logpoly_eval(logpoly_recurrence(p, k), x)
            mag = math.exp(k * eta + math.log(val)) if val > 0.0 else math.exp(k * eta) * val
            yield (-1) ** (k + 1) * 2.0 * mag / (n - k)

    return math.fsum(terms())


def re_frak(n: int, p: int, eta: float) -> float:
    """Tail sum rescaled by its growth factor:
    (n+p)!/(n-p-1)! * r_frak(n, p, -p, p, eta), defined for n >= p+1."""
    if n < p + 1:
        raise ValueError("re_frak needs n >= p+1")
    w = 1
    for i in range(n - p, n + p + 1):
        w *= i
    return w * r_frak(n, p, -p, p, eta)


def _d_term(n: int, p: int, eta: float) -> float:
    # middle-band piece from reindexed terms with n + k < 0; empty below p = 2
    if p < 2:
        return 0.0
    return math.exp(n * eta) * r_frak(-n, p, -p, -n - 1, eta)


def _e_term(n: int, p: int, eta: float) -> float:
    # middle-band piece from reindexed terms with n - k > 0; empty at p = 0
    if p < 1:
        return 0.0
    return math.exp(-n * eta) * r_frak(n, p, -p, n - 1, eta)


def p_frak(n: int, p: int, eta: float) -> float:
    """Log-kernel coefficient without the (eta - log 2) power term.

    Branches: n = 0 uses the strictly-negative k range (empty when p = 0);
    1 <= n <= p-1 splits into the two middle-band pieces; n = p stops the
    k range just short of the diagonal; n >= p+1 is the exponential tail,
    where the growth prefactor n (n^2-1^2) ... (n^2-p^2) = (n+p)!/(n-p-1)!
    cancels the rescaling of re_frak exactly, leaving e^{-n eta} r_frak.
    """
    if n < 0 or p < 0:
        raise ValueError("p_frak needs n >= 0 and p >= 0")
    if n == 0:
        if p == 0:
            return 0.0
        return r_frak(0, p, -p, -1, eta)
    if n <= p - 1:
        return _d_term(n, p, eta) + _e_term(n, p, eta)
    if n == p:
        return math.exp(-p * eta) * r_frak(p, p, -p, p - 1, eta)
    return math.exp(-n * eta) * r_frak(n, p, -p, p, eta)


def q_frak(n: int, p: int, eta: float) -> float:
    """Full coefficient of cos(n psi) in (cosh eta - cos psi)^p log(...):
    p_frak plus the (eta - log 2)-weighted power-series coefficient, which is
    zero for n > p."""
    out = p_frak(n, p, eta)
    if n <= p:
        out += (eta - _LOG2) * power_coefficient(p, n, eta)
    return out


def log_series_algebraic(
    p: int, chi: float, nmax: int | None = None, tail_tol: float = 1e-10
) -> FourierCoeffTable:
    """Cosine series of (chi - cos psi)^p log(chi - cos psi), algebraic route.

    Tables built at eta < 0.2 are tagged with a conditioning warning: the
    alternating sums then cancel severely and small tail entries are reliable
    in the absolute sense only.
    """
    if p < 0:
        raise ValueError("log_series_algebraic needs p >= 0")
    eta = eta_from_chi(chi)
    if nmax is None:
        nmax = default_nmax(p, eta, tail_tol)
    if nmax < p + 1:
        raise ValueError("log series needs nmax >= p+1")
    coeffs = tuple(q_frak(n, p, eta) for n in range(nmax + 1))
    return FourierCoeffTable(
        "log", p, chi, eta, "algebraic", coeffs, conditioning_warning=eta < 0.2
    )
