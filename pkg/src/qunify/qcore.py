"""q-integers, q-factorials, Gaussian binomials and q-Pochhammer symbols."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from . import _zpoly as zp
from .exactnum import ONE, ZERO, QRat, q_power
from .report import Report


def _qpoly(coeffs_in_q) -> QRat:
    """Polynomial with integer coefficients in q, as a QRat in v."""
    spread = []
    for c in coeffs_in_q:
        spread.extend((c, 0))
    return QRat._raw(zp.trim(spread), zp.ONE)


@lru_cache(maxsize=None)
def qint(n: int) -> QRat:
    """[n]_q = 1 + q + ... + q**(n-1)."""
    if n < 0:
        raise ValueError("qint needs n >= 0")
    return _qpoly([1] * n)


@lru_cache(maxsize=None)
def qfactorial(n: int) -> QRat:
    if n < 0:
        raise ValueError("qfactorial needs n >= 0")
    if n == 0:
        return ONE
    return qfactorial(n - 1) * qint(n)


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> QRat:
    """Gaussian binomial by the Pascal rule C(n,k) = C(n-1,k-1) + q^k C(n-1,k)."""
    if k < 0 or k > n or n < 0:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return qbinomial(n - 1, k - 1) + q_power(k) * qbinomial(n - 1, k)


def qbinomial_ratio(n: int, k: int) -> QRat:
    """Gaussian binomial as [n]!/([k]![n-k]!), the cross-check route."""
    if k < 0 or k > n:
        return ZERO
    return qfactorial(n) / (qfactorial(k) * qfactorial(n - k))


def qpochhammer(a, n: int) -> QRat:
    """(a; q)_n = prod_{j<n} (1 - q^j a)."""
    a = QRat(a)
    out = ONE
    for j in range(n):
        out = out * (1 - q_power(j) * a)
    return out


def gauss_binomial_identity_check(a, n_max: int) -> Report:
    """Compare (a;q)_n with sum_k C(n,k)_q q^{k(k-1)/2} (-a)^k for n <= n_max."""
    a = QRat(a)
    report = Report("gauss-binomial", params={"a": str(a), "n_max": n_max})
    for n in range(n_max + 1):
        lhs = qpochhammer(a, n)
        rhs = ZERO
        for k in range(n + 1):
            rhs = rhs + qbinomial(n, k) * q_power(comb(k, 2)) * (-a) ** k
        report.compare(n, lhs, rhs)
    return report


def classical_binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
