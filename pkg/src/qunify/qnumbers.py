"""q-Bernoulli, q-Euler and q-Genocchi numbers and polynomials for an alpha family.

The numbers are read off the generating functions

    t / (E(t) - 1),    2 / (E(t) + 1),    2t / (E(t) + 1)

with weights t^n / [n]_q!, where E is the unified q-exponential of the
family.  Polynomials are assembled from the numbers by the alpha-weighted
q-binomial convolutions; the addition-theorem checker compares them with a
direct series product.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .alphafam import AlphaFamily
from .errors import AlphaOneZero, NonUnitConstantTerm
from .exactnum import ZERO
from .qcore import qbinomial, qfactorial, qint
from .qpoly import QPoly
from .series import Series, series_invert, shifted_exp, unified_exp

KINDS = ("bernoulli", "euler", "genocchi")

_table_lock = threading.Lock()


@dataclass(frozen=True)
class QNumberTable:
    kind: str
    family: AlphaFamily
    entries: tuple

    @property
    def n_max(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, n):
        return self.entries[n]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": self.kind,
            "family": self.family.name,
            "entries": {str(n): str(v) for n, v in enumerate(self.entries)},
        }


def _cached(fam: AlphaFamily, key: str, n_max: int, build):
    # tables are cached per family object; a longer table serves shorter requests
    store = fam.__dict__.setdefault("_qnumber_tables", {})
    hit = store.get(key)
    if hit is not None and len(hit) > n_max:
        return hit[:n_max + 1]
    entries = tuple(build())
    with _table_lock:
        cur = store.get(key)
        if cur is None or len(cur) < len(entries):
            store[key] = entries
    return entries


def bernoulli_numbers(fam: AlphaFamily, n_max: int) -> QNumberTable:
    """B_n = [n]_q! [t^n] 1/S(t), with S(t) = (E(t) - 1)/t."""
    def build():
        s = shifted_exp(fam, n_max)
        try:
            inv = series_invert(s)
        except NonUnitConstantTerm:
            raise AlphaOneZero(f"alpha(q, 1) = 0 in family {fam.name!r}") from None
        return [qfactorial(n) * inv[n] for n in range(n_max + 1)]
    return QNumberTable("bernoulli", fam, _cached(fam, "bernoulli", n_max, build))


def _euler_series(fam: AlphaFamily, order: int) -> Series:
    """2 / (E(t) + 1)."""
    return 2 * series_invert(unified_exp(fam, order) + 1)


def euler_numbers(fam: AlphaFamily, n_max: int) -> QNumberTable:
    def build():
        s = _euler_series(fam, n_max)
        return [qfactorial(n) * s[n] for n in range(n_max + 1)]
    return QNumberTable("euler", fam, _cached(fam, "euler", n_max, build))


def genocchi_numbers(fam: AlphaFamily, n_max: int) -> QNumberTable:
    """G_0 = 0 and G_n = [n]_q E_{n-1}."""
    def build():
        e = euler_numbers(fam, max(n_max - 1, 0))
        return [ZERO] + [qint(n) * e[n - 1] for n in range(1, n_max + 1)]
    return QNumberTable("genocchi", fam, _cached(fam, "genocchi", n_max, build))


def genocchi_numbers_series(fam: AlphaFamily, n_max: int) -> QNumberTable:
    """Genocchi numbers straight from the series t * 2/(E(t) + 1)."""
    s = _euler_series(fam, n_max).shift(1)
    return QNumberTable("genocchi", fam, tuple(qfactorial(n) * s[n] for n in range(n_max + 1)))


def numbers(kind: str, fam: AlphaFamily, n_max: int) -> QNumberTable:
    try:
        fn = {"bernoulli": bernoulli_numbers, "euler": euler_numbers,
              "genocchi": genocchi_numbers}[kind]
    except KeyError:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}") from None
    return fn(fam, n_max)


def prefactor_series(kind: str, fam: AlphaFamily, order: int) -> Series:
    """The generating function of the numbers of ``kind``, as a series in t."""
    if kind == "bernoulli":
        return series_invert(shifted_exp(fam, order))
    if kind == "euler":
        return _euler_series(fam, order)
    if kind == "genocchi":
        return _euler_series(fam, order).shift(1)
    raise ValueError(f"unknown kind {kind!r}")


# -- q-addition ---------------------------------------------------------------

def q_add_pow(n: int, sign: str, fam: AlphaFamily, weighting: str = "cauchy") -> QPoly:
    """(x (+)_q y)^n, or (x (-)_q y)^n for sign='minus'.

    With the default ``weighting='cauchy'`` the k-th term carries
    alpha_k alpha_{n-k}, which makes sum_n t^n (x (+) y)^n / [n]_q! equal
    E(tx) E(ty).  ``weighting='literal'`` keeps only alpha_k, the form in
    which the operation is usually displayed; the two agree when every
    alpha is 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if sign not in ("plus", "minus"):
        raise ValueError("sign must be 'plus' or 'minus'")
    if weighting not in ("cauchy", "literal"):
        raise ValueError("weighting must be 'cauchy' or 'literal'")
    terms = {}
    for k in range(n + 1):
        c = qbinomial(n, k) * fam(k)
        if weighting == "cauchy":
            c = c * fam(n - k)
        if sign == "minus" and (n - k) % 2:
            c = -c
        terms[(k, n - k)] = c
    return QPoly(terms)


# -- polynomials --------------------------------------------------------------

def qnumber_poly(kind: str, fam: AlphaFamily, n: int, bivariate: bool = False) -> QPoly:
    """P_n(x) = sum_k C(n,k)_q alpha_{n-k} P_k x^{n-k}; bivariate adds y the same way.

    The bivariate polynomial is P_n(x, y) = sum_k C(n,k)_q alpha_{n-k} P_k(x) y^{n-k}.
    """
    nums = numbers(kind, fam, n)
    if not bivariate:
        return QPoly({(n - k, 0): qbinomial(n, k) * fam(n - k) * nums[k] for k in range(n + 1)})
    out = QPoly()
    for k in range(n + 1):
        w = qbinomial(n, k) * fam(n - k)
        out = out + qnumber_poly(kind, fam, k) * QPoly.monomial(w, 0, n - k)
    return out


def bernoulli_poly(fam: AlphaFamily, n: int, bivariate: bool = False) -> QPoly:
    return qnumber_poly("bernoulli", fam, n, bivariate)


def euler_poly(fam: AlphaFamily, n: int, bivariate: bool = False) -> QPoly:
    return qnumber_poly("euler", fam, n, bivariate)


def genocchi_poly(fam: AlphaFamily, n: int, bivariate: bool = False) -> QPoly:
    return qnumber_poly("genocchi", fam, n, bivariate)


def addition_form(kind: str, fam: AlphaFamily, n: int) -> QPoly:
    """P_n(x, y) as sum_k C(n,k)_q P_k (x (+)_q y)^{n-k}."""
    nums = numbers(kind, fam, n)
    out = QPoly()
    for k in range(n + 1):
        out = out + q_add_pow(n - k, "plus", fam) * (qbinomial(n, k) * nums[k])
    return out


def exp_series_in(fam: AlphaFamily, var: str, order: int) -> Series:
    """E(t x) or E(t y) as a series in t with polynomial coefficients."""
    coeffs = []
    for n in range(order + 1):
        i, j = (n, 0) if var == "x" else (0, n)
        coeffs.append(QPoly.monomial(fam(n) / qfactorial(n), i, j))
    return Series(coeffs, order)


def direct_product_polys(kind: str, fam: AlphaFamily, n_max: int) -> list:
    """[n]_q! [t^n] of prefactor(t) E(tx) E(ty), for n <= n_max."""
    pre = prefactor_series(kind, fam, n_max)
    pre = Series([QPoly.const(c) for c in pre], n_max)
    prod = pre * exp_series_in(fam, "x", n_max) * exp_series_in(fam, "y", n_max)
    return [prod[n] * qfactorial(n) for n in range(n_max + 1)]


def poly_qderivative(p: QPoly) -> QPoly:
    return p.qderive_x()


# -- classical oracles --------------------------------------------------------

def classical_bernoulli_numbers(n_max: int) -> list:
    """B_0..B_n_max from sum_{k<m} C(m,k) B_k = 0 (m >= 2), so B_1 = -1/2."""
    b = [Fraction(1)]
    for m in range(2, n_max + 2):
        s = sum(comb(m, k) * b[k] for k in range(m - 1))
        b.append(-s / m)
    return b[:n_max + 1]


def classical_euler0_numbers(n_max: int) -> list:
    """Coefficients E_n of 2/(e^t + 1) = sum E_n t^n/n!: sum_k C(n,k) E_k + E_n = 2[n=0]."""
    e = []
    for n in range(n_max + 1):
        s = sum(comb(n, k) * e[k] for k in range(n))
        e.append((Fraction(2 if n == 0 else 0) - s) / 2)
    return e


def classical_genocchi_numbers(n_max: int) -> list:
    e = classical_euler0_numbers(max(n_max - 1, 0))
    return [Fraction(0)] + [n * e[n - 1] for n in range(1, n_max + 1)]


_CLASSICAL = {
    "bernoulli": classical_bernoulli_numbers,
    "euler": classical_euler0_numbers,
    "genocchi": classical_genocchi_numbers,
}


def classical_numbers(kind: str, n_max: int) -> list:
    return _CLASSICAL[kind](n_max)


def classical_poly(kind: str, n: int) -> list:
    """Coefficients (x^0 first) of B_n(x), E_n(x) or G_n(x) = sum_k C(n,k) c_k x^{n-k}."""
    c = classical_numbers(kind, n)
    out = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        out[n - k] += comb(n, k) * c[k]
    return out


def classical_poly_shifted(kind: str, n: int) -> dict:
    """P_n(x + y) expanded as {(i, j): Fraction}."""
    coeffs = classical_poly(kind, n)
    out = {}
    for m, c in enumerate(coeffs):
        if not c:
            continue
        for i in range(m + 1):
            key = (i, m - i)
            out[key] = out.get(key, Fraction(0)) + c * comb(m, i)
    return {k: v for k, v in out.items() if v}


def classical_oracle(kind: str, n: int):
    """Exact classical values independent of any q machinery.

    kind is one of bernoulli, euler0, genocchi (numbers) or
    bernoulli_poly, euler_poly, genocchi_poly (coefficient lists).
    """
    if kind == "bernoulli":
        return classical_bernoulli_numbers(n)[n]
    if kind == "euler0":
        return classical_euler0_numbers(n)[n]
    if kind == "genocchi":
        return classical_genocchi_numbers(n)[n]
    if kind.endswith("_poly"):
        base = kind[:-5]
        if base in _CLASSICAL:
            return classical_poly(base, n)
    raise ValueError(f"unknown classical kind {kind!r}")
