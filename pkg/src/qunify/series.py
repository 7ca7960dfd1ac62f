"""Truncated formal power series in t.

Coefficients are usually :class:`QRat`, but any ring element supporting
``+``, ``-`` and ``*`` works for the arithmetic (the addition theorems run
series whose coefficients are polynomials in x and y).  Inversion needs a
field and is only defined for QRat coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .alphafam import AlphaFamily
from .errors import NonUnitConstantTerm, ZeroAlpha
from .exactnum import ONE, ZERO, QRat
from .qcore import qfactorial, qint

DEFAULT_ORDER = 16


class Series:
    """Coefficients of t^0 .. t^order."""

    __slots__ = ("coeffs", "order", "mixed")

    def __init__(self, coeffs, order: Optional[int] = None, mixed: bool = False):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[:order + 1]
        zero = coeffs[0] * 0 if coeffs else ZERO
        coeffs.extend([zero] * (order + 1 - len(coeffs)))
        self.coeffs = tuple(coeffs)
        self.order = order
        # set when an operation silently truncated to a smaller order
        self.mixed = mixed

    @classmethod
    def unit(cls, order: int) -> "Series":
        return cls([ONE], order)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _align(self, other):
        order = min(self.order, other.order)
        mixed = self.mixed or other.mixed or self.order != other.order
        return order, mixed

    def __add__(self, other):
        if not isinstance(other, Series):
            return Series([self.coeffs[0] + other] + list(self.coeffs[1:]), self.order, self.mixed)
        order, mixed = self._align(other)
        return Series([self[i] + other[i] for i in range(order + 1)], order, mixed)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order, self.mixed)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        return Series([c * other for c in self.coeffs], self.order, self.mixed)

    def __rmul__(self, other):
        return Series([other * c for c in self.coeffs], self.order, self.mixed)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[:order + 1], order, self.mixed)

    def shift(self, k: int = 1) -> "Series":
        """Multiply by t^k, keeping the same order."""
        zero = self.coeffs[0] * 0
        return Series([zero] * k + list(self.coeffs[:self.order + 1 - k]), self.order, self.mixed)

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self):
        return f"Series(order={self.order}, coeffs=[{', '.join(map(str, self.coeffs))}])"


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the smaller order."""
    order, mixed = a._align(b)
    out = []
    for n in range(order + 1):
        acc = a[0] * b[n]
        for k in range(1, n + 1):
            acc = acc + a[k] * b[n - k]
        out.append(acc)
    return Series(out, order, mixed)


def series_invert(a: Series) -> Series:
    """b with a*b = 1 to the order of a: b_0 = 1/a_0, b_n = -(sum a_k b_{n-k})/a_0."""
    a0 = a[0]
    if a0.is_zero():
        raise NonUnitConstantTerm("constant term is zero; series is not invertible")
    inv0 = ONE / a0
    b = [inv0]
    for n in range(1, a.order + 1):
        acc = ZERO
        for k in range(1, n + 1):
            acc = acc + a[k] * b[n - k]
        b.append(-acc * inv0)
    return Series(b, a.order, a.mixed)


def series_scale_arg(a: Series, lam) -> Series:
    """The series of f(lam t)."""
    lam = QRat(lam)
    out = []
    p = ONE
    for c in a.coeffs:
        out.append(c * p)
        p = p * lam
    return Series(out, a.order, a.mixed)


def series_qderive(a: Series) -> Series:
    """D_q in t: coefficient n of the result is [n+1]_q a_{n+1}."""
    if a.order == 0:
        return Series([a[0] * 0], 0, a.mixed)
    return Series([qint(n + 1) * a[n + 1] for n in range(a.order)], a.order - 1, a.mixed)


def unified_exp(fam: AlphaFamily, order: int = DEFAULT_ORDER) -> Series:
    """E_{q,alpha}(t) = sum alpha(q,n) t^n / [n]_q!."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return Series([fam(n) / qfactorial(n) for n in range(order + 1)], order)


def shifted_exp(fam: AlphaFamily, order: int = DEFAULT_ORDER) -> Series:
    """(E_{q,alpha}(t) - 1) / t, whose constant term is alpha_1."""
    return Series([fam(n + 1) / qfactorial(n + 1) for n in range(order + 1)], order)


# -- radius of convergence ---------------------------------------------------

FINITE = "finite"
INFINITE = "infinite"
UNRESOLVED = "unresolved"


@dataclass
class RadiusEstimate:
    verdict: str
    value: Optional[Fraction] = None
    tail: list = field(default_factory=list)

    def approx(self, max_denominator: int = 10 ** 6) -> Optional[Fraction]:
        """Best rational approximation of the estimate with a bounded denominator."""
        if self.value is None:
            return None
        return self.value.limit_denominator(max_denominator)

    def __float__(self):
        if self.verdict == INFINITE:
            return float("inf")
        if self.value is None:
            return float("nan")
        return float(self.value)

    def __str__(self):
        if self.verdict == INFINITE:
            return "infinity"
        if self.verdict == UNRESOLVED:
            return "unresolved"
        return str(self.approx())


def radius_estimate(fam: AlphaFamily, v0, n_max: int = 200, *,
                    rel_tol=Fraction(1, 10 ** 9), window: int = 10) -> RadiusEstimate:
    """Ratio-test estimate of the radius of convergence at q0 = v0**2.

    l_n = |alpha_{n+1} / ([n+1]_q alpha_n)| is evaluated exactly for
    n = 1..n_max.  If the last ``window`` terms have relative change below
    ``rel_tol`` the radius is 1/l; if they decrease strictly towards zero
    the verdict is infinite; otherwise unresolved.
    """
    v0 = Fraction(v0)
    rel_tol = Fraction(rel_tol)
    q0 = v0 * v0
    if not 0 < q0 < 1:
        raise ValueError("need 0 < q0 < 1")
    if n_max < window + 1:
        raise ValueError(f"n_max must exceed the window ({window})")
    values = [fam.value_at(n, v0) for n in range(1, n_max + 2)]
    for n, val in enumerate(values, start=1):
        if val == 0:
            raise ZeroAlpha(f"alpha_{n} vanishes at q0 = {q0}")
    ratios = []
    for n in range(1, n_max + 1):
        qn1 = (1 - q0 ** (n + 1)) / (1 - q0)
        ratios.append(abs(values[n] / (qn1 * values[n - 1])))
    tail = ratios[-window:]
    stable = all(tail[i] != 0 and abs(tail[i] - tail[i - 1]) < rel_tol * abs(tail[i])
                 for i in range(1, len(tail)))
    if stable:
        return RadiusEstimate(FINITE, 1 / tail[-1], tail)
    decreasing = all(tail[i] < tail[i - 1] for i in range(1, len(tail)))
    if decreasing and tail[-1] < rel_tol * max(ratios):
        return RadiusEstimate(INFINITE, None, tail)
    return RadiusEstimate(UNRESOLVED, None, tail)
