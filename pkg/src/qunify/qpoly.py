"""Polynomials in x (and optionally y) with QRat coefficients."""

from __future__ import annotations

import re

from .exactnum import ONE, ZERO, QRat, parse_qrat
from .qcore import qint


class QPoly:
    """Sparse polynomial sum c_{ij} x^i y^j; immutable.

    Univariate polynomials are the special case with no y.  Terms are
    ordered by power of y, then power of x, so a bivariate value reads as a
    polynomial in y whose coefficients are polynomials in x.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = QRat(c)
                if not c.is_zero():
                    i, j = key if isinstance(key, tuple) else (key, 0)
                    clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def const(cls, c) -> "QPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c, i: int = 0, j: int = 0) -> "QPoly":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "QPoly":
        return cls({(1, 0): ONE})

    @classmethod
    def y(cls) -> "QPoly":
        return cls({(0, 1): ONE})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_univariate(self) -> bool:
        return all(j == 0 for _, j in self.terms)

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def coeff(self, i: int, j: int = 0) -> QRat:
        return self.terms.get((i, j), ZERO)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, QPoly):
            return other
        try:
            return QPoly.const(QRat(other))
        except TypeError:
            return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in b.terms.items():
            out[k] = out[k] + c if k in out else c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b + (-self)

    def __mul__(self, other):
        if isinstance(other, QPoly):
            out = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    k = (i1 + i2, j1 + j2)
                    p = c1 * c2
                    out[k] = out[k] + p if k in out else p
            return QPoly(out)
        try:
            c = QRat(other)
        except TypeError:
            return NotImplemented
        if c.is_zero():
            return QPoly()
        return QPoly({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = QPoly.const(ONE)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- transformations ---------------------------------------------------

    def scale_x(self, lam) -> "QPoly":
        """p(lam x, y)."""
        lam = QRat(lam)
        return QPoly({(i, j): c * lam ** i for (i, j), c in self.terms.items()})

    def subs_y(self, y0) -> "QPoly":
        """Substitute a constant for y, leaving a polynomial in x."""
        y0 = QRat(y0)
        out = {}
        for (i, j), c in self.terms.items():
            v = c * y0 ** j if j else c
            out[(i, 0)] = out[(i, 0)] + v if (i, 0) in out else v
        return QPoly(out)

    def qderive_x(self) -> "QPoly":
        """D_{q,x}: x^i -> [i]_q x^(i-1), y held constant."""
        return QPoly({(i - 1, j): qint(i) * c for (i, j), c in self.terms.items() if i > 0})

    def evaluate(self, x0, y0=0) -> QRat:
        x0, y0 = QRat(x0), QRat(y0)
        total = ZERO
        for (i, j), c in self.terms.items():
            total = total + c * x0 ** i * y0 ** j
        return total

    def limit_at_one(self) -> dict:
        """Coefficientwise q -> 1 limit as {(i, j): Fraction}, zeros dropped."""
        out = {}
        for k, c in self.terms.items():
            lim = c.limit_at_one()
            if lim:
                out[k] = lim
        return out

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        return render_qpoly(self)

    def __repr__(self):
        return f"QPoly({render_qpoly(self)!r})"

    def to_list(self) -> list:
        """[[i, j, coefficient string], ...] in canonical order."""
        return [[i, j, str(c)] for (i, j), c in self.items()]

    @classmethod
    def from_list(cls, rows) -> "QPoly":
        return cls({(int(i), int(j)): parse_qrat(c) for i, j, c in rows})


def _mono(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def render_qpoly(p: QPoly, latex: bool = False) -> str:
    if p.is_zero():
        return "0"
    out = []
    for (i, j), c in p.items():
        mono = _mono(i, j)
        if latex:
            mono = mono.replace("*", " ")
            for var in "xy":
                mono = _brace_exponent(mono, var)
        cs = c.latex() if latex else str(c)
        negative = cs.startswith("-") and (c.is_constant() or _single_term(c))
        if negative:
            cs = cs[1:]
        if mono:
            if cs == "1":
                body = mono
            elif c.is_constant() or latex:
                body = f"{cs} {mono}" if latex else f"{cs}*{mono}"
            else:
                body = f"({cs})*{mono}"
        else:
            body = cs
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def _single_term(c: QRat) -> bool:
    return sum(1 for x in c.num if x) == 1


def _brace_exponent(s: str, var: str) -> str:
    return re.sub(rf"{var}\^(\d+)", rf"{var}^{{\1}}", s)

