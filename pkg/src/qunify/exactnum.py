"""Exact rational functions in v, where q = v**2.

Scalars are :class:`fractions.Fraction`.  :class:`QRat` is an element of
Q(v) kept in a canonical form: numerator and denominator are integer
polynomials, coprime over Q, with no common integer content, and the
denominator has a positive leading coefficient.  Two values are equal
exactly when their canonical forms coincide.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

from . import _zpoly as zp
from .errors import DivisionByZero, ParseError, PoleAtOne, PoleAtPoint

__all__ = [
    "QRat", "Q", "V", "ONE", "ZERO", "q_power", "qrat_arith", "qrat_eval",
    "qrat_subst_qinv", "qrat_limit_at_one", "parse_qrat", "render",
]


def _normalize(num: tuple, den: tuple):
    """Content and sign normalization for an already coprime pair."""
    if not num:
        return zp.ZERO, zp.ONE
    c = gcd(zp.content(num), zp.content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


class QRat:
    """Element of Q(v) with q = v**2, immutable and hashable."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, QRat):
            self._num, self._den = value._num, value._den
        elif isinstance(value, int):
            self._num, self._den = ((value,) if value else zp.ZERO), zp.ONE
        elif isinstance(value, Rational):
            f = Fraction(value)
            self._num = (f.numerator,) if f else zp.ZERO
            self._den = (f.denominator,)
        else:
            raise TypeError(f"cannot build QRat from {type(value).__name__}")
        self._hash = None

    @classmethod
    def _raw(cls, num: tuple, den: tuple) -> "QRat":
        obj = object.__new__(cls)
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def from_polys(cls, num, den=(1,)) -> "QRat":
        """Build num(v)/den(v) from coefficient sequences (lowest degree first).

        Coefficients may be ints or Fractions.
        """
        num = [Fraction(c) for c in num]
        den = [Fraction(c) for c in den]
        lcm = 1
        for c in num + den:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        n = zp.trim(int(c * lcm) for c in num)
        d = zp.trim(int(c * lcm) for c in den)
        if not d:
            raise DivisionByZero("zero denominator")
        return cls._canonical(n, d)

    @classmethod
    def _canonical(cls, num: tuple, den: tuple) -> "QRat":
        if not num:
            return cls._raw(zp.ZERO, zp.ONE)
        g = zp.poly_gcd(num, den)
        if g != zp.ONE:
            num = zp.exact_div(num, g)
            den = zp.exact_div(den, g)
        return cls._raw(*_normalize(num, den))

    # -- structure ---------------------------------------------------------

    @property
    def num(self) -> tuple:
        """Integer numerator coefficients in v, lowest degree first."""
        return self._num

    @property
    def den(self) -> tuple:
        return self._den

    def num_coeffs(self) -> list:
        """Numerator as Fractions, scaled so the denominator is monic."""
        lc = self._den[-1]
        return [Fraction(c, lc) for c in self._num]

    def den_coeffs(self) -> list:
        lc = self._den[-1]
        return [Fraction(c, lc) for c in self._den]

    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return len(self._num) <= 1 and len(self._den) == 1

    def is_polynomial(self) -> bool:
        return len(self._den) == 1

    def is_even(self) -> bool:
        """True when only even powers of v occur, i.e. this lies in Q(q)."""
        return all(c == 0 for p in (self._num, self._den) for c in p[1::2])

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[0], self._den[0])

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, QRat):
            return other
        if isinstance(other, (int, Rational)):
            return QRat(other)
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        a = self
        if not a._num:
            return b
        if not b._num:
            return a
        if a._den == b._den:
            t = zp.add(a._num, b._num)
            if not t:
                return ZERO
            if len(a._den) == 1:
                return QRat._raw(*_normalize(t, a._den))
            return QRat._canonical(t, a._den)
        g = zp.poly_gcd(a._den, b._den)
        if g == zp.ONE:
            t = zp.add(zp.mul(a._num, b._den), zp.mul(b._num, a._den))
            return QRat._raw(*_normalize(t, zp.mul(a._den, b._den)))
        d1 = zp.exact_div(a._den, g)
        d2 = zp.exact_div(b._den, g)
        t = zp.add(zp.mul(a._num, d2), zp.mul(b._num, d1))
        if not t:
            return ZERO
        g2 = zp.poly_gcd(t, g)
        if g2 != zp.ONE:
            t = zp.exact_div(t, g2)
            den = zp.mul(d1, zp.exact_div(b._den, g2))
        else:
            den = zp.mul(d1, b._den)
        return QRat._raw(*_normalize(t, den))

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(zp.neg(self._num), self._den)

    def __pos__(self):
        return self

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
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        a = self
        if not a._num or not b._num:
            return ZERO
        an, ad, bn, bd = a._num, a._den, b._num, b._den
        g1 = zp.poly_gcd(an, bd)
        if g1 != zp.ONE:
            an = zp.exact_div(an, g1)
            bd = zp.exact_div(bd, g1)
        g2 = zp.poly_gcd(bn, ad)
        if g2 != zp.ONE:
            bn = zp.exact_div(bn, g2)
            ad = zp.exact_div(ad, g2)
        return QRat._raw(*_normalize(zp.mul(an, bn), zp.mul(ad, bd)))

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if not self._num:
            raise DivisionByZero("inverse of zero QRat")
        return QRat._raw(*_normalize(self._den, self._num))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self * b.inverse()

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        # coprime stays coprime under powers
        return QRat._raw(*_normalize(zp.power(self._num, n), zp.power(self._den, n)))

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self._num == b._num and self._den == b._den

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.as_fraction())
            else:
                self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self):
        return bool(self._num)

    # -- substitutions -----------------------------------------------------

    def evaluate(self, v0) -> Fraction:
        """Exact value at v = v0 (so q = v0**2)."""
        v0 = Fraction(v0)
        a, b = v0.numerator, v0.denominator
        dn, dd = len(self._num) - 1, len(self._den) - 1
        top = _homogeneous(self._num, a, b, max(dn, dd))
        bot = _homogeneous(self._den, a, b, max(dn, dd))
        if bot == 0:
            raise PoleAtPoint(f"denominator of {self} vanishes at v = {v0}")
        return Fraction(top, bot)

    def subst_qinv(self) -> "QRat":
        """Return f(1/v), i.e. the substitution q -> 1/q."""
        if not self._num:
            return self
        # f(1/v) = v**(deg den - deg num) * rev(num) / rev(den)
        k = len(self._den) - len(self._num)
        num = zp.reverse(self._num)
        den = zp.reverse(self._den)
        if k >= 0:
            num = zp.shift(num, k)
        else:
            den = zp.shift(den, -k)
        return QRat._canonical(num, den)

    def limit_at_one(self) -> Fraction:
        """Value at q = 1 after cancelling removable factors (v - 1)."""
        num, den = self._num, self._den
        if not num:
            return Fraction(0)
        lin = (-1, 1)
        while zp.evaluate(den, 1) == 0:
            if zp.evaluate(num, 1) != 0:
                raise PoleAtOne(f"{self} has a pole at q = 1")
            num = zp.exact_div(num, lin)
            den = zp.exact_div(den, lin)
        return Fraction(zp.evaluate(num, 1), zp.evaluate(den, 1))

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"QRat({render(self)!r})"

    def latex(self) -> str:
        return render_latex(self)


def _homogeneous(f: tuple, a: int, b: int, deg: int) -> int:
    """b**deg * f(a/b) as an integer."""
    acc = 0
    for i, c in enumerate(f):
        if c:
            acc += c * a ** i * b ** (deg - i)
    return acc


ZERO = QRat(0)
ONE = QRat(1)
V = QRat._raw((0, 1), zp.ONE)
Q = QRat._raw((0, 0, 1), zp.ONE)


def q_power(k) -> QRat:
    """q**k for integer or half-integer k."""
    e = Fraction(k) * 2
    if e.denominator != 1:
        raise ValueError(f"q**{k} needs more than a square root of q")
    e = int(e)
    if e >= 0:
        return QRat._raw((0,) * e + (1,), zp.ONE)
    return QRat._raw(zp.ONE, (0,) * (-e) + (1,))


def qrat_arith(a: QRat, b: QRat, op: str) -> QRat:
    a, b = QRat(a), QRat(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def qrat_eval(f: QRat, v0) -> Fraction:
    return QRat(f).evaluate(v0)


def qrat_subst_qinv(f: QRat) -> QRat:
    return QRat(f).subst_qinv()


def qrat_limit_at_one(f: QRat) -> Fraction:
    return QRat(f).limit_at_one()


# -- rendering -------------------------------------------------------------

def _poly_terms(coeffs: tuple, even: bool):
    """Yield (coefficient, exponent string or None) for nonzero terms."""
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            yield c, None
        elif even:
            e = i // 2
            yield c, "q" if e == 1 else f"q^{e}"
        else:
            yield c, "v" if i == 1 else f"v^{i}"


def _render_poly(coeffs: tuple, even: bool) -> str:
    parts = []
    for c, mono in _poly_terms(coeffs, even):
        if mono is None:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(sign + body)
    return "".join(parts) if parts else "0"


def _nterms(coeffs: tuple) -> int:
    return sum(1 for c in coeffs if c)


def render(f: QRat) -> str:
    """Canonical text form, in q when every v-exponent is even, else in v."""
    even = f.is_even()
    num = _render_poly(f.num, even)
    if f.den == zp.ONE:
        return num
    den = _render_poly(f.den, even)
    if _nterms(f.num) > 1:
        num = f"({num})"
    bare_den = _nterms(f.den) == 1 and (len(f.den) == 1 or f.den[-1] == 1)
    if not bare_den:
        den = f"({den})"
    return f"{num}/{den}"


def _latex_poly(coeffs: tuple, even: bool) -> str:
    parts = []
    for c, mono in _poly_terms(coeffs, even):
        if mono is not None:
            mono = re.sub(r"\^(\d+)", r"^{\1}", mono)
        if mono is None:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(sign + body)
    return "".join(parts) if parts else "0"


def render_latex(f: QRat) -> str:
    even = f.is_even()
    if f.den == zp.ONE:
        return _latex_poly(f.num, even)
    num = f.num
    sign = ""
    if _nterms(num) == 1 and num[-1] < 0:
        sign, num = "-", zp.neg(num)
    return f"{sign}\\frac{{{_latex_poly(num, even)}}}{{{_latex_poly(f.den, even)}}}"


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([qv])|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        num, var, op = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif var is not None:
            out.append(("var", var))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"unexpected token {tok[1]!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> QRat:
        if not self.toks:
            raise ParseError("empty expression")
        val = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def _starts_atom(self):
        kind, value = self.peek()
        return kind in ("int", "var") or (kind, value) == ("op", "(")

    def term(self):
        val = self.unary()
        while True:
            tok = self.peek()
            if tok in (("op", "*"), ("op", "/")):
                self.take()
                rhs = self.unary()
                if tok[1] == "*":
                    val = val * rhs
                else:
                    if rhs.is_zero():
                        raise DivisionByZero(f"division by zero in {self.text!r}")
                    val = val / rhs
            elif self._starts_atom():
                val = val * self.power()
            else:
                return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            paren = False
            if self.peek() == ("op", "("):
                self.take()
                paren = True
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            exp = sign * self.take("int")[1]
            if paren:
                self.take("op", ")")
            if exp < 0 and base.is_zero():
                raise DivisionByZero("zero to a negative power")
            return base ** exp
        return base

    def atom(self):
        kind, value = self.peek()
        if kind == "int":
            self.take()
            return QRat(value)
        if kind == "var":
            self.take()
            return Q if value == "q" else V
        if (kind, value) == ("op", "("):
            self.take()
            val = self.expr()
            self.take("op", ")")
            return val
        raise ParseError(f"unexpected token {value!r} in {self.text!r}")


def parse_qrat(text: str) -> QRat:
    """Parse an expression in q and/or v (q = v^2) into a QRat."""
    return _Parser(text).parse()
