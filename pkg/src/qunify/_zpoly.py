"""Dense univariate polynomials over the integers.

A polynomial is a tuple of Python ints, lowest degree first, with no
trailing zeros.  The zero polynomial is the empty tuple.  Everything here
is exact; the gcd uses the heuristic evaluation/interpolation method with a
primitive-remainder-sequence fallback.
"""

from __future__ import annotations

from math import gcd, isqrt

ZERO: tuple = ()
ONE: tuple = (1,)


def trim(c) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: tuple) -> int:
    return len(f) - 1


def add(f: tuple, g: tuple) -> tuple:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return trim(out)


def neg(f: tuple) -> tuple:
    return tuple(-c for c in f)


def sub(f: tuple, g: tuple) -> tuple:
    return add(f, neg(g))


def scale(f: tuple, k: int) -> tuple:
    if k == 0:
        return ZERO
    return tuple(k * c for c in f)


def shift(f: tuple, k: int) -> tuple:
    """Multiply by v**k (k >= 0)."""
    if not f or k == 0:
        return f
    return (0,) * k + f


def _kronecker_bits(f: tuple, g: tuple) -> int:
    bound = max(abs(c) for c in f) * max(abs(c) for c in g) * min(len(f), len(g))
    return bound.bit_length() + 2


def _pack(f: tuple, bits: int) -> int:
    out = 0
    for c in reversed(f):
        out = (out << bits) + c
    return out


def _unpack(n: int, bits: int, length: int) -> tuple:
    base = 1 << bits
    half = base >> 1
    mask = base - 1
    out = []
    for _ in range(length):
        c = n & mask
        n >>= bits
        if c >= half:
            c -= base
            n += 1
        out.append(c)
    return trim(out)


def mul(f: tuple, g: tuple) -> tuple:
    if not f or not g:
        return ZERO
    if len(f) == 1:
        return scale(g, f[0])
    if len(g) == 1:
        return scale(f, g[0])
    if len(f) * len(g) > 400:
        # Kronecker substitution: one big-int product instead of a double loop.
        bits = _kronecker_bits(f, g)
        return _unpack(_pack(f, bits) * _pack(g, bits), bits, len(f) + len(g) - 1)
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def power(f: tuple, n: int) -> tuple:
    result = ONE
    base = f
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def content(f: tuple) -> int:
    g = 0
    for c in f:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(f: tuple) -> tuple:
    """Divide out the content and make the leading coefficient positive."""
    if not f:
        return f
    c = content(f)
    if f[-1] < 0:
        c = -c
    if c == 1:
        return f
    return tuple(x // c for x in f)


def exact_div(f: tuple, g: tuple):
    """Return f / g if g divides f in Z[v], else None."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return ZERO
    dg = len(g) - 1
    if len(f) - 1 < dg:
        return None
    rem = list(f)
    lc = g[-1]
    quot = [0] * (len(f) - dg)
    for i in range(len(f) - 1 - dg, -1, -1):
        c = rem[i + dg]
        if c == 0:
            continue
        qc, r = divmod(c, lc)
        if r:
            return None
        quot[i] = qc
        for j, b in enumerate(g):
            rem[i + j] -= qc * b
    if any(rem[:dg]):
        return None
    return trim(quot)


def pseudo_rem(f: tuple, g: tuple) -> tuple:
    rem = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while len(rem) - 1 >= dg and rem:
        c = rem[-1]
        d = len(rem) - 1 - dg
        rem = [lc * x for x in rem]
        for j, b in enumerate(g):
            rem[d + j] -= c * b
        rem = list(trim(rem))
    return tuple(rem)


def evaluate(f: tuple, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _interpolate(h: int, x: int) -> tuple:
    out = []
    half = x // 2
    while h:
        c = h % x
        if c > half:
            c -= x
        out.append(c)
        h = (h - c) // x
    return tuple(out)


def _heugcd(f: tuple, g: tuple):
    fn = max(abs(c) for c in f)
    gn = max(abs(c) for c in g)
    b = 2 * min(fn, gn) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(6):
        ff = evaluate(f, x)
        gg = evaluate(g, x)
        if ff and gg:
            h = gcd(ff, gg)
            cand = primitive(_interpolate(h, x))
            if cand and exact_div(f, cand) is not None and exact_div(g, cand) is not None:
                return cand
            cf = _interpolate(ff // h, x)
            if cf:
                cand = exact_div(f, cf)
                if cand is not None:
                    cand = primitive(cand)
                    if exact_div(g, cand) is not None:
                        return cand
            cg = _interpolate(gg // h, x)
            if cg:
                cand = exact_div(g, cg)
                if cand is not None:
                    cand = primitive(cand)
                    if exact_div(f, cand) is not None:
                        return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _prs_gcd(f: tuple, g: tuple) -> tuple:
    a, b = primitive(f), primitive(g)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def poly_gcd(f: tuple, g: tuple) -> tuple:
    """Primitive gcd with positive leading coefficient (gcd over Q, scaled)."""
    if not f:
        return primitive(g)
    if not g:
        return primitive(f)
    if len(f) == 1 or len(g) == 1:
        return ONE
    # common power of v
    lf = next(i for i, c in enumerate(f) if c)
    lg = next(i for i, c in enumerate(g) if c)
    low = min(lf, lg)
    f, g = f[lf:], g[lg:]
    # both may be polynomials in v**s
    s = 0
    for poly in (f, g):
        for i, c in enumerate(poly):
            if c:
                s = gcd(s, i)
    if s > 1:
        f, g = f[::s], g[::s]
    if len(f) == 1 or len(g) == 1:
        h = ONE
    else:
        pf, pg = primitive(f), primitive(g)
        h = _heugcd(pf, pg)
        if h is None:
            h = _prs_gcd(pf, pg)
    if s > 1 and len(h) > 1:
        spread = [0] * ((len(h) - 1) * s + 1)
        for i, c in enumerate(h):
            spread[i * s] = c
        h = tuple(spread)
    return shift(h, low)


def reverse(f: tuple) -> tuple:
    """Coefficients reversed, i.e. v**deg * f(1/v), with low zeros dropped."""
    r = f[::-1]
    return trim(r)
