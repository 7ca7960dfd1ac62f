"""The alpha(q, n) parameter of the unified q-exponential.

An :class:`AlphaFamily` is a lazily materialized sequence n -> alpha(q, n)
of :class:`QRat` values.  Besides the four built-in families this module
holds the q <-> 1/q symmetry test, the beta transform, the residuals of
E(-z) E(z) = 1, the recursive solver for the even entries, and the ratio
analyzer used by the q-derivative identities.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Mapping, Optional

from .errors import (IndexBeyondTable, InconsistentInput, NotOfThisForm,
                     PoleAtOne, UnknownFamily, UnsolvableStep, ZeroAlpha)
from .exactnum import ONE, ZERO, V, QRat, parse_qrat, q_power
from .qcore import qbinomial, qfactorial, qint
from .report import FAIL, HYPOTHESIS_FAILED, PASS, Report

PROVENANCES = ("builtin", "custom-closed-form", "solver")
BUILTIN_NAMES = ("ones", "gauss", "improved", "half_gauss")


class AlphaFamily:
    """A named sequence alpha(q, n), n >= 0, with a thread-safe cache.

    Either ``generator`` (a callable n -> value) or ``table`` (a sequence or
    mapping of the entries 0..horizon) must be given.  ``evaluator`` is an
    optional fast path n, v0 -> Fraction used by numeric probes.
    """

    def __init__(self, name: str, generator: Optional[Callable] = None, *,
                 table=None, provenance: str = "custom-closed-form",
                 evaluator: Optional[Callable] = None):
        if (generator is None) == (table is None):
            raise ValueError("give exactly one of generator or table")
        if provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {provenance!r}")
        self.name = name
        self.provenance = provenance
        self._generator = generator
        self._evaluator = evaluator
        self._cache: dict = {}
        self._lock = threading.Lock()
        self.horizon: Optional[int] = None
        if table is not None:
            if isinstance(table, Mapping):
                items = {int(k): QRat(v) for k, v in table.items()}
            else:
                items = {i: QRat(v) for i, v in enumerate(table)}
            if sorted(items) != list(range(len(items))):
                raise InconsistentInput("table entries must be indexed 0..N without gaps")
            self._cache.update(items)
            self.horizon = len(items) - 1
        if self(0) != ONE:
            raise InconsistentInput(f"family {name!r} has alpha(q, 0) = {self(0)}, expected 1")

    def __call__(self, n: int) -> QRat:
        if n < 0:
            raise IndexError("alpha index must be nonnegative")
        try:
            return self._cache[n]
        except KeyError:
            pass
        if self._generator is None:
            raise IndexBeyondTable(
                f"family {self.name!r} is tabulated up to n={self.horizon}, asked for {n}")
        value = QRat(self._generator(n))
        with self._lock:
            return self._cache.setdefault(n, value)

    __getitem__ = __call__

    def prefix(self, n: int) -> list:
        return [self(i) for i in range(n + 1)]

    def value_at(self, n: int, v0) -> Fraction:
        """alpha(q, n) evaluated exactly at v = v0."""
        if self._evaluator is not None:
            return Fraction(self._evaluator(n, Fraction(v0)))
        return self(n).evaluate(v0)

    def available(self, n: int) -> bool:
        return self.horizon is None or n <= self.horizon

    def limit_report(self, n_max: int) -> Report:
        """alpha(q, n) -> 1 as q -> 1 for every n <= n_max."""
        report = Report("alpha-limit", family=self.name, params={"n_max": n_max})
        for n in range(n_max + 1):
            try:
                lim = self(n).limit_at_one()
            except PoleAtOne:
                report.add(n, FAIL, lhs=self(n), rhs=1, note="pole at q = 1")
                continue
            report.compare(n, lim, Fraction(1))
        return report

    def __repr__(self):
        return f"AlphaFamily({self.name!r}, provenance={self.provenance!r})"


class BetaFamily(AlphaFamily):
    """beta(q, n) = q^binom(n,2) alpha(1/q, n) for a source family."""

    def __init__(self, source: AlphaFamily):
        self.source = source

        def gen(n):
            if source.horizon is not None and n > source.horizon:
                raise IndexBeyondTable(f"beta({source.name}) is defined up to n={source.horizon}")
            return q_power(comb(n, 2)) * source(n).subst_qinv()
        super().__init__(f"beta({source.name})", gen, provenance="custom-closed-form")
        self.horizon = source.horizon


# -- built-in families -----------------------------------------------------

def _improved_value(n, v0):
    q0 = v0 * v0
    out = Fraction(1)
    for j in range(n):
        out *= (1 + q0 ** j) / 2
    return out


def builtin_family(name: str) -> AlphaFamily:
    """One of ``ones``, ``gauss``, ``improved``, ``half_gauss``."""
    if name == "ones":
        return AlphaFamily("ones", lambda n: ONE, provenance="builtin",
                           evaluator=lambda n, v0: Fraction(1))
    if name == "gauss":
        return AlphaFamily("gauss", lambda n: q_power(comb(n, 2)), provenance="builtin",
                           evaluator=lambda n, v0: v0 ** (2 * comb(n, 2)))
    if name == "improved":
        fam = None

        def gen(n):
            # (-1; q)_n / 2^n, built from the previous entry
            if n == 0:
                return ONE
            return fam(n - 1) * (1 + q_power(n - 1)) / 2
        fam = AlphaFamily("improved", gen, provenance="builtin", evaluator=_improved_value)
        return fam
    if name == "half_gauss":
        return AlphaFamily("half_gauss", lambda n: V ** comb(n, 2), provenance="builtin",
                           evaluator=lambda n, v0: v0 ** comb(n, 2))
    raise UnknownFamily(f"unknown family {name!r}; expected one of {', '.join(BUILTIN_NAMES)}")


def custom_family(name: str, generator: Callable) -> AlphaFamily:
    return AlphaFamily(name, generator, provenance="custom-closed-form")


def table_family(name: str, entries, provenance: str = "custom-closed-form") -> AlphaFamily:
    return AlphaFamily(name, table=entries, provenance=provenance)


def families_equal(a: AlphaFamily, b: AlphaFamily, n_max: int) -> bool:
    return all(a(n) == b(n) for n in range(n_max + 1))


# -- symmetry under q -> 1/q -------------------------------------------------

def symmetry_check(fam: AlphaFamily, n_max: int) -> Report:
    """Test q^binom(n,2) alpha(1/q, n) == alpha(q, n) for each n <= n_max."""
    report = Report("symmetry", family=fam.name, params={"n_max": n_max})
    for n in range(n_max + 1):
        lhs = q_power(comb(n, 2)) * fam(n).subst_qinv()
        report.compare(n, lhs, fam(n))
    return report


def series_symmetry_check(fam: AlphaFamily, n_max: int) -> Report:
    """Check that the coefficientwise series symmetry holds iff the alpha condition does.

    The series side compares alpha(q,n)/[n]_q! with the same coefficient
    after q -> 1/q.  A family that is not symmetric is reported as
    hypothesis-failed, which is not a violation.
    """
    report = Report("series-symmetry", family=fam.name, params={"n_max": n_max})
    cond = symmetry_check(fam, n_max)
    for c in cond.checks:
        n = c.n
        coeff = fam(n) / qfactorial(n)
        series_sym = coeff.subst_qinv() == coeff
        cond_holds = c.status == PASS
        if series_sym != cond_holds:
            report.add(n, FAIL, lhs=c.lhs, rhs=c.rhs,
                       note="series symmetry and alpha condition disagree")
        elif cond_holds:
            report.add(n, PASS, lhs=c.lhs, rhs=c.rhs)
        else:
            report.add(n, HYPOTHESIS_FAILED, lhs=c.lhs, rhs=c.rhs,
                       note="family is not q <-> 1/q symmetric at this index")
    return report


def beta_transform(fam: AlphaFamily) -> BetaFamily:
    return BetaFamily(fam)


# -- multiplicative inverse condition ----------------------------------------

def inverse_residual(fam: AlphaFamily, n: int) -> QRat:
    """r_n = sum_k C(n,k)_q (-1)^k alpha_k alpha_{n-k}."""
    total = ZERO
    for k in range(n + 1):
        term = qbinomial(n, k) * fam(k) * fam(n - k)
        total = total - term if k % 2 else total + term
    return total


def inverse_condition_residuals(fam: AlphaFamily, n_max: int) -> dict:
    """Map n -> r_n for 1 <= n <= n_max; all zero iff E(-z) E(z) = 1 to that order."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return {n: inverse_residual(fam, n) for n in range(1, n_max + 1)}


def even_equation_sides(fam: AlphaFamily, n: int):
    """Both sides of the even-index equation 2 sum_{k<p} ... = C(n,p)_q (-1)^{p+1} alpha_p^2."""
    if n % 2 or n < 2:
        raise ValueError("the equation is stated for even n >= 2")
    p = n // 2
    lhs = ZERO
    for k in range(p):
        term = qbinomial(n, k) * fam(k) * fam(n - k)
        lhs = lhs - term if k % 2 else lhs + term
    lhs = 2 * lhs
    rhs = qbinomial(n, p) * fam(p) ** 2
    if p % 2 == 0:
        rhs = -rhs
    return lhs, rhs


def solve_alpha_system(odd_values: Mapping, n_max: int, name: str = "solved") -> AlphaFamily:
    """Solve r_n = 0 for the even entries, given alpha_0 = 1 and the odd entries.

    For n = 2p the unknown alpha_n enters r_n only through the k = 0 and
    k = n terms, with coefficient 2 alpha_0, so each step is linear.
    """
    if n_max < 0 or n_max % 2:
        raise ValueError("n_max must be a nonnegative even integer")
    odd = {int(k): (parse_qrat(v) if isinstance(v, str) else QRat(v))
           for k, v in odd_values.items()}
    for k in odd:
        if k % 2 == 0 or k < 1:
            raise InconsistentInput(f"index {k} is not odd")
    missing = [k for k in range(1, n_max, 2) if k not in odd]
    if missing:
        raise InconsistentInput(f"odd entries missing for n = {missing}")
    alpha = {0: ONE}
    for k in range(1, n_max, 2):
        alpha[k] = odd[k]
        _require_limit_one(k, alpha[k], "supplied")
    lead = alpha[0] + alpha[0]
    if lead.is_zero():
        raise UnsolvableStep("coefficient of the unknown vanishes")
    for n in range(2, n_max + 1, 2):
        rest = ZERO
        for k in range(1, n):
            term = qbinomial(n, k) * alpha[k] * alpha[n - k]
            rest = rest - term if k % 2 else rest + term
        alpha[n] = -rest / lead
        _require_limit_one(n, alpha[n], "solved")
    return AlphaFamily(name, table=[alpha[i] for i in range(n_max + 1)], provenance="solver")


def _require_limit_one(n, value, what):
    try:
        lim = value.limit_at_one()
    except PoleAtOne:
        raise InconsistentInput(f"{what} alpha_{n} = {value} has a pole at q = 1") from None
    if lim != 1:
        raise InconsistentInput(f"{what} alpha_{n} = {value} tends to {lim}, not 1, as q -> 1")


def shortcut_closed_forms(fam: AlphaFamily) -> dict:
    """Shortcut closed forms alpha_2 = [2]_q/(2 alpha_1) and a companion alpha_4 formula.

    Returned for comparison only; the solver does not use them.
    """
    a1, a3 = fam(1), fam(3)
    return {
        2: qint(2) / (2 * a1),
        4: qint(4) / (2 * a1 ** 2) * (qint(2) * a3 - qfactorial(3) / (4 * a1)),
    }


# -- ratio analysis -----------------------------------------------------------

@dataclass
class RatioForm:
    """alpha(q, n+1) / alpha(q, n) = sum_k a_k q^(k n)."""

    coefficients: dict = field(default_factory=dict)

    def at(self, n: int) -> QRat:
        total = ZERO
        for k, a in self.coefficients.items():
            total = total + a * q_power(k * n)
        return total

    def sum_at_one(self) -> Fraction:
        return sum((a.limit_at_one() for a in self.coefficients.values()), Fraction(0))

    def __str__(self):
        return ", ".join(f"a_{k} = {a}" for k, a in sorted(self.coefficients.items()))


def ratio_analyze(fam: AlphaFamily, n_probe: int = 8) -> RatioForm:
    """Fit alpha_{n+1}/alpha_n as a polynomial in Q = q^n with n-free coefficients.

    Points n = 0..n_probe are used; a degree-m fit through the first m+1
    points must reproduce every remaining point.  Raises NotOfThisForm when
    no degree below n_probe does.
    """
    if n_probe < 3:
        raise ValueError("n_probe must be at least 3")
    ratios = []
    for n in range(n_probe + 1):
        a, b = fam(n), fam(n + 1)
        if a.is_zero() or b.is_zero():
            raise ZeroAlpha(f"alpha_{n if a.is_zero() else n + 1} = 0 in family {fam.name!r}")
        ratios.append(b / a)
    nodes = [q_power(n) for n in range(n_probe + 1)]

    # Newton divided differences, one point at a time
    newton = []
    column = prev = []
    for m in range(n_probe):
        column = [ratios[m]] + [None] * len(column)
        for j in range(1, m + 1):
            column[j] = (column[j - 1] - prev[j - 1]) / (nodes[m] - nodes[m - j])
        prev = column
        newton.append(column[m])
        if all(_newton_eval(newton, nodes, nodes[j]) == ratios[j]
               for j in range(m + 1, n_probe + 1)):
            coeffs = _newton_to_monomial(newton, nodes)
            return RatioForm({k: c for k, c in enumerate(coeffs) if not c.is_zero()})
    raise NotOfThisForm(
        f"alpha ratio of {fam.name!r} is not a polynomial in q^n of degree < {n_probe}")


def _newton_eval(newton, nodes, x):
    acc = newton[-1]
    for i in range(len(newton) - 2, -1, -1):
        acc = acc * (x - nodes[i]) + newton[i]
    return acc


def _newton_to_monomial(newton, nodes):
    poly = [newton[-1]]
    for i in range(len(newton) - 2, -1, -1):
        # poly * (x - nodes[i]) + newton[i]
        shifted = [ZERO] + poly
        for j in range(len(poly)):
            shifted[j] = shifted[j] - nodes[i] * poly[j]
        shifted[0] = shifted[0] + newton[i]
        poly = shifted
    return poly


# -- serialization ------------------------------------------------------------

def family_to_dict(fam: AlphaFamily, n_max: Optional[int] = None) -> dict:
    if n_max is None:
        if fam.horizon is None:
            raise ValueError("n_max is required for families without a finite table")
        n_max = fam.horizon
    return {
        "schema": 1,
        "name": fam.name,
        "provenance": fam.provenance,
        "entries": {str(n): str(fam(n)) for n in range(n_max + 1)},
    }


def dump_family(fam: AlphaFamily, n_max: Optional[int] = None) -> str:
    return json.dumps(family_to_dict(fam, n_max), indent=2) + "\n"


def family_from_dict(doc: dict) -> AlphaFamily:
    try:
        entries = {int(k): parse_qrat(v) for k, v in doc["entries"].items()}
        name = doc["name"]
    except (KeyError, TypeError, AttributeError) as exc:
        raise InconsistentInput(f"malformed family document: {exc}") from None
    provenance = doc.get("provenance", "custom-closed-form")
    return AlphaFamily(name, table=entries, provenance=provenance)


def load_family(text: str) -> AlphaFamily:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InconsistentInput(f"family file is not valid JSON: {exc}") from None
    return family_from_dict(doc)
