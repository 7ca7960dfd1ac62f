"""CSV, JSON and LaTeX rendering of number tables, polynomials and reports."""

from __future__ import annotations

import csv
import io
import json

from .exactnum import parse_qrat
from .qpoly import QPoly, render_qpoly

SCHEMA = 1

_LATEX_SYMBOL = {"bernoulli": r"\mathfrak{B}", "euler": r"\mathfrak{E}", "genocchi": r"\mathfrak{G}"}


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


# -- number tables ------------------------------------------------------------

def tables_to_json(tables) -> str:
    if len(tables) == 1:
        return _dumps(tables[0].to_dict())
    return _dumps({"schema": SCHEMA, "family": tables[0].family.name,
                   "tables": [t.to_dict() for t in tables]})


def tables_to_csv(tables) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    multi = len(tables) > 1
    w.writerow(["kind", "n", "value"] if multi else ["n", "value"])
    for t in tables:
        for n, v in enumerate(t.entries):
            w.writerow([t.kind, n, str(v)] if multi else [n, str(v)])
    return buf.getvalue()


def tables_to_latex(tables) -> str:
    lines = [r"\begin{tabular}{r" + "l" * len(tables) + "}", r"\hline"]
    head = ["$n$"] + [f"${_LATEX_SYMBOL[t.kind]}_{{n,q,\\alpha}}$" for t in tables]
    lines.append(" & ".join(head) + r" \\ \hline")
    for n in range(len(tables[0].entries)):
        row = [str(n)] + [f"${t.entries[n].latex()}$" for t in tables]
        lines.append(" & ".join(row) + r" \\")
    lines += [r"\hline", r"\end{tabular}", ""]
    return "\n".join(lines)


def load_table_json(text: str) -> dict:
    """Parse a single-table JSON document back into {kind, family, entries: [QRat]}."""
    doc = json.loads(text)
    entries = doc["entries"]
    return {
        "kind": doc["kind"],
        "family": doc["family"],
        "entries": [parse_qrat(entries[str(n)]) for n in range(len(entries))],
    }


def render_tables(tables, fmt: str) -> str:
    return {"json": tables_to_json, "csv": tables_to_csv, "latex": tables_to_latex}[fmt](tables)


# -- polynomials ----------------------------------------------------------------

def polys_to_json(kind: str, family: str, polys, bivariate: bool) -> str:
    return _dumps({
        "schema": SCHEMA,
        "kind": kind,
        "family": family,
        "variables": ["x", "y"] if bivariate else ["x"],
        "entries": {str(n): p.to_list() for n, p in enumerate(polys)},
    })


def load_polys_json(text: str) -> dict:
    doc = json.loads(text)
    entries = doc["entries"]
    return {
        "kind": doc["kind"],
        "family": doc["family"],
        "polys": [QPoly.from_list(entries[str(n)]) for n in range(len(entries))],
    }


def polys_to_csv(kind: str, family: str, polys, bivariate: bool) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "value"])
    for n, p in enumerate(polys):
        w.writerow([n, str(p)])
    return buf.getvalue()


def polys_to_latex(kind: str, family: str, polys, bivariate: bool) -> str:
    args = "x,y" if bivariate else "x"
    lines = [r"\begin{align*}"]
    for n, p in enumerate(polys):
        end = r" \\" if n < len(polys) - 1 else ""
        lines.append(f"{_LATEX_SYMBOL[kind]}_{{{n},q,\\alpha}}({args}) &= "
                     f"{render_qpoly(p, latex=True)}{end}")
    lines += [r"\end{align*}", ""]
    return "\n".join(lines)


def render_polys(kind, family, polys, bivariate, fmt) -> str:
    fn = {"json": polys_to_json, "csv": polys_to_csv, "latex": polys_to_latex}[fmt]
    return fn(kind, family, polys, bivariate)


# -- reports --------------------------------------------------------------------

def reports_to_json(reports, family: str) -> str:
    return _dumps({
        "schema": SCHEMA,
        "family": family,
        "passed": all(r.passed for r in reports),
        "reports": [r.to_dict() for r in reports],
    })


def reports_to_text(reports, verbose: bool = False) -> str:
    return "\n".join(r.render(verbose) for r in reports) + "\n"
