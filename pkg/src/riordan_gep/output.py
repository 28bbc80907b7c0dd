"""Output documents for the CLI: exact rationals as strings, three renderers.

The JSON form is {"kind": ..., "n"/"rows"/"cols" when relevant,
"entries": [[str]]} and round-trips losslessly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .matrix import RMatrix
from .series import Poly, Series


@dataclass
class OutputDoc:
    kind: str  # Polynomial | SeriesCoeffs | Matrix | VerifyReport
    entries: list
    n: int | None = None
    rows: int | None = None
    cols: int | None = None

    def to_json(self) -> str:
        payload = {"kind": self.kind}
        for name in ("n", "rows", "cols"):
            value = getattr(self, name)
            if value is not None:
                payload[name] = value
        payload["entries"] = self.entries
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "OutputDoc":
        data = json.loads(text)
        return cls(
            kind=data["kind"],
            entries=[list(row) for row in data["entries"]],
            n=data.get("n"),
            rows=data.get("rows"),
            cols=data.get("cols"),
        )

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return "".join(",".join(row) + "\n" for row in self.entries)
        if fmt == "pretty":
            return self._pretty()
        raise ValueError(f"unknown format {fmt!r}")

    def _pretty(self) -> str:
        if self.kind == "Polynomial":
            return format_poly_strings(self.entries[0]) + "\n"
        if self.kind == "SeriesCoeffs":
            return ", ".join(self.entries[0]) + "\n"
        if self.kind == "VerifyReport":
            lines = [f"[{row[2]}] {row[0]}: {row[1]}" for row in self.entries]
            bad = sum(1 for row in self.entries if row[2] != "ok")
            lines.append(f"{len(self.entries)} checks, {bad} failed")
            return "\n".join(lines) + "\n"
        widths = [0] * max(len(r) for r in self.entries)
        for row in self.entries:
            for j, cell in enumerate(row):
                widths[j] = max(widths[j], len(cell))
        lines = [
            "  ".join(cell.rjust(widths[j]) for j, cell in enumerate(row))
            for row in self.entries
        ]
        return "\n".join(lines) + "\n"


def format_fraction(q: Fraction) -> str:
    return str(q)


def format_poly_strings(coeff_strings) -> str:
    coeffs = [Fraction(s) for s in coeff_strings]
    return format_poly(Poly(coeffs))


def format_poly(p: Poly) -> str:
    """x+11x^2+11x^3+x^4 style; fractional coefficients are parenthesized."""
    if p.degree() < 0:
        return "0"
    parts = []
    for k in range(p.degree() + 1):
        c = p.coeff(k)
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_fraction(mag)
        else:
            base = "x" if k == 1 else f"x^{k}"
            if mag == 1:
                body = base
            elif mag.denominator == 1:
                body = f"{mag}{base}"
            else:
                body = f"({mag}){base}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts)


def poly_doc(p: Poly, n: int | None = None) -> OutputDoc:
    return OutputDoc(
        kind="Polynomial",
        entries=[[format_fraction(p.coeff(k)) for k in range(max(p.degree(), 0) + 1)]],
        n=n,
    )


def series_doc(s: Series) -> OutputDoc:
    return OutputDoc(kind="SeriesCoeffs", entries=[[format_fraction(c) for c in s.coeffs]])


def matrix_doc(m: RMatrix, n: int | None = None) -> OutputDoc:
    return OutputDoc(
        kind="Matrix",
        entries=[[format_fraction(e) for e in row] for row in m.entries],
        n=n,
        rows=m.rows,
        cols=m.cols,
    )


def verify_doc(results) -> OutputDoc:
    entries = [[r.suite, r.name, "ok" if r.ok else "FAIL"] for r in results]
    return OutputDoc(kind="VerifyReport", entries=entries)
