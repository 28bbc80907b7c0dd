"""Dense exact-rational matrices.

Sizes stay small (a few dozen rows at most), so everything is a plain dense
tuple-of-tuples of Fractions with straightforward O(n^3) products.
"""

from __future__ import annotations

from fractions import Fraction

from .series import as_rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(as_rational(e) for e in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self.entries = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def identity(cls, n):
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values):
        vals = [as_rational(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def anti_identity(cls, n):
        """Permutation matrix reversing coefficient order."""
        return cls([[_ONE if i + j == n - 1 else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, cols):
        cols = [list(c) for c in cols]
        height = len(cols[0])
        if any(len(c) != height for c in cols):
            raise ValueError("ragged columns")
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(height)])

    def __eq__(self, other):
        return (
            isinstance(other, RMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.entries)
        return f"RMatrix[{self.rows}x{self.cols}: {body}]"

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def transpose(self):
        return RMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __mul__(self, other):
        if isinstance(other, RMatrix):
            if self.cols != other.rows:
                raise ValueError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            ot = other.transpose().entries
            return RMatrix(
                [
                    [sum(a * b for a, b in zip(row, col)) for col in ot]
                    for row in self.entries
                ]
            )
        c = as_rational(other)
        return RMatrix([[c * e for e in row] for row in self.entries])

    __rmul__ = __mul__

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return RMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other):
        return self + (-1) * other

    def apply(self, vec):
        """Matrix times column vector, returned as a tuple."""
        vec = [as_rational(v) for v in vec]
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def col_sums(self):
        return tuple(sum(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))

    def block(self, r0, r1, c0, c1):
        return RMatrix([row[c0:c1] for row in self.entries[r0:r1]])

    def is_zero(self):
        return all(e == 0 for row in self.entries for e in row)
