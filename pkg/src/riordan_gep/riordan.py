"""Riordan arrays in three flavors, plus the Pascal/shift/decimation operators.

An ordinary array (f, g) with g(0) = 0 is lower triangular with column k
generated by f*g^k.  A "square" array (b, a) with a(0) = 1 has infinite
rows; only finite windows are ever materialized.  Exponential arrays are
the diagonal factorial conjugation of ordinary ones.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import comb, factorial

from .errors import InsufficientOrder, KindMismatch, NotPolynomial
from .matrix import RMatrix
from .series import Poly, Series, as_rational, binomial_poly, compose


class RiordanKind(enum.Enum):
    ORDINARY = "ordinary"
    SQUARE = "square"
    EXPONENTIAL = "exponential"


class RiordanArray:
    """Pair of series (f, g) under one of the three kind conventions."""

    __slots__ = ("kind", "f", "g")

    def __init__(self, kind: RiordanKind, f: Series, g: Series):
        if kind is RiordanKind.SQUARE:
            if g.coeff(0) != 1:
                raise KindMismatch("square array needs a(0) = 1")
        else:
            if g.coeff(0) != 0:
                raise KindMismatch("triangular array needs g(0) = 0")
            if g.order < 1 or g.coeff(1) == 0:
                raise KindMismatch("triangular array needs g'(0) != 0")
            if f.coeff(0) == 0:
                raise KindMismatch("triangular array needs f(0) != 0")
        self.kind = kind
        self.f = f
        self.g = g

    def __repr__(self):
        return f"RiordanArray({self.kind.value}, {self.f!r}, {self.g!r})"


def row_of_pair(f: Series, g: Series, n: int, cols: int) -> Poly:
    """Row n of the array with column gf f*g^k, for any series pair.

    Bypasses the RiordanArray kind checks; used for arrays whose g has
    higher valuation (still row-finite when g(0) = 0).
    """
    acc = f
    out = []
    for k in range(cols):
        out.append(acc.coeff(n))
        if k + 1 < cols:
            acc = acc * g
    return Poly(out)


def entry(A: RiordanArray, n: int, k: int) -> Fraction:
    """Matrix entry (n, k); exponential arrays carry the n!/k! scaling."""
    if n < 0 or k < 0:
        raise InsufficientOrder("indices must be nonnegative")
    acc = A.f
    for _ in range(k):
        acc = acc * A.g
    c = acc.coeff(n)
    if A.kind is RiordanKind.EXPONENTIAL:
        c = c * Fraction(factorial(n), factorial(k))
    return c


def row(A: RiordanArray, n: int, cols: int) -> Poly:
    p = row_of_pair(A.f, A.g, n, cols)
    if A.kind is RiordanKind.EXPONENTIAL:
        fn = factorial(n)
        p = Poly([p.coeff(k) * Fraction(fn, factorial(k)) for k in range(cols)])
    return p


def window(A: RiordanArray, rows: int, cols: int) -> RMatrix:
    return RMatrix([[row(A, n, cols).coeff(k) for k in range(cols)] for n in range(rows)])


def riordan_mul(A: RiordanArray, B: RiordanArray) -> RiordanArray:
    """(f, g)(b, a) = (f * b(g), a(g)); the left factor must be triangular."""
    pairs = {
        (RiordanKind.ORDINARY, RiordanKind.ORDINARY): RiordanKind.ORDINARY,
        (RiordanKind.ORDINARY, RiordanKind.SQUARE): RiordanKind.SQUARE,
        (RiordanKind.EXPONENTIAL, RiordanKind.EXPONENTIAL): RiordanKind.EXPONENTIAL,
    }
    result_kind = pairs.get((A.kind, B.kind))
    if result_kind is None:
        raise KindMismatch(f"cannot multiply {A.kind.value} by {B.kind.value}")
    f = A.f * compose(B.f, A.g)
    g = compose(B.g, A.g)
    return RiordanArray(result_kind, f, g)


def pascal_power(phi, size: int) -> RMatrix:
    """Finite window of the phi-th Pascal power: entries C(n,k) * phi^(n-k)."""
    phi = as_rational(phi)
    return RMatrix(
        [
            [comb(n, k) * phi ** (n - k) if k <= n else 0 for k in range(size)]
            for n in range(size)
        ]
    )


def decimate(b: Series, m: int, rows: int, cols: int) -> RMatrix:
    """Window of the m-decimated Toeplitz array: entry (n,k) = b[m*n + m-1 - k].

    Row n is row m*n + m - 1 of the ordinary Toeplitz array of b.
    """
    if m < 1:
        raise InsufficientOrder("decimation step must be >= 1")
    top = m * (rows - 1) + m - 1
    if b.order < top:
        raise InsufficientOrder(
            f"decimation needs coefficients up to {top}, series has order {b.order}"
        )
    out = []
    for n in range(rows):
        base = m * n + m - 1
        out.append([b.coeff(base - k) if base - k >= 0 else 0 for k in range(cols)])
    return RMatrix(out)


def toeplitz_window(coeffs: Poly | Series, rows: int, cols: int) -> RMatrix:
    """Window of the multiplication operator (c(x), x): entry (i,j) = c_{i-j}."""
    return RMatrix(
        [[coeffs.coeff(i - j) if i >= j else 0 for j in range(cols)] for i in range(rows)]
    )


def geometric_negative_power(m: int, order: int) -> Series:
    """(1-x)^(-m) truncated, m >= 0."""
    return Series([comb(m - 1 + j, j) for j in range(order + 1)])


def exp_conjugate(M: RMatrix) -> RMatrix:
    """Conjugate by the factorial diagonal: entry (n,k) scaled by n!/k!.

    Sends the window of an ordinary array (f, g) to the window of its
    exponential counterpart, e.g. the window of (e^x, x) to Pascal.
    """
    return RMatrix(
        [
            [M[n, k] * Fraction(factorial(n), factorial(k)) for k in range(M.cols)]
            for n in range(M.rows)
        ]
    )


def exp_conjugate_inv(M: RMatrix) -> RMatrix:
    """Inverse factorial conjugation: entry (n,k) scaled by k!/n!."""
    return RMatrix(
        [
            [M[n, k] * Fraction(factorial(k), factorial(n)) for k in range(M.cols)]
            for n in range(M.rows)
        ]
    )


def row_numerator(A: RiordanArray, n: int) -> Poly:
    """Numerator polynomial of row n of a square array (b, a).

    Row n of (b, a) has generating function N(x)/(1-x)^(n+1) with
    deg N <= n.  Computed by multiplying the row by (1-x)^(n+1) out to
    2n+2 columns and checking that everything above degree n vanishes.
    """
    if A.kind is not RiordanKind.SQUARE:
        raise KindMismatch("row numerator is defined for square arrays")
    cols = 2 * n + 3
    r = row(A, n, cols)
    prod = r * binomial_poly(n + 1, -1)
    for k in range(n + 1, cols):
        if prod.coeff(k) != 0:
            raise NotPolynomial(
                f"row {n} numerator check failed at coefficient {k}; "
                "is a(0) = 1 and the truncation order large enough?"
            )
    return Poly([prod.coeff(k) for k in range(n + 1)])
