"""The multinomial transform W_(n,m) mapping alpha~ of a to alpha~ of a^m.

W_(n,m) is simultaneously
  * the n x n window of the m-decimation of the Toeplitz array of
    ((1-x^m)/(1-x))^(n+1)  (rows of multinomial coefficients),
  * the conjugation U_n diag(m, m^2, ..., m^n) U_n^-1,
  * V_n^-1 T^t V_n with T the triangular array of ((1+x)^m - 1).
Columns sum to m^n and the matrix commutes with the reversal Itilde_n.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegreeTooHigh, OutOfRange
from .gep import eulerian_tilde, matrix_u, matrix_u_inv, matrix_v, matrix_v_inv
from .matrix import RMatrix
from .riordan import decimate, geometric_negative_power, toeplitz_window
from .series import Poly, Series, binomial_poly


class WMatrix:
    __slots__ = ("n", "m", "matrix")

    def __init__(self, n: int, m: int, matrix: RMatrix):
        self.n = n
        self.m = m
        self.matrix = matrix

    def __repr__(self):
        return f"WMatrix(n={self.n}, m={self.m})"


def _ones_power(m: int, n: int, order: int) -> Series:
    """((1-x^m)/(1-x))^(n+1) = (1 + x + ... + x^(m-1))^(n+1), zero padded."""
    block = Poly([1] * m)
    acc = Poly([1])
    for _ in range(n + 1):
        acc = acc * block
    return Series(acc.coeffs, order=order)


def w_matrix(n: int, m: int) -> WMatrix:
    """Build W_(n,m); the decimation and conjugation routes must agree."""
    if n < 1 or m < 1:
        raise OutOfRange("need n >= 1 and m >= 1")
    b = _ones_power(m, n, m * n + m - 1)
    by_decimation = decimate(b, m, n, n)
    scale = RMatrix.diagonal([Fraction(m) ** (p + 1) for p in range(n)])
    by_conjugation = matrix_u(n) * scale * matrix_u_inv(n)
    if by_decimation != by_conjugation:
        raise ArithmeticError("W construction routes disagree")
    return WMatrix(n, m, by_decimation)


def w_apply(W: WMatrix, alpha_tilde: Poly) -> Poly:
    """alpha~ of a^m from alpha~ of a."""
    if alpha_tilde.degree() >= W.n:
        raise DegreeTooHigh(f"polynomial degree must be < {W.n}")
    return Poly(W.matrix.apply(alpha_tilde.to_vector(W.n)))


def w_alt_form(n: int, m: int) -> RMatrix:
    """V_n^-1 . T^t . V_n with T the window of (((1+x)^m - 1)/x, (1+x)^m - 1)."""
    if n < 1 or m < 1:
        raise OutOfRange("need n >= 1 and m >= 1")
    a = binomial_poly(m, 1) - Poly([1])
    b = a.shift_down(1)
    rows = []
    for i in range(n):
        gf = b
        for _ in range(i):
            gf = gf * a
        rows.append([gf.coeff(j) for j in range(n)])
    # rows[i][j] = [x^j] b a^i is already the transpose of the array window
    middle = RMatrix(rows)
    return matrix_v_inv(n) * middle * matrix_v(n)


def w_identities(n: int, m: int, p: int) -> bool:
    """Multiplicativity, reversal commutation and the Eulerian eigenvector.

    W_(n,m) W_(n,p) = W_(n,mp);  W_(n,m) Itilde = Itilde W_(n,m);
    W_(n,m) A~_n = m^n A~_n.
    """
    wm = w_matrix(n, m).matrix
    wp = w_matrix(n, p).matrix
    if wm * wp != w_matrix(n, m * p).matrix:
        return False
    rev = RMatrix.anti_identity(n)
    if wm * rev != rev * wm:
        return False
    at = eulerian_tilde(n).to_vector(n)
    expected = tuple(Fraction(m) ** n * c for c in at)
    return wm.apply(at) == expected


def w_restriction(n: int, m: int, p: int) -> bool:
    """((1-x)^-p, x) W_(n,m) ((1-x)^p, x) I_{n-p} == W_(n-p, m).

    p = 0 degenerates to W_(n,m) == W_(n,m) and returns True.
    """
    if p == 0:
        return True
    if not (1 <= p < n):
        raise OutOfRange("need 0 <= p < n")
    k = n - p
    shrink = toeplitz_window(binomial_poly(p, -1), n, k)
    grow = toeplitz_window(geometric_negative_power(p, n), n, n)
    prod = grow * (w_matrix(n, m).matrix * shrink)
    if not prod.block(k, n, 0, k).is_zero():
        return False
    return prod.block(0, k, 0, k) == w_matrix(k, m).matrix
