"""Exact truncated formal power series and polynomials over the rationals.

Coefficients are always fractions.Fraction; no floating point enters any
computation.  A Series carries an explicit truncation order and binary
operations truncate to the smaller of the two operand orders, so precision
is never silently promoted.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import (
    ConstantTermNotOne,
    InsufficientOrder,
    NonzeroConstantTerm,
    NotInvertibleForComposition,
    ZeroConstantTerm,
)

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rational(value) -> Fraction:
    """Coerce int/str/Fraction to Fraction; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {value!r}")


class Series:
    """Dense truncated power series: coefficients 0..order inclusive."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        cs = [as_rational(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                cs.extend([_ZERO] * (order + 1 - len(cs)))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order):
        return cls([], order=order)

    @classmethod
    def one(cls, order):
        return cls([1], order=order)

    @classmethod
    def x(cls, order):
        return cls([0, 1], order=order)

    @classmethod
    def constant(cls, value, order):
        return cls([value], order=order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if k < 0:
            return _ZERO
        if k > self.order:
            raise InsufficientOrder(
                f"coefficient {k} requested from a series truncated at order {self.order}"
            )
        return self.coeffs[k]

    __getitem__ = coeff

    def truncate(self, order: int) -> "Series":
        """Shrink to a smaller order.  Growing would invent coefficients."""
        if order > self.order:
            raise InsufficientOrder(
                f"cannot extend order {self.order} series to order {order}"
            )
        return Series(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; order+1 for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return self.order + 1

    def __eq__(self, other):
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"Series([{shown}{tail}]; order={self.order})"

    def __add__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            return Series([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])
        c = as_rational(other)
        return Series((self.coeffs[0] + c,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Series) else -as_rational(other))

    def __rsub__(self, other):
        return (-self) + as_rational(other)

    def __mul__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            out = [_ZERO] * (n + 1)
            for i, a in enumerate(self.coeffs[: n + 1]):
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b != 0:
                        out[i + j] += a * b
            return Series(out)
        c = as_rational(other)
        return Series([c * v for v in self.coeffs])

    __rmul__ = __mul__


def mul(a: Series, b: Series) -> Series:
    return a * b


def compose(a: Series, g: Series) -> Series:
    """a(g(x)), requires g(0) = 0.  Horner from the highest coefficient down."""
    if g.coeffs[0] != 0:
        raise NonzeroConstantTerm("composition needs inner constant term 0")
    n = min(a.order, g.order)
    g = g.truncate(n)
    acc = Series.constant(a.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        acc = acc * g + a.coeffs[k]
    return acc


def reciprocal(a: Series) -> Series:
    """Multiplicative inverse; requires a(0) != 0."""
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroConstantTerm("reciprocal needs nonzero constant term")
    inv0 = 1 / a0
    out = [inv0]
    for n in range(1, a.order + 1):
        s = _ZERO
        for k in range(1, n + 1):
            if a.coeffs[k] != 0:
                s += a.coeffs[k] * out[n - k]
        out.append(-inv0 * s)
    return Series(out)


def log(a: Series) -> Series:
    """Formal logarithm; requires a(0) = 1."""
    if a.coeffs[0] != 1:
        raise ConstantTermNotOne("log needs constant term 1")
    out = [_ZERO]
    # from l'*a = a':  n*l_n = n*a_n - sum_{j<n} j*l_j*a_{n-j}
    for n in range(1, a.order + 1):
        s = n * a.coeffs[n]
        for j in range(1, n):
            if out[j] != 0 and a.coeffs[n - j] != 0:
                s -= j * out[j] * a.coeffs[n - j]
        out.append(s / n)
    return Series(out)


def exp(a: Series) -> Series:
    """Formal exponential; requires a(0) = 0."""
    if a.coeffs[0] != 0:
        raise NonzeroConstantTerm("exp needs constant term 0")
    out = [_ONE]
    # from e' = a'*e:  n*e_n = sum_{k<=n} k*a_k*e_{n-k}
    for n in range(1, a.order + 1):
        s = _ZERO
        for k in range(1, n + 1):
            if a.coeffs[k] != 0:
                s += k * a.coeffs[k] * out[n - k]
        out.append(s / n)
    return Series(out)


def power(a: Series, phi) -> Series:
    """a^phi for rational phi.

    Integer phi works for any invertible (or, if phi >= 0, any) series via
    repeated multiplication; fractional phi requires a(0) = 1 and routes
    through exp(phi*log a).
    """
    phi = as_rational(phi)
    if phi.denominator == 1:
        e = int(phi)
        if e < 0:
            return power(reciprocal(a), -e)
        result = Series.one(a.order)
        base = a
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result
    if a.coeffs[0] != 1:
        raise ConstantTermNotOne("fractional power needs constant term 1")
    return exp(log(a) * phi)


def reversion(g: Series) -> Series:
    """Compositional inverse h with h(g(x)) = x = g(h(x)).

    Requires g(0) = 0 and g'(0) != 0; solved as a triangular system against
    the powers of g.
    """
    if g.coeffs[0] != 0 or g.order < 1 or g.coeffs[1] == 0:
        raise NotInvertibleForComposition(
            "compositional inverse needs g(0) = 0 and g'(0) != 0"
        )
    n = g.order
    g1 = g.coeffs[1]
    powers = [None, g]  # powers[k] = g^k
    for k in range(2, n + 1):
        powers.append(powers[-1] * g)
    h = [_ZERO, 1 / g1]
    for m in range(2, n + 1):
        s = _ZERO
        for k in range(1, m):
            if h[k] != 0:
                s += h[k] * powers[k].coeffs[m]
        h.append(-s / g1**m)
    return Series(h)


def derivative(a: Series) -> Series:
    if a.order == 0:
        return Series.zero(0)
    return Series([k * a.coeffs[k] for k in range(1, a.order + 1)])


class Poly:
    """Exact polynomial; trailing zeros are permitted and ignored by ==."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(as_rational(c) for c in coeffs)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i] != 0:
                return i
        return -1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    __getitem__ = coeff

    def _stripped(self):
        return self.coeffs[: self.degree() + 1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self._stripped() == other._stripped()

    def __hash__(self):
        return hash(self._stripped())

    def __repr__(self):
        return f"Poly({list(self._stripped())})"

    def __add__(self, other):
        if isinstance(other, Poly):
            n = max(len(self.coeffs), len(other.coeffs))
            return Poly([self.coeff(k) + other.coeff(k) for k in range(n)])
        return self + Poly([other])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-(other if isinstance(other, Poly) else Poly([other])))

    def __mul__(self, other):
        if isinstance(other, Poly):
            da, db = self.degree(), other.degree()
            if da < 0 or db < 0:
                return Poly()
            out = [_ZERO] * (da + db + 1)
            for i in range(da + 1):
                a = self.coeffs[i]
                if a == 0:
                    continue
                for j in range(db + 1):
                    b = other.coeffs[j]
                    if b != 0:
                        out[i + j] += a * b
            return Poly(out)
        c = as_rational(other)
        return Poly([c * v for v in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, point) -> Fraction:
        point = as_rational(point)
        acc = _ZERO
        for c in reversed(self._stripped()):
            acc = acc * point + c
        return acc

    def shifted(self, s) -> "Poly":
        """The polynomial p(x+s), expanded by binomials."""
        s = as_rational(s)
        d = self.degree()
        out = [_ZERO] * (d + 1)
        for j in range(d + 1):
            c = self.coeffs[j]
            if c == 0:
                continue
            sp = _ONE
            for i in range(j, -1, -1):
                out[i] += c * comb(j, j - i) * sp
                sp *= s
        return Poly(out)

    def shift_up(self, k=1) -> "Poly":
        """Multiply by x^k."""
        return Poly((0,) * k + self.coeffs)

    def shift_down(self, k=1) -> "Poly":
        """Divide by x^k; the low k coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError("polynomial is not divisible by x^%d" % k)
        return Poly(self.coeffs[k:])

    def reversed_to(self, n: int) -> "Poly":
        """Coefficient reversal within degree window 0..n: x^n * p(1/x)."""
        if self.degree() > n:
            raise ValueError("degree exceeds reversal window")
        return Poly([self.coeff(n - i) for i in range(n + 1)])

    def to_series(self, order: int) -> Series:
        if self.degree() > order:
            raise InsufficientOrder("polynomial degree exceeds requested order")
        return Series(self.coeffs, order=order)

    def to_vector(self, length: int):
        from .errors import DegreeTooHigh

        if self.degree() >= length:
            raise DegreeTooHigh(
                f"degree {self.degree()} polynomial does not fit in {length} slots"
            )
        return tuple(self.coeff(k) for k in range(length))


def poly_from_vector(vec) -> Poly:
    return Poly(vec)


def binomial_poly(k: int, sign: int = 1) -> Poly:
    """(1 + sign*x)^k as a polynomial, k >= 0."""
    return Poly([comb(k, j) * (sign**j) for j in range(k + 1)])


def geometric(order: int, ratio=1) -> Series:
    """1/(1 - ratio*x) truncated."""
    r = as_rational(ratio)
    out, acc = [], _ONE
    for _ in range(order + 1):
        out.append(acc)
        acc *= r
    return Series(out)
