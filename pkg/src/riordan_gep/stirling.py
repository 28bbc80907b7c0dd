"""Stirling numbers, partition enumeration and partial Bell sums.

The Bell sums here use the plain multiplicity normalization
    B_{n,m}(a) = sum m!/(m_1! ... m_n!) * a_1^{m_1} ... a_n^{m_n}
over additive partitions (and the analogous B~ over multiplicative
decompositions into factors >= 2); there is no a_i/i! weighting.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import OutOfRange
from .series import as_rational

# growable triangles: _s2[n][k], _s1[n][k] (signed)
_s2 = [[1]]
_s1 = [[1]]


def _grow(table, second_kind, n):
    while len(table) <= n:
        r = len(table)
        prev = table[-1]
        row = [0] * (r + 1)
        for k in range(1, r + 1):
            left = prev[k - 1]
            mid = prev[k] if k < r else 0
            if second_kind:
                row[k] = k * mid + left
            else:
                row[k] = left - (r - 1) * mid
        table.append(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind (set partitions into k blocks)."""
    if n < 0 or k < 0 or k > n:
        raise OutOfRange(f"stirling2 needs 0 <= k <= n, got ({n}, {k})")
    _grow(_s2, True, n)
    return _s2[n][k]


def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling number of the first kind: sum_k s(n,k) x^k = falling factorial."""
    if n < 0 or k < 0 or k > n:
        raise OutOfRange(f"stirling1 needs 0 <= k <= n, got ({n}, {k})")
    _grow(_s1, False, n)
    return _s1[n][k]


class StirlingTable:
    """Memoized triangle of either kind, immutable after construction."""

    FIRST = "first"
    SECOND = "second"

    def __init__(self, kind: str, max_n: int):
        if kind not in (self.FIRST, self.SECOND):
            raise ValueError("kind must be 'first' or 'second'")
        self.kind = kind
        self.max_n = max_n
        fn = stirling2 if kind == self.SECOND else stirling1_signed
        self.values = tuple(tuple(fn(n, k) for k in range(n + 1)) for n in range(max_n + 1))

    def value(self, n: int, k: int) -> int:
        if n < 0 or n > self.max_n or k < 0 or k > n:
            raise OutOfRange(f"({n}, {k}) outside table of max_n={self.max_n}")
        return self.values[n][k]


def additive_partitions(n: int, m: int):
    """All partitions of n into exactly m parts >= 1, as {part: multiplicity}."""
    out = []

    def rec(remaining, parts_left, max_part, acc):
        if parts_left == 0:
            if remaining == 0:
                out.append(dict(acc))
            return
        for p in range(min(max_part, remaining - parts_left + 1), 0, -1):
            acc[p] = acc.get(p, 0) + 1
            rec(remaining - p, parts_left - 1, p, acc)
            if acc[p] == 1:
                del acc[p]
            else:
                acc[p] -= 1

    if n >= 1 and m >= 1:
        rec(n, m, n, {})
    return out


def mult_decompositions(n: int, m: int):
    """All decompositions of n into exactly m factors >= 2, as {factor: multiplicity}."""
    if n < 2 or m < 1:
        return []
    out = []

    def rec(remaining, parts_left, max_factor, acc):
        if parts_left == 0:
            if remaining == 1:
                out.append(dict(acc))
            return
        f = min(max_factor, remaining)
        while f >= 2:
            if remaining % f == 0:
                acc[f] = acc.get(f, 0) + 1
                rec(remaining // f, parts_left - 1, f, acc)
                if acc[f] == 1:
                    del acc[f]
                else:
                    acc[f] -= 1
            f -= 1

    rec(n, m, n, {})
    return out


def _bell_sum(partitions, a, offset):
    total = Fraction(0)
    for multi in partitions:
        m = sum(multi.values())
        coeff = factorial(m)
        term = Fraction(1)
        for part, mult in multi.items():
            coeff //= factorial(mult)
            term *= a[part - offset] ** mult
        total += coeff * term
    return total


def bell_partial(n: int, m: int, a) -> Fraction:
    """Partial Bell sum over additive partitions of n into m parts.

    `a` lists the values a_1..a_n, so a[0] is the index-1 entry.
    """
    if not (1 <= m <= n):
        raise OutOfRange(f"bell_partial needs 1 <= m <= n, got ({n}, {m})")
    if len(a) < n:
        raise OutOfRange(f"need at least {n} coefficients, got {len(a)}")
    a = [as_rational(v) for v in a]
    return _bell_sum(additive_partitions(n, m), a, 1)


def bell_partial_mult(n: int, m: int, a) -> Fraction:
    """Bell sum over decompositions of n into m factors >= 2; 0 if there are none.

    `a` lists the values a_2..a_n, so a[0] is the index-2 entry.
    """
    if n < 2 or m < 1:
        raise OutOfRange(f"bell_partial_mult needs n >= 2, m >= 1, got ({n}, {m})")
    if len(a) < n - 1:
        raise OutOfRange(f"need the {n - 1} coefficients a_2..a_{n}, got {len(a)}")
    a = [as_rational(v) for v in a]
    return _bell_sum(mult_decompositions(n, m), a, 2)
