"""Exact scalars and exact rank computation.

Crystallographic root systems live in the integers (coordinates in the
simple-root basis are integral), so plain ``int`` is used there.  The
non-crystallographic types H3 and H4 need the golden ratio; they use
:class:`QTau`, elements ``a + b*tau`` of Q(tau) with ``tau**2 = tau + 1``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class QTau:
    """An element ``a + b*tau`` of the real quadratic field Q(tau)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def coerce(cls, x) -> "QTau":
        if isinstance(x, QTau):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {x!r} to QTau")

    def __add__(self, other):
        try:
            o = QTau.coerce(other)
        except TypeError:
            return NotImplemented
        return QTau(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QTau(-self.a, -self.b)

    def __sub__(self, other):
        try:
            o = QTau.coerce(other)
        except TypeError:
            return NotImplemented
        return QTau(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return QTau.coerce(other) - self

    def __mul__(self, other):
        try:
            o = QTau.coerce(other)
        except TypeError:
            return NotImplemented
        # (a + b t)(c + d t) = ac + (ad + bc) t + bd (t + 1)
        bd = self.b * o.b
        return QTau(self.a * o.a + bd, self.a * o.b + self.b * o.a + bd)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        # product with the Galois conjugate a + b(1 - tau)
        return self.a * self.a + self.a * self.b - self.b * self.b

    def conjugate(self) -> "QTau":
        return QTau(self.a + self.b, -self.b)

    def inverse(self) -> "QTau":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QTau division by zero")
        c = self.conjugate()
        return QTau(c.a / n, c.b / n)

    def __truediv__(self, other):
        try:
            o = QTau.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QTau.coerce(other) * self.inverse()

    def sign(self) -> int:
        """Exact sign of the real number ``a + b*(1 + sqrt5)/2``."""
        # 2(a + b tau) = p + q sqrt5 with p = 2a + b, q = b
        p = 2 * self.a + self.b
        q = self.b
        sp = (p > 0) - (p < 0)
        sq = (q > 0) - (q < 0)
        if sp == sq or sq == 0:
            return sp
        if sp == 0:
            return sq
        # opposite signs: compare p^2 against 5 q^2
        d = p * p - 5 * q * q
        return sp if d > 0 else sq

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        try:
            o = QTau.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __repr__(self):
        return f"QTau({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}t"


TAU = QTau(0, 1)


def sign(x) -> int:
    if isinstance(x, QTau):
        return x.sign()
    return (x > 0) - (x < 0)


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact Bareiss step")
        return q
    return a / b


def rank(rows) -> int:
    """Rank of a matrix given as a sequence of rows over an exact ring.

    One-step fraction-free (Bareiss) elimination with row pivoting and
    zero-column skipping.  Over the integers every division is exact;
    over fields it is an ordinary division by a nonzero element.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, n_rows):
            f = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, n_cols):
                row_i[j] = _exact_div(p * row_i[j] - f * row_r[j], prev)
            row_i[c] = 0
        prev = p
        r += 1
    return r
