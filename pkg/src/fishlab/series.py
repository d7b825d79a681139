"""Truncated univariate power series over exact rationals.

Coefficients are fractions.Fraction; all arithmetic is exact modulo
x^(order+1).  No floating point anywhere.
"""

from fractions import Fraction


class TruncSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [Fraction(c) for c in coeffs[: order + 1]]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        return cls([Fraction(c)], order)

    @classmethod
    def x(cls, order: int) -> "TruncSeries":
        return cls([0, 1], order)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)}, order={self.order})"

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            if other.order != self.order:
                raise ValueError("order mismatch")
            return other
        return TruncSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return TruncSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power; use reciprocal")
        result = TruncSeries.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def reciprocal(self) -> "TruncSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("constant term is zero")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / c0
        for m in range(1, n + 1):
            out[m] = -sum(self.coeffs[k] * out[m - k] for k in range(1, m + 1)) / c0
        return TruncSeries(out, n)


def _p_step(p: TruncSeries, d: int, q: Fraction, x: TruncSeries) -> TruncSeries:
    # d >= 1: the marked step contributes U' P (D P)^(d-1), whose image
    # is q x^(d+1) P^d; checked against brute-force factor counts
    if d == 0:
        return 1 + x * p * p + q * (x ** 2) * p * p
    return 1 + x * p * p + q * (x ** (d + 1)) * p ** d


def solve_P(d: int, q_value, order: int) -> TruncSeries:
    """Unique fixed point with constant term 1 of the marked-path equation.

    Iteration from the constant series 1 gains at least one correct
    coefficient per pass; the result is checked by substitution.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    q = Fraction(q_value)
    x = TruncSeries.x(order)
    p = TruncSeries.constant(1, order)
    for _ in range(order + 1):
        p = _p_step(p, d, q, x)
    if p != _p_step(p, d, q, x):
        raise ArithmeticError("fixed-point iteration did not converge")
    return p


def series_Q(d: int, q_value, order: int) -> TruncSeries:
    """Generating series for Dyck paths with marked DDU^(d+1) factors.

    The coefficient of x^n in series_Q(d, q-1, N) is the sum of
    q^(number of factors) over Dyck paths of semilength n.
    """
    p = solve_P(d, q_value, order)
    x = TruncSeries.x(order)
    if d == 0:
        return (1 - x * p).reciprocal()
    return (1 - x * (1 - x * p).reciprocal()).reciprocal()
