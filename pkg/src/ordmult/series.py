"""Truncated formal power series over exact rationals.

A :class:`TruncatedSeries` stores the coefficients ``a_0, ..., a_N`` of a
power series in one formal variable ``t``. ``N`` is the *order*: coefficients
beyond it are unknown rather than zero, so every binary operation returns a
result whose order is the smaller of the two operand orders.

    >>> t = TruncatedSeries.variable(3)
    >>> (1 / (1 - t)).coeffs
    (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))

Plain ``int`` and ``Fraction`` operands act as exact constants of unbounded
order. Floats are refused; use :func:`eval_float` at the boundary instead.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import mpmath

__all__ = [
    "TruncatedSeries",
    "add",
    "sub",
    "mul",
    "div",
    "log",
    "exp",
    "pow_rational",
    "compose",
    "revert",
    "eval_float",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


class TruncatedSeries:
    """Power series ``sum a_n t^n`` known exactly up to ``t^order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        cs = [_as_fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = cs[: order + 1]
        cs.extend([_ZERO] * (order + 1 - len(cs)))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        """The series ``t`` (order must be at least 1 to be useful)."""
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def polynomial(cls, coeffs: Sequence, order: int) -> "TruncatedSeries":
        """A polynomial viewed as a series truncated at ``order``."""
        return cls(coeffs, order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{terms}], order={self.order})"

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(
                f"cannot extend a series of order {self.order} to {order}"
            )
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, ``None`` if all vanish."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([_as_fraction(other)], self.order)

    # ring operations

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            try:
                c = _as_fraction(other)
            except TypeError:
                return NotImplemented
            return TruncatedSeries([c * a for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [_ZERO] * (n + 1)
        b = other.coeffs
        for i in range(n + 1):
            ai = self.coeffs[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            try:
                c = _as_fraction(other)
            except TypeError:
                return NotImplemented
            if not c:
                raise ZeroDivisionError("division of a series by zero")
            return TruncatedSeries([a / c for a in self.coeffs], self.order)
        return div(self, other)

    def __rtruediv__(self, other):
        return div(self._coerce(other), self)

    def __pow__(self, z):
        if isinstance(z, int) and z >= 0:
            result = TruncatedSeries([1], self.order)
            base = self
            while z:
                if z & 1:
                    result = result * base
                z >>= 1
                if z:
                    base = base * base
            return result
        return pow_rational(self, z)

    # calculus

    def deriv(self) -> "TruncatedSeries":
        """Formal derivative; the order drops by one."""
        if self.order == 0:
            raise ValueError("derivative of an order-0 series is unknown")
        return TruncatedSeries(
            [n * self.coeffs[n] for n in range(1, self.order + 1)], self.order - 1
        )

    def integ(self) -> "TruncatedSeries":
        """Formal antiderivative vanishing at 0; the order rises by one."""
        return TruncatedSeries(
            [_ZERO] + [c / (n + 1) for n, c in enumerate(self.coeffs)],
            self.order + 1,
        )

    def shift_down(self) -> "TruncatedSeries":
        """Divide by ``t``; requires a zero constant term."""
        if self.coeffs[0]:
            raise ValueError("series has a nonzero constant term")
        if self.order == 0:
            raise ValueError("nothing left after dividing by t")
        return TruncatedSeries(self.coeffs[1:], self.order - 1)

    def __call__(self, g):
        if isinstance(g, TruncatedSeries):
            return compose(self, g)
        return polyval(self.coeffs, _as_fraction(g))

    # convenience aliases
    def exp(self):
        return exp(self)

    def log(self):
        return log(self)

    def compose(self, g):
        return compose(self, g)

    def revert(self):
        return revert(self)


def polyval(coeffs: Sequence, x):
    """Horner evaluation of a coefficient list (constant term first)."""
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a - b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Series quotient ``a / b``; ``b`` must have a nonzero constant term."""
    b0 = b.coeffs[0]
    if not b0:
        raise ZeroDivisionError("divisor series has zero constant term")
    n = min(a.order, b.order)
    bs = b.coeffs
    support = [k for k in range(1, n + 1) if bs[k]]
    out = [_ZERO] * (n + 1)
    for m in range(n + 1):
        acc = a.coeffs[m]
        for k in support:
            if k > m:
                break
            acc -= bs[k] * out[m - k]
        out[m] = acc / b0
    return TruncatedSeries(out, n)


def log(a: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term 1."""
    if a.coeffs[0] != 1:
        raise ValueError("log requires constant term 1")
    if a.order == 0:
        return TruncatedSeries([0], 0)
    # log a = integral of a'/a; order is restored by the integration
    return (a.deriv() / a.truncate(a.order - 1)).integ()


def exp(a: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with constant term 0."""
    if a.coeffs[0]:
        raise ValueError("exp requires constant term 0")
    n = a.order
    ka = [k * a.coeffs[k] for k in range(n + 1)]
    support = [k for k in range(1, n + 1) if ka[k]]
    b = [_ONE] + [_ZERO] * n
    for m in range(1, n + 1):
        acc = _ZERO
        for k in support:
            if k > m:
                break
            acc += ka[k] * b[m - k]
        b[m] = acc / m
    return TruncatedSeries(b, n)


def pow_rational(a: TruncatedSeries, z) -> TruncatedSeries:
    """``a**z`` for rational ``z``, defined as ``exp(z log a)``.

    Uses the coefficient recursion that follows from ``a b' = z a' b``, which
    costs one pass per nonzero coefficient of ``a``; polynomial bases are
    therefore cheap even at high order.
    """
    if a.coeffs[0] != 1:
        raise ValueError("pow_rational requires constant term 1")
    z = _as_fraction(z)
    n = a.order
    support = [k for k in range(1, n + 1) if a.coeffs[k]]
    b = [_ONE] + [_ZERO] * n
    for m in range(1, n + 1):
        acc = _ZERO
        for k in support:
            if k > m:
                break
            acc += (z * k - (m - k)) * a.coeffs[k] * b[m - k]
        b[m] = acc / m
    return TruncatedSeries(b, n)


def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``f(g(t))`` by Horner's scheme; ``g`` must have zero constant term."""
    if g.coeffs[0]:
        raise ValueError("inner series must have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    acc = TruncatedSeries([f.coeffs[n]], n)
    for k in range(n - 1, -1, -1):
        acc = acc * g + f.coeffs[k]
    return acc


def revert(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse ``g`` with ``f(g(t)) = t = g(f(t))``.

    Coefficients come from Lagrange inversion,
    ``[t^n] g = (1/n) [u^(n-1)] (u / f(u))^n``.
    """
    if f.coeffs[0]:
        raise ValueError("revert requires zero constant term")
    if f.order < 1 or not f.coeffs[1]:
        raise ValueError("revert requires a nonzero linear coefficient")
    n = f.order
    h = 1 / f.shift_down()  # u / f(u), order n-1
    out = [_ZERO] * (n + 1)
    hp = TruncatedSeries([1], n - 1)
    for m in range(1, n + 1):
        hp = hp * h
        out[m] = hp.coeffs[m - 1] / m
    return TruncatedSeries(out, n)


def eval_float(f: TruncatedSeries, t0, dps: int = 50):
    """Evaluate the partial sum of ``f`` at ``t0`` in ``dps``-digit floats.

    Returns ``(value, last_term)`` where ``last_term`` is the magnitude of
    the highest-order term, a rough proxy for the truncation error.
    """
    with mpmath.workdps(dps):
        x = mpmath.mpf(t0) if not isinstance(t0, Fraction) else (
            mpmath.mpf(t0.numerator) / t0.denominator
        )
        acc = mpmath.mpf(0)
        last = mpmath.mpf(0)
        power = mpmath.mpf(1)
        for c in f.coeffs:
            term = (mpmath.mpf(c.numerator) / c.denominator) * power
            acc += term
            last = abs(term)
            power *= x
        return +acc, +last
