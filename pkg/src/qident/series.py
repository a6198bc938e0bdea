"""Exact truncated power series in q, optionally with a marker variable a.

All coefficients are exact Python integers; there is no floating point
anywhere.  A series is truncated at a fixed order: a ``QSeries`` of order N
stores the coefficients of q^0 .. q^N, and a ``BivariateSeries`` stores the
(a_order+1) x (q_order+1) matrix of coefficients of a^m q^n.  Arithmetic on
series of different orders silently truncates to the minimum order, so
callers that care about a given order should construct all operands at that
order.

Values are immutable after construction and every operation is a pure
function, so series may be shared freely across threads and processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ._backend import bivar_mul, conv_trunc


def _as_coeff_tuple(coeffs: Iterable[int], order: int) -> tuple:
    out = list(coeffs)[: order + 1]
    if len(out) < order + 1:
        out.extend([0] * (order + 1 - len(out)))
    return tuple(int(c) for c in out)


@dataclass(frozen=True)
class QSeries:
    """A truncated formal power series in q with integer coefficients."""

    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], order: int | None = None) -> "QSeries":
        """Build a series, padding with zeros (or truncating) to `order`."""
        if order is None:
            order = len(coeffs) - 1 if len(coeffs) else 0
        if order < 0:
            raise ValueError("order must be non-negative")
        return cls(_as_coeff_tuple(coeffs, order))

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.from_coeffs([1], order)

    @classmethod
    def monomial(cls, coeff: int, exp: int, order: int) -> "QSeries":
        if exp < 0:
            raise ValueError("monomial exponent must be non-negative")
        c = [0] * (order + 1)
        if exp <= order:
            c[exp] = coeff
        return cls(tuple(c))

    def coefficient(self, n: int) -> int:
        """Coefficient of q^n; raises IndexError beyond the truncation order."""
        if n < 0:
            return 0
        return self.coeffs[n]

    def truncate(self, order: int) -> "QSeries":
        return QSeries.from_coeffs(self.coeffs, order)

    def __add__(self, other: "QSeries") -> "QSeries":
        order = min(self.order, other.order)
        return QSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(order + 1)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        order = min(self.order, other.order)
        return QSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(order + 1)))

    def __neg__(self) -> "QSeries":
        return QSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(tuple(c * other for c in self.coeffs))
        if isinstance(other, QSeries):
            order = min(self.order, other.order)
            return QSeries(tuple(conv_trunc(list(self.coeffs), list(other.coeffs), order)))
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, exp: int) -> "QSeries":
        """Multiply by q^exp (exp >= 0); terms past the order fall off."""
        if exp < 0:
            raise ValueError("shift exponent must be non-negative")
        n = self.order
        return QSeries(tuple([0] * min(exp, n + 1) + list(self.coeffs[: n + 1 - exp])))

    def invert_unit(self) -> "QSeries":
        """Multiplicative inverse up to the truncation order.

        The constant term must be +1 or -1 (a unit in the integers).
        """
        c = self.coeffs
        eps = c[0]
        if eps not in (1, -1):
            raise ValueError(f"constant term {eps} is not a unit in the integers")
        n = self.order
        t = [0] * (n + 1)
        t[0] = eps
        for d in range(1, n + 1):
            s = 0
            for i in range(1, d + 1):
                if c[i]:
                    s += c[i] * t[d - i]
            t[d] = -eps * s
        return QSeries(tuple(t))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 and n > 0 else str(abs(c))
            var = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            body = (mag + ("*" if mag and var else "") + var) or "1"
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        head = terms[0].lstrip("+ ").replace("- ", "-", 1) if terms[0].startswith("- ") else terms[0][2:]
        return " ".join([head] + terms[1:]) + f" + O(q^{self.order + 1})"


@dataclass(frozen=True)
class Monomial:
    """A signed monomial ±a^{a_exp} q^{q_exp}, used to describe Pochhammer factors."""

    a_exp: int
    q_exp: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.a_exp < 0:
            raise ValueError("a_exp must be non-negative")


@dataclass(frozen=True)
class BivariateSeries:
    """A truncated series in q whose coefficients are polynomials in a.

    ``coeffs[m][n]`` is the coefficient of a^m q^n.
    """

    coeffs: tuple  # (a_order+1) rows of (q_order+1) ints

    @property
    def a_order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def q_order(self) -> int:
        return len(self.coeffs[0]) - 1

    @classmethod
    def zero(cls, a_order: int, q_order: int) -> "BivariateSeries":
        row = (0,) * (q_order + 1)
        return cls(tuple(row for _ in range(a_order + 1)))

    @classmethod
    def one(cls, a_order: int, q_order: int) -> "BivariateSeries":
        return cls.from_dict({(0, 0): 1}, a_order, q_order)

    @classmethod
    def from_dict(cls, entries: dict, a_order: int, q_order: int) -> "BivariateSeries":
        rows = [[0] * (q_order + 1) for _ in range(a_order + 1)]
        for (m, n), c in entries.items():
            if m < 0 or n < 0:
                raise ValueError("exponents must be non-negative")
            if m <= a_order and n <= q_order:
                rows[m][n] += c
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_qseries(cls, s: QSeries, a_order: int) -> "BivariateSeries":
        rows = [tuple(s.coeffs)] + [(0,) * (s.order + 1)] * a_order
        return cls(tuple(rows))

    def coefficient(self, m: int, n: int) -> int:
        if m < 0 or n < 0:
            return 0
        return self.coeffs[m][n]

    def truncate(self, a_order: int, q_order: int) -> "BivariateSeries":
        rows = []
        for m in range(a_order + 1):
            row = self.coeffs[m] if m <= self.a_order else ()
            rows.append(_as_coeff_tuple(row, q_order))
        return BivariateSeries(tuple(rows))

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        a = min(self.a_order, other.a_order)
        q = min(self.q_order, other.q_order)
        return BivariateSeries(
            tuple(
                tuple(self.coeffs[m][n] + other.coeffs[m][n] for n in range(q + 1))
                for m in range(a + 1)
            )
        )

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        a = min(self.a_order, other.a_order)
        q = min(self.q_order, other.q_order)
        return BivariateSeries(
            tuple(
                tuple(self.coeffs[m][n] - other.coeffs[m][n] for n in range(q + 1))
                for m in range(a + 1)
            )
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return BivariateSeries(tuple(tuple(c * other for c in row) for row in self.coeffs))
        if isinstance(other, QSeries):
            return self.mul_qseries(other)
        if isinstance(other, BivariateSeries):
            a = min(self.a_order, other.a_order)
            q = min(self.q_order, other.q_order)
            rows = bivar_mul([list(r) for r in self.coeffs], [list(r) for r in other.coeffs], a, q)
            return BivariateSeries(tuple(tuple(r) for r in rows))
        return NotImplemented

    __rmul__ = __mul__

    def mul_qseries(self, s: QSeries) -> "BivariateSeries":
        """Multiply by a pure q-series without padding it to full a-order."""
        q = min(self.q_order, s.order)
        rows = bivar_mul([list(r) for r in self.coeffs], [list(s.coeffs)], self.a_order, q)
        return BivariateSeries(tuple(tuple(r) for r in rows))

    def mul_binomial(self, factor: Monomial) -> "BivariateSeries":
        """Multiply by 1 + sign * a^{a_exp} q^{q_exp} in a single shifted add."""
        if factor.q_exp < 0:
            raise ValueError("binomial q-exponent must be non-negative")
        rows = [list(r) for r in self.coeffs]
        for m in range(self.a_order, factor.a_exp - 1, -1):
            src = self.coeffs[m - factor.a_exp]
            row = rows[m]
            for n in range(self.q_order, factor.q_exp - 1, -1):
                c = src[n - factor.q_exp]
                if c:
                    row[n] += factor.sign * c
        return BivariateSeries(tuple(tuple(r) for r in rows))

    def shift(self, a_exp: int, q_exp: int) -> "BivariateSeries":
        """Multiply by a^{a_exp} q^{q_exp}; terms past either order fall off."""
        if a_exp < 0 or q_exp < 0:
            raise ValueError("shift exponents must be non-negative")
        rows = []
        for m in range(self.a_order + 1):
            if m < a_exp:
                rows.append((0,) * (self.q_order + 1))
            else:
                src = self.coeffs[m - a_exp]
                rows.append(tuple([0] * min(q_exp, self.q_order + 1) + list(src[: self.q_order + 1 - q_exp])))
        return BivariateSeries(tuple(rows))

    def to_qseries(self) -> QSeries:
        """Project to a QSeries; every a-degree above 0 must vanish."""
        for m in range(1, self.a_order + 1):
            if any(self.coeffs[m]):
                raise ValueError(f"series has a nonzero coefficient at a-degree {m}")
        return QSeries(self.coeffs[0])

    def set_a(self, value: int) -> QSeries:
        """Evaluate the marker variable a at an integer (e.g. a=1)."""
        n1 = self.q_order + 1
        out = [0] * n1
        for m, row in enumerate(self.coeffs):
            w = value**m
            for n in range(n1):
                if row[n]:
                    out[n] += w * row[n]
        return QSeries(tuple(out))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.coeffs)


def pochhammer_inf(factor: Monomial, step_q: int, q_order: int, a_order: int = 0) -> BivariateSeries:
    """The infinite product prod_{j>=0} (1 + sign * a^{a_exp} q^{q_exp + j*step_q}).

    Truncation is exact: factors whose q-exponent exceeds `q_order` are
    congruent to 1 at this order and are simply skipped.  Requires
    factor.q_exp >= 1 so that only finitely many factors matter.
    """
    if factor.q_exp < 1:
        raise ValueError("pochhammer factor must have q-exponent >= 1")
    if step_q < 1:
        raise ValueError("step_q must be positive")
    out = BivariateSeries.one(a_order, q_order)
    e = factor.q_exp
    while e <= q_order:
        out = out.mul_binomial(Monomial(factor.a_exp, e, factor.sign))
        e += step_q
    return out


def euler_product(q_order: int) -> QSeries:
    """(q;q)_inf truncated at q_order."""
    return pochhammer_inf(Monomial(0, 1, -1), 1, q_order).to_qseries()


def finite_pochhammer(q_order: int, t: int) -> QSeries:
    """(q;q)_t = prod_{m=1..t} (1 - q^m), truncated at q_order."""
    out = BivariateSeries.one(0, q_order)
    for m in range(1, t + 1):
        if m > q_order:
            break
        out = out.mul_binomial(Monomial(0, m, -1))
    return out.to_qseries()


def substitute_q_power(s: BivariateSeries, t: int) -> BivariateSeries:
    """Map q -> q^t; the output q-order is t times the input q-order."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    q_out = t * s.q_order
    rows = []
    for row in s.coeffs:
        new = [0] * (q_out + 1)
        for n, c in enumerate(row):
            new[t * n] = c
        rows.append(tuple(new))
    return BivariateSeries(tuple(rows))


def specialize_a(s: BivariateSeries, e: int, out_order: int | None = None) -> QSeries:
    """Map a -> q^e by exponent bookkeeping: a^m q^n contributes at q^{n+m*e}.

    `e` may be negative provided no nonzero term lands at a negative
    exponent; this keeps the i=0 specialization out of Laurent-series
    territory.  Terms landing beyond `out_order` (default: the input
    q-order) are dropped, consistent with truncation.
    """
    if out_order is None:
        out_order = s.q_order
    out = [0] * (out_order + 1)
    for m, row in enumerate(s.coeffs):
        off = m * e
        for n, c in enumerate(row):
            if c == 0:
                continue
            d = n + off
            if d < 0:
                raise ValueError(
                    f"term a^{m} q^{n} would land at negative exponent {d} under a -> q^{e}"
                )
            if d <= out_order:
                out[d] += c
    return QSeries(tuple(out))


def specialize(s: BivariateSeries, t: int, e: int, out_order: int | None = None) -> QSeries:
    """One-pass (a, q) -> (q^e, q^t): a^m q^n contributes at q^{t*n + m*e}.

    Agrees with substitute_q_power followed by specialize_a.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    if out_order is None:
        out_order = t * s.q_order
    out = [0] * (out_order + 1)
    for m, row in enumerate(s.coeffs):
        off = m * e
        for n, c in enumerate(row):
            if c == 0:
                continue
            d = t * n + off
            if d < 0:
                raise ValueError(
                    f"term a^{m} q^{n} would land at negative exponent {d}"
                )
            if d <= out_order:
                out[d] += c
    return QSeries(tuple(out))
