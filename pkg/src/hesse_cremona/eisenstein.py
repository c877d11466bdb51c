"""Exact arithmetic in Z[tau] and Q(tau), tau a primitive cube root of unity.

tau never gets a numeric value: every product is reduced with
tau**2 = -tau - 1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Union


class DivisionError(ArithmeticError):
    """The divisor does not divide the dividend in Z[tau]."""


class ZeroDivisor(ZeroDivisionError):
    pass


IntLike = Union[int, "EisensteinInt"]


class EisensteinInt:
    """The element a + b*tau of Z[tau]."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        self._a = int(a)
        self._b = int(b)

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    # the JSON field names
    m = a
    n = b

    @classmethod
    def coerce(cls, x: IntLike) -> EisensteinInt:
        if isinstance(x, EisensteinInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {x!r} to EisensteinInt")

    def __iter__(self):
        yield self._a
        yield self._b

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._b == 0 and self._a == other
        if isinstance(other, EisensteinInt):
            return self._a == other._a and self._b == other._b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return bool(self._a or self._b)

    def __repr__(self) -> str:
        return f"EisensteinInt({self._a}, {self._b})"

    def __str__(self) -> str:
        return format_ab(self._a, self._b)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self._a, -self._b)

    def __add__(self, other: IntLike) -> EisensteinInt:
        if isinstance(other, int):
            return EisensteinInt(self._a + other, self._b)
        if isinstance(other, EisensteinInt):
            return EisensteinInt(self._a + other._a, self._b + other._b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> EisensteinInt:
        if isinstance(other, (int, EisensteinInt)):
            return self + (-EisensteinInt.coerce(other))
        return NotImplemented

    def __rsub__(self, other: IntLike) -> EisensteinInt:
        return (-self) + other

    def __mul__(self, other: IntLike) -> EisensteinInt:
        if isinstance(other, int):
            return EisensteinInt(self._a * other, self._b * other)
        if isinstance(other, EisensteinInt):
            a1, b1, a2, b2 = self._a, self._b, other._a, other._b
            bb = b1 * b2
            return EisensteinInt(a1 * a2 - bb, a1 * b2 + a2 * b1 - bb)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> EisensteinInt:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> EisensteinInt:
        # a + b*tau**2 = (a - b) - b*tau
        return EisensteinInt(self._a - self._b, -self._b)

    def norm(self) -> int:
        return self._a * self._a - self._a * self._b + self._b * self._b

    def is_unit(self) -> bool:
        return self.norm() == 1

    def mod3_class(self) -> int:
        return (self._a + self._b) % 3

    def exact_div(self, other: IntLike) -> EisensteinInt:
        """Return q with q * other == self, or raise DivisionError."""
        other = EisensteinInt.coerce(other)
        nrm = other.norm()
        if nrm == 0:
            raise ZeroDivisor("division by zero in Z[tau]")
        num = self * other.conjugate()
        qa, ra = divmod(num._a, nrm)
        qb, rb = divmod(num._b, nrm)
        if ra or rb:
            raise DivisionError(f"{other} does not divide {self}")
        return EisensteinInt(qa, qb)

    def to_json(self) -> dict:
        return {"m": self._a, "n": self._b}

    @classmethod
    def from_json(cls, obj: dict) -> EisensteinInt:
        return cls(obj["m"], obj["n"])


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
TAU = EisensteinInt(0, 1)
TAU2 = EisensteinInt(-1, -1)


def add(x: IntLike, y: IntLike) -> EisensteinInt:
    return EisensteinInt.coerce(x) + y


def mul(x: IntLike, y: IntLike) -> EisensteinInt:
    return EisensteinInt.coerce(x) * y


def norm(x: IntLike) -> int:
    return EisensteinInt.coerce(x).norm()


def exact_div(x: IntLike, y: IntLike) -> EisensteinInt:
    return EisensteinInt.coerce(x).exact_div(y)


def mod3_class(x: IntLike) -> int:
    return EisensteinInt.coerce(x).mod3_class()


def _term(coef: int, sym: str) -> str:
    if coef == 1:
        return sym
    if coef == -1:
        return "-" + sym
    return f"{coef}*{sym}"


def format_ab(a, b, sym: str = "tau") -> str:
    """Render a + b*tau as e.g. ``-6-2*tau``, ``tau``, ``3``."""
    if b == 0:
        return str(a)
    t = _term(b, sym)
    if a == 0:
        return t
    return f"{a}{t}" if t.startswith("-") else f"{a}+{t}"


_TERM_RE = re.compile(r"([+-])?(\d+)?\*?(t)?")


def parse(text: str) -> EisensteinInt:
    """Parse the rendering produced by :func:`format_ab` (``t`` accepted for tau)."""
    s = text.replace(" ", "").replace("tau", "t")
    a = b = 0
    pos = 0
    while pos < len(s):
        match = _TERM_RE.match(s, pos)
        sign, coef, sym = match.groups()
        if match.end() == pos or not (coef or sym):
            raise ValueError(f"cannot parse {text!r}")
        val = int(coef) if coef else 1
        if sign == "-":
            val = -val
        if sym:
            b += val
        else:
            a += val
        pos = match.end()
    if not s:
        raise ValueError("empty Eisenstein integer")
    return EisensteinInt(a, b)


@total_ordering
class QTau:
    """An element (a + b*tau) of Q(tau) with Fraction components."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0) -> None:
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def coerce(cls, x) -> QTau:
        if isinstance(x, QTau):
            return x
        if isinstance(x, EisensteinInt):
            return cls(x.a, x.b)
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {x!r} to QTau")

    def __eq__(self, other: object) -> bool:
        try:
            o = QTau.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __lt__(self, other: QTau) -> bool:
        # arbitrary but total, used only for deterministic sorting
        o = QTau.coerce(other)
        return (self.a, self.b) < (o.a, o.b)

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __repr__(self) -> str:
        return f"QTau({self.a}, {self.b})"

    def __str__(self) -> str:
        return format_ab(self.a, self.b)

    def __neg__(self) -> QTau:
        return QTau(-self.a, -self.b)

    def __add__(self, other) -> QTau:
        o = QTau.coerce(other)
        return QTau(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other) -> QTau:
        return self + (-QTau.coerce(other))

    def __rsub__(self, other) -> QTau:
        return QTau.coerce(other) - self

    def __mul__(self, other) -> QTau:
        o = QTau.coerce(other)
        bb = self.b * o.b
        return QTau(self.a * o.a - bb, self.a * o.b + o.a * self.b - bb)

    __rmul__ = __mul__

    def conjugate(self) -> QTau:
        return QTau(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> QTau:
        n = self.norm()
        if n == 0:
            raise ZeroDivisor("inverse of zero in Q(tau)")
        c = self.conjugate()
        return QTau(c.a / n, c.b / n)

    def __truediv__(self, other) -> QTau:
        return self * QTau.coerce(other).inverse()

    def __rtruediv__(self, other) -> QTau:
        return QTau.coerce(other) * self.inverse()

    def denominator(self) -> int:
        d1, d2 = self.a.denominator, self.b.denominator
        return d1 * d2 // gcd(d1, d2)

    def to_eisenstein(self) -> EisensteinInt:
        if self.a.denominator != 1 or self.b.denominator != 1:
            raise ValueError(f"{self} is not integral")
        return EisensteinInt(int(self.a), int(self.b))
