"""Exact arithmetic in (1/2^e) Z[sqrt(d)] for a fixed non-square radicand d.

Elements are stored as ``(a + b*sqrt(d)) / 2**e`` and kept in canonical form
(``e`` minimal), so structural equality is value equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union


class InexactError(ArithmeticError):
    """A value expected to be exact (integer, ring element) is not."""


def _two_adic(q: int) -> tuple[int, int]:
    """Split ``q != 0`` as ``(j, odd)`` with ``q == 2**j * odd``."""
    j = (q & -q).bit_length() - 1
    return j, q >> j


@dataclass(frozen=True)
class QuadElem:
    a: int
    b: int
    e: int
    d: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"radicand must be positive, got {self.d}")
        r = math.isqrt(self.d)
        if r * r == self.d:
            raise ValueError(f"radicand {self.d} is a perfect square")
        if self.e < 0:
            raise ValueError("denominator exponent must be >= 0")
        a, b, e = self.a, self.b, self.e
        if a == 0 and b == 0:
            e = 0
        else:
            while e > 0 and a % 2 == 0 and b % 2 == 0:
                a //= 2
                b //= 2
                e -= 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "e", e)

    # constructors

    @classmethod
    def integer(cls, value: int, d: int) -> "QuadElem":
        return cls(value, 0, 0, d)

    @classmethod
    def surd(cls, d: int) -> "QuadElem":
        """sqrt(d) itself."""
        return cls(0, 1, 0, d)

    # helpers

    def _coerce(self, other: Union["QuadElem", int]) -> "QuadElem":
        if isinstance(other, int):
            return QuadElem(other, 0, 0, self.d)
        if not isinstance(other, QuadElem):
            return NotImplemented
        if other.d != self.d:
            raise ValueError(f"radicand mismatch: {self.d} vs {other.d}")
        return other

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    # arithmetic

    def __add__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        e = max(self.e, y.e)
        sx, sy = e - self.e, e - y.e
        return QuadElem((self.a << sx) + (y.a << sy), (self.b << sx) + (y.b << sy), e, self.d)

    __radd__ = __add__

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.a, -self.b, self.e, self.d)

    def __sub__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        return self + (-y)

    def __rsub__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        return y + (-self)

    def __mul__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        a = self.a * y.a + self.b * y.b * self.d
        b = self.a * y.b + self.b * y.a
        return QuadElem(a, b, self.e + y.e, self.d)

    __rmul__ = __mul__

    def conj(self) -> "QuadElem":
        return QuadElem(self.a, -self.b, self.e, self.d)

    def norm(self) -> "QuadElem":
        """x * conj(x); always rational."""
        return self * self.conj()

    def trace(self) -> "QuadElem":
        """x + conj(x); always rational."""
        return self + self.conj()

    def __pow__(self, k: int) -> "QuadElem":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = QuadElem(1, 0, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        """Exact division; raises InexactError if the quotient leaves the ring."""
        z = self._coerce(other)
        if z is NotImplemented:
            return z
        if z.a == 0 and z.b == 0:
            raise ZeroDivisionError("division by zero ring element")
        # x / z = x * conj(z) * 2^g / (c^2 - f^2 d) for z = (c + f*sqrt(d)) / 2^g
        q = z.a * z.a - z.b * z.b * self.d
        y = self * QuadElem(z.a, -z.b, 0, self.d)
        j, q_odd = _two_adic(q)
        if y.a % q_odd or y.b % q_odd:
            raise InexactError(f"({y.a} + {y.b}*sqrt({self.d})) not divisible by {q_odd}")
        a, b = y.a // q_odd, y.b // q_odd
        e = y.e + j - z.e
        if e < 0:
            a, b, e = a << -e, b << -e, 0
        return QuadElem(a, b, e, self.d)

    def to_integer(self) -> int:
        if self.b != 0:
            raise InexactError(f"nonzero surd part in {self}")
        if self.e != 0:
            raise InexactError(f"{self.a}/2^{self.e} is not an integer")
        return self.a

    def __str__(self) -> str:
        body = f"{self.a} + {self.b}*sqrt({self.d})"
        return f"({body})/2^{self.e}" if self.e else f"({body})"
