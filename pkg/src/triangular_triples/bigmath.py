"""Exact integer helpers: triangular numbers, square roots, square witnesses."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

# Moduli for the quadratic-residue pre-filter. A square must be a residue
# modulo each of them; roughly 99% of non-squares are rejected before isqrt.
_QR_MODULI = (64, 63, 65, 11)
_QR_TABLES = {q: frozenset((i * i) % q for i in range(q)) for q in _QR_MODULI}


@dataclass(frozen=True)
class SquareCertificate:
    """Witness ``root`` with ``root * root == value``."""

    value: int
    root: int

    def __post_init__(self) -> None:
        if self.root < 0 or self.root * self.root != self.value:
            raise ValueError(f"{self.root}^2 != {self.value}")


def triangular(n: int) -> int:
    if n < 1:
        raise ValueError(f"triangular index must be >= 1, got {n}")
    return n * (n + 1) // 2


def isqrt(x: int) -> int:
    """Floor square root, exact for any size of ``x``."""
    if x < 0:
        raise ValueError(f"isqrt of negative number {x}")
    return math.isqrt(x)


def might_be_square(x: int) -> bool:
    if x < 0:
        return False
    return all(x % q in table for q, table in _QR_TABLES.items())


def square_certificate(x: int) -> Optional[SquareCertificate]:
    if not might_be_square(x):
        return None
    r = math.isqrt(x)
    if r * r != x:
        return None
    return SquareCertificate(x, r)


def tri_index_of(x: int) -> Optional[int]:
    """Return ``n`` with ``triangular(n) == x``, or None if ``x`` is not triangular."""
    if x < 1:
        raise ValueError(f"expected a positive integer, got {x}")
    cert = square_certificate(8 * x + 1)
    if cert is None:
        return None
    # 8x+1 is odd, so any square root of it is odd too
    return (cert.root - 1) // 2


def tri_shift_identity(x: int, y: int) -> int:
    """Evaluate T(8x + y) through the expansion 32x^2 + 4x(2y + 1) + T(y).

    ``T(0)`` is taken as 0 so that ``y = 0`` is allowed.
    """
    if x < 0 or y < 0 or 8 * x + y < 1:
        raise ValueError(f"index 8*{x}+{y} must be positive with x, y >= 0")
    t_y = y * (y + 1) // 2
    return 32 * x * x + 4 * x * (2 * y + 1) + t_y
