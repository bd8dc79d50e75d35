"""Certificate-producing checks of the D(n) property."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .bigmath import SquareCertificate, square_certificate, triangular


@dataclass(frozen=True)
class PairResult:
    """Outcome for one pair: ``x * y + n_param`` with a certificate when square."""

    i: int
    j: int
    value: int
    certificate: Optional[SquareCertificate]

    @property
    def ok(self) -> bool:
        return self.certificate is not None


@dataclass(frozen=True)
class VerifyReport:
    n_param: int
    indices: tuple[int, ...]
    raw: bool
    pair_results: tuple[PairResult, ...] = field(default=())

    @property
    def verdict(self) -> bool:
        return all(p.ok for p in self.pair_results)

    @property
    def failures(self) -> list[PairResult]:
        return [p for p in self.pair_results if not p.ok]


def _validate(items: Sequence[int], n_param: int) -> None:
    if n_param == 0:
        raise ValueError("n must be nonzero")
    if len(items) < 2:
        raise ValueError("need at least two elements")
    if items[0] < 1:
        raise ValueError("elements must be positive")
    for x, y in zip(items, items[1:]):
        if not x < y:
            raise ValueError(f"elements must be strictly increasing, got {x} then {y}")


def _check(items: Sequence[int], values: Sequence[int], n_param: int, raw: bool) -> VerifyReport:
    results = []
    for (i, x), (j, y) in combinations(zip(items, values), 2):
        v = x * y + n_param
        results.append(PairResult(i, j, v, square_certificate(v)))
    return VerifyReport(n_param, tuple(items), raw, tuple(results))


def verify_tuple(indices: Sequence[int], n_param: int) -> VerifyReport:
    """Check that {T(i) : i in indices} is a D(n_param)-tuple."""
    _validate(indices, n_param)
    return _check(indices, [triangular(i) for i in indices], n_param, raw=False)


def verify_raw_tuple(elements: Sequence[int], n_param: int) -> VerifyReport:
    _validate(elements, n_param)
    return _check(elements, elements, n_param, raw=True)


def extension_candidate(a: int, b: int, m: int) -> Optional[int]:
    """Index c = 8r extending the D(m^2)-pair {T(a), T(b)} when the
    pair root r satisfies r = T(a) + m(2a + 1) = T(b) - m(2b + 1).

    Returns None when the pair is a D(m^2)-pair of another shape.
    """
    if not 1 <= a < b or m < 1:
        raise ValueError(f"need 1 <= a < b and m >= 1, got a={a}, b={b}, m={m}")
    ta, tb = triangular(a), triangular(b)
    cert = square_certificate(ta * tb + m * m)
    if cert is None:
        raise ValueError(f"T({a})*T({b}) + {m * m} is not a perfect square")
    r = cert.root
    if r != ta + m * (2 * a + 1) or r != tb - m * (2 * b + 1):
        return None
    c = 8 * r
    report = verify_tuple([a, b, c], m * m)
    if not report.verdict:
        raise AssertionError(f"extension ({a}, {b}, {c}) failed to verify: {report.failures}")
    return c
