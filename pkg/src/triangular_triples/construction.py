"""Recurrence engine producing D(m^2)-triples {T(N0), T(N_{k+1}), T(N_{k+2})}.

Starting from the pair {T(n), T(n+4m)} with root r1, the engine iterates

    N_{k+2} = 8 s_k + N_k
    s_{k+1} = 2 s_k (2 N0 + 1) - s_{k-1}
    t_{k+1} = 2 s_k (2 N_{k+1} + 1) + t_k

with seeds s_{-1} = m, s_0 = r1. The same sequences also have closed forms
over Z[sqrt(N0 (N0 + 1))], evaluated exactly in :mod:`.quadring`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .bigmath import SquareCertificate, triangular
from .quadring import QuadElem


class InvariantViolation(AssertionError):
    """A certificate or growth condition that must hold by theorem failed."""


@dataclass(frozen=True)
class ConstructionParams:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m and n must be positive integers, got m={self.m}, n={self.n}")

    @property
    def n_param(self) -> int:
        return self.m * self.m


@dataclass(frozen=True)
class Provenance:
    kind: str  # "constructed", "family" or "sporadic"
    k: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None

    def __str__(self) -> str:
        if self.kind != "constructed":
            return self.kind
        parts = [f"{name}={val}" for name, val in (("n", self.n), ("m", self.m), ("k", self.k))
                 if val is not None]
        return f"constructed({','.join(parts)})"


@dataclass(frozen=True)
class TripleRecord:
    n_param: int
    indices: tuple[int, int, int]
    certificates: tuple[SquareCertificate, SquareCertificate, SquareCertificate]
    provenance: Provenance


@dataclass(frozen=True)
class ConstructionState:
    """Window (N_k, N_{k+1}, s_{k-1}, s_k, t_k) of the recurrence at step k >= 1."""

    params: ConstructionParams
    k: int
    n_k: int
    n_k1: int
    s_prev: int
    s_k: int
    t_k: int


def _certify(x: int, y: int, n_param: int, root: int, label: str) -> SquareCertificate:
    value = triangular(x) * triangular(y) + n_param
    if root < 0 or root * root != value:
        raise InvariantViolation(
            f"{label}: T({x})*T({y}) + {n_param} = {value} but claimed root is {root}"
        )
    return SquareCertificate(value, root)


def check_state(state: ConstructionState) -> None:
    """Re-verify all certificates of a window by exact multiplication."""
    p = state.params
    n2 = p.n_param
    _certify(p.n, state.n_k, n2, state.s_prev, f"k={state.k} s_(k-1)")
    _certify(p.n, state.n_k1, n2, state.s_k, f"k={state.k} s_k")
    _certify(state.n_k, state.n_k1, n2, state.t_k, f"k={state.k} t_k")
    if not state.n_k1 > state.n_k:
        raise InvariantViolation(f"k={state.k}: N not increasing ({state.n_k} -> {state.n_k1})")


def pair_root(params: ConstructionParams) -> int:
    """Root r1 of T(n) T(n+4m) + m^2."""
    n, m = params.n, params.m
    return (n * n + (4 * m + 1) * n + 2 * m) // 2


def initial_extension(params: ConstructionParams) -> tuple[int, int, int]:
    """Return (N2, s1, t1) extending the pair {T(n), T(n+4m)} by T(8 r1)."""
    n, m = params.n, params.m
    r1 = pair_root(params)
    n2 = 8 * r1
    s1 = 2 * r1 * (2 * n + 1) - m
    t1 = 2 * r1 * (2 * (n + 4 * m) + 1) + m
    _certify(n, n + 4 * m, params.n_param, r1, "pair root r1")
    _certify(n, n2, params.n_param, s1, "s1")
    _certify(n + 4 * m, n2, params.n_param, t1, "t1")
    return n2, s1, t1


def initial_state(params: ConstructionParams) -> ConstructionState:
    n2, s1, t1 = initial_extension(params)
    return ConstructionState(params, 1, params.n + 4 * params.m, n2, pair_root(params), s1, t1)


def step(state: ConstructionState, check: bool = True) -> ConstructionState:
    p = state.params
    n_next = 8 * state.s_k + state.n_k
    s_next = 2 * state.s_k * (2 * p.n + 1) - state.s_prev
    t_next = 2 * state.s_k * (2 * state.n_k1 + 1) + state.t_k
    new = ConstructionState(p, state.k + 1, state.n_k1, n_next, state.s_k, s_next, t_next)
    if check:
        check_state(new)
    return new


def iter_states(params: ConstructionParams, check: bool = True) -> Iterator[ConstructionState]:
    """Yield the windows for k = 1, 2, ... without end."""
    state = initial_state(params)
    if check:
        check_state(state)
    while True:
        yield state
        state = step(state, check=check)


def _record(state: ConstructionState) -> TripleRecord:
    p = state.params
    n2 = p.n_param
    a, b, c = p.n, state.n_k, state.n_k1
    certs = (
        SquareCertificate(triangular(a) * triangular(b) + n2, state.s_prev),
        SquareCertificate(triangular(a) * triangular(c) + n2, state.s_k),
        SquareCertificate(triangular(b) * triangular(c) + n2, state.t_k),
    )
    return TripleRecord(n2, (a, b, c), certs, Provenance("constructed", k=state.k - 1))


def iter_triples(params: ConstructionParams, check: bool = True) -> Iterator[TripleRecord]:
    """Yield triple_at(params, k) for k = 0, 1, 2, ..."""
    for state in iter_states(params, check=check):
        yield _record(state)


def triple_at(params: ConstructionParams, k: int, check: bool = True) -> TripleRecord:
    """Triple {T(N0), T(N_{k+1}), T(N_{k+2})}; k = 0 is the seed triple."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    for state in iter_states(params, check=check):
        if state.k == k + 1:
            return _record(state)
    raise AssertionError("unreachable")


def family_indices(params: ConstructionParams) -> tuple[int, int, int]:
    n, m = params.n, params.m
    return n, n + 4 * m, 4 * (n * n + (4 * m + 1) * n + 2 * m)


def short_gap_family_indices(params: ConstructionParams) -> tuple[int, int, int]:
    """The family with middle index n + m instead of n + 4m.

    This variant is not a D(m^2)-triple in general (it already fails at
    n=2, m=1); it is kept so the discrepancy can be checked directly.
    """
    n, m = params.n, params.m
    return n, n + m, 4 * (n * n + (4 * m + 1) * n + 2 * m)


def family_triple(params: ConstructionParams) -> TripleRecord:
    a, b, c = family_indices(params)
    r1 = pair_root(params)
    _, s1, t1 = initial_extension(params)
    n2 = params.n_param
    certs = (
        _certify(a, b, n2, r1, "family ab"),
        _certify(a, c, n2, s1, "family ac"),
        _certify(b, c, n2, t1, "family bc"),
    )
    return TripleRecord(n2, (a, b, c), certs, Provenance("family"))


# recurrence tables

@dataclass
class RecurrenceTable:
    """Recurrence values s_k (k >= -1), N_k (k >= 0) and t_k (k >= 1)."""

    s: dict[int, int]
    N: dict[int, int]
    t: dict[int, int]


def recurrence_table(params: ConstructionParams, k_max: int, check: bool = True) -> RecurrenceTable:
    """Tabulate s_k, t_k for k <= k_max and N_k for k <= k_max + 2."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    s = {-1: params.m, 0: pair_root(params)}
    N = {0: params.n}
    t: dict[int, int] = {}
    for state in iter_states(params, check=check):
        k = state.k
        N[k] = state.n_k
        N[k + 1] = state.n_k1
        s[k] = state.s_k
        t[k] = state.t_k
        if k == k_max + 1:
            break
    # the loop ran one window past k_max to reach N_{k_max+2}
    del s[k_max + 1], t[k_max + 1]
    return RecurrenceTable(s, N, t)


# closed forms

@dataclass(frozen=True)
class ClosedFormConstants:
    alpha: QuadElem
    beta: QuadElem
    lambda1: QuadElem
    lambda2: QuadElem
    m: int

    @property
    def d(self) -> int:
        return self.alpha.d


def closed_form_constants(params: ConstructionParams) -> ClosedFormConstants:
    """alpha = 2N0+1 + 2 sqrt(D), lambda1 = m/2 + sqrt(D)/8 with D = N0 (N0+1)."""
    n0, m = params.n, params.m
    d = n0 * (n0 + 1)
    alpha = QuadElem(2 * n0 + 1, 2, 0, d)
    beta = alpha.conj()
    lambda1 = QuadElem(4 * m, 1, 3, d)
    lambda2 = lambda1.conj()
    return ClosedFormConstants(alpha, beta, lambda1, lambda2, m)


def closed_form_s(params: ConstructionParams, k: int) -> int:
    if k < -1:
        raise ValueError(f"k must be >= -1, got {k}")
    c = closed_form_constants(params)
    value = c.lambda1 * c.alpha ** (k + 1) + c.lambda2 * c.beta ** (k + 1)
    return value.to_integer()


def closed_form_N(params: ConstructionParams, k: int) -> int:
    """8 alpha / (alpha^2 - 1) * (lambda1 alpha^k - lambda2 beta^k) - 1/2.

    Agrees with the recurrence for k >= 1. At k = 0 it evaluates to 0, the
    value N0 would need for N2 = 8 s0 + N0 to hold, not to n.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    c = closed_form_constants(params)
    half = QuadElem(1, 0, 1, c.d)
    bracket = c.lambda1 * c.alpha ** k - c.lambda2 * c.beta ** k
    value = (8 * c.alpha * bracket) / (c.alpha ** 2 - 1) - half
    return value.to_integer()


def closed_form_t(params: ConstructionParams, k: int) -> int:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    c = closed_form_constants(params)
    a, b, l1, l2 = c.alpha, c.beta, c.lambda1, c.lambda2
    l1sq, l2sq = l1 * l1, l2 * l2
    numerator = (
        32 * a ** 3 * l1sq * a ** (2 * k)
        + 32 * a * l2sq * b ** (2 * k)
        - 32 * a * (a ** 2 * l1sq + l2sq)
    )
    value = numerator / (a ** 2 - 1) ** 2 + c.m
    return value.to_integer()


# reduction identities

def identity_check_s(params: ConstructionParams, k: int, table: Optional[RecurrenceTable] = None) -> bool:
    """(2 N_k + 1) T(N0) == s_k - s_{k-1} (2 N0 + 1)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    tab = table if table is not None and k in table.t else recurrence_table(params, k)
    n0 = params.n
    lhs = (2 * tab.N[k] + 1) * triangular(n0)
    rhs = tab.s[k] - tab.s[k - 1] * (2 * n0 + 1)
    return lhs == rhs


def identity_check_t(params: ConstructionParams, k: int, table: Optional[RecurrenceTable] = None) -> bool:
    """T(N_{k+1}) (2 N_k + 1) == s_k + t_k (2 N_{k+1} + 1)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    tab = table if table is not None and k in table.t else recurrence_table(params, k)
    lhs = triangular(tab.N[k + 1]) * (2 * tab.N[k] + 1)
    rhs = tab.s[k] + tab.t[k] * (2 * tab.N[k + 1] + 1)
    return lhs == rhs

