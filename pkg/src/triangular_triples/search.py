"""Bounded exhaustive search for D(m^2)-triples of triangular numbers.

Pairs {T(a), T(b)} with T(a) T(b) + m^2 square form the edges of a graph on
1..bound; triples are its triangles. Rows of the smaller index are split
across worker processes and the results merged in sorted order, so the
report does not depend on the number of workers.
"""

from __future__ import annotations

import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .bigmath import SquareCertificate, square_certificate, triangular
from .construction import ConstructionParams, Provenance, TripleRecord, family_indices, iter_states
from .verify import verify_tuple

Pair = tuple[int, int, int]


def _pairs_for_rows(m: int, bound: int, rows: range) -> list[Pair]:
    n2 = m * m
    tri = [0] + [triangular(i) for i in range(1, bound + 1)]
    out = []
    for a in rows:
        ta = tri[a]
        for b in range(a + 1, bound + 1):
            cert = square_certificate(ta * tri[b] + n2)
            if cert is not None:
                out.append((a, b, cert.root))
    return out


def d_square_pairs(m: int, bound: int, jobs: int = 1) -> list[Pair]:
    """All (a, b, root) with 1 <= a < b <= bound and T(a) T(b) + m^2 = root^2."""
    if m < 1 or bound < 2 or jobs < 1:
        raise ValueError(f"need m >= 1, bound >= 2, jobs >= 1 (got {m}, {bound}, {jobs})")
    if jobs == 1:
        return _pairs_for_rows(m, bound, range(1, bound))
    # strided rows balance the triangular workload between workers
    chunks = [range(1 + i, bound, jobs) for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_pairs_for_rows, [m] * jobs, [bound] * jobs, chunks)
        pairs = [p for part in parts for p in part]
    pairs.sort()
    return pairs


def classify(triple: tuple[int, int, int], m: int) -> Provenance:
    """Tag a verified triple as constructed from its smallest index, or sporadic."""
    a, b, c = triple
    params = ConstructionParams(m, a)
    for state in iter_states(params, check=False):
        if state.n_k > b:
            break
        if (state.n_k, state.n_k1) == (b, c):
            return Provenance("constructed", k=state.k - 1, n=a, m=m)
    return Provenance("sporadic")


def second_element_remark_check(m: int, n: int, bound_k: int) -> bool:
    """True when (n, n+4m, 8 r1) is absent from the first bound_k + 1 triples
    constructed with N0 = n + 4m."""
    target = family_indices(ConstructionParams(m, n))
    shifted = ConstructionParams(m, n + 4 * m)
    for state in iter_states(shifted):
        if state.k > bound_k + 1:
            break
        if (shifted.n, state.n_k, state.n_k1) == target:
            return False
    return True


@dataclass
class SearchReport:
    m: int
    bound: int
    triples: list[TripleRecord]
    pairs_tested: int
    pairs_found: int
    triangles_found: int
    wall_time: float = field(default=0.0, compare=False)


def find_triples(m: int, bound: int, jobs: int = 1) -> SearchReport:
    if bound < 3:
        raise ValueError(f"bound must be >= 3, got {bound}")
    start = time.perf_counter()
    pairs = d_square_pairs(m, bound, jobs=jobs)
    roots = {(a, b): r for a, b, r in pairs}
    up: dict[int, set[int]] = defaultdict(set)
    for a, b, _ in pairs:
        up[a].add(b)

    n2 = m * m
    triples = []
    for a, b, _ in pairs:
        for c in sorted(up[a] & up.get(b, set())):
            report = verify_tuple([a, b, c], n2)
            if not report.verdict:
                raise AssertionError(f"triangle ({a}, {b}, {c}) failed re-verification")
            ta, tb, tc = triangular(a), triangular(b), triangular(c)
            certs = (
                SquareCertificate(ta * tb + n2, roots[a, b]),
                SquareCertificate(ta * tc + n2, roots[a, c]),
                SquareCertificate(tb * tc + n2, roots[b, c]),
            )
            triples.append(TripleRecord(n2, (a, b, c), certs, classify((a, b, c), m)))
    triples.sort(key=lambda t: t.indices)
    return SearchReport(
        m=m,
        bound=bound,
        triples=triples,
        pairs_tested=bound * (bound - 1) // 2,
        pairs_found=len(pairs),
        triangles_found=len(triples),
        wall_time=time.perf_counter() - start,
    )


def lookup(report: SearchReport, indices: tuple[int, int, int]) -> Optional[TripleRecord]:
    for t in report.triples:
        if t.indices == indices:
            return t
    return None
