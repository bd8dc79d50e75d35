"""Exit criteria. Every check is exact equality (zero tolerance)."""

import io

import pytest

from triangular_triples.bigmath import tri_shift_identity, triangular
from triangular_triples.cli import main
from triangular_triples.construction import (
    ConstructionParams,
    closed_form_N,
    closed_form_s,
    closed_form_t,
    family_indices,
    identity_check_s,
    identity_check_t,
    iter_triples,
    recurrence_table,
    short_gap_family_indices,
)
from triangular_triples.quadring import InexactError
from triangular_triples.search import classify, find_triples, lookup, second_element_remark_check
from triangular_triples.verify import verify_raw_tuple, verify_tuple

from oracles import naive_triples

acceptance = pytest.mark.acceptance

GRID_1 = [ConstructionParams(m, n) for m in range(1, 11) for n in range(1, 26)]
GRID_2 = [ConstructionParams(m, n) for m in range(1, 6) for n in range(1, 11)]
K_MAX = 50


@acceptance("1", "construction triples k<=30 verify over (m,n) in [1,10]x[1,25]")
def test_c1_construction_correctness():
    bad = []
    for p in GRID_1:
        for k, rec in zip(range(31), iter_triples(p)):
            a, b, c = rec.indices
            mults = [cert.root * cert.root == triangular(x) * triangular(y) + p.m**2
                     for (x, y), cert in zip(((a, b), (a, c), (b, c)), rec.certificates)]
            if not (all(mults) and verify_tuple([a, b, c], p.m**2).verdict):
                bad.append((p, k))
    assert bad == []


def _closed_form_mismatches(func, ranges_key):
    bad = []
    for p in GRID_2:
        tab = recurrence_table(p, K_MAX)
        seq, ks = {"s": (tab.s, range(-1, K_MAX + 1)),
                   "N": (tab.N, range(0, K_MAX + 3)),
                   "t": (tab.t, range(1, K_MAX + 1))}[ranges_key]
        for k in ks:
            try:
                value = func(p, k)
            except InexactError as exc:
                bad.append((p.m, p.n, k, f"inexact: {exc}"))
                continue
            if value != seq[k]:
                bad.append((p.m, p.n, k, value, seq[k]))
    return bad


@acceptance("2.s", "closed form s_k == recurrence for k in [-1, 50]")
def test_c2_closed_form_s():
    assert _closed_form_mismatches(closed_form_s, "s") == []


@acceptance("2.N", "closed form N_k == recurrence for k in [0, 52]")
def test_c2_closed_form_N():
    # The formula gives 0 at k = 0 for every (m, n); agreement holds from k = 1.
    bad = _closed_form_mismatches(closed_form_N, "N")
    assert not bad, (
        f"{len(bad)} mismatches at k in {sorted({b[2] for b in bad})}; "
        f"first (m, n, k, closed form, recurrence): {bad[0]}"
    )


@acceptance("2.t", "closed form t_k == recurrence for k in [1, 50]")
def test_c2_closed_form_t():
    assert _closed_form_mismatches(closed_form_t, "t") == []


@acceptance("3", "reduction identities for s and t hold for k in [1, 50]")
def test_c3_identities():
    bad = []
    for p in GRID_2:
        tab = recurrence_table(p, K_MAX)
        for k in range(1, K_MAX + 1):
            if not (identity_check_s(p, k, tab) and identity_check_t(p, k, tab)):
                bad.append((p, k))
    assert bad == []


@acceptance("4", "T(8x+y) expansion on [0,200]^2 and 8T(n)+1 = (2n+1)^2 on [1,10^4]")
def test_c4_helper_identities():
    for x in range(201):
        for y in range(201):
            if 8 * x + y >= 1:
                assert tri_shift_identity(x, y) == triangular(8 * x + y)
    for n in range(1, 10**4 + 1):
        assert 8 * triangular(n) + 1 == (2 * n + 1) ** 2


@acceptance("5", "sporadic triples rediscovered and classified; constructed ones recognized")
def test_c5_remark_reproduction():
    r1 = find_triples(1, 160)
    for triple in [(1, 15, 90), (2, 15, 153)]:
        rec = lookup(r1, triple)
        assert rec is not None and rec.provenance.kind == "sporadic"
    rec = lookup(find_triples(3, 370), (1, 63, 370))
    assert rec is not None and rec.provenance.kind == "sporadic"
    assert classify((1, 5, 32), 1).kind == "constructed"
    assert classify((1, 32, 189), 1).kind == "constructed"
    assert lookup(r1, (1, 5, 32)).provenance.kind == "constructed"


@acceptance("6", "search equals naive cubic oracle for m in {1,2,3}, B = 60")
@pytest.mark.parametrize("m", [1, 2, 3])
def test_c6_oracle_equivalence(m):
    assert [t.indices for t in find_triples(m, 60).triples] == naive_triples(m, 60)


@acceptance("7", "remark on the second element holds for (m,n) in [1,5]x[1,10], bound_k = 10")
def test_c7_second_element():
    assert all(second_element_remark_check(m, n, 10) for m in range(1, 6) for n in range(1, 11))


@acceptance("8", "Fermat quadruple verifies; (2,3,4) fails with value 19")
def test_c8_verifier_cross_checks():
    assert verify_raw_tuple([1, 3, 8, 120], 1).verdict
    report = verify_tuple([2, 3, 4], 1)
    assert not report.verdict
    assert report.failures[0].value == 19


@acceptance("9", "search output byte-identical for jobs 1, 4, 16 (m=1, B=200)")
def test_c9_determinism():
    outputs = []
    for jobs in (1, 4, 16):
        out = io.StringIO()
        assert main(["search", "--m", "1", "--bound", "200", "--classify",
                     "--jobs", str(jobs)], out=out) == 0
        outputs.append(out.getvalue().encode())
    assert outputs[0] == outputs[1] == outputs[2]


@acceptance("10", "middle index n+m fails at (n,m)=(2,1); n+4m family verifies on grid 1")
def test_c10_family_discrepancy():
    a, b, c = short_gap_family_indices(ConstructionParams(1, 2))
    report = verify_tuple([a, b, c], 1)
    assert not report.verdict
    assert report.failures[0].value == 19
    for p in GRID_1:
        assert verify_tuple(list(family_indices(p)), p.m**2).verdict
