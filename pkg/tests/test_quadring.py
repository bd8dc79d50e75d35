import pytest
import sympy
from hypothesis import given, strategies as st

from triangular_triples.construction import ConstructionParams, closed_form_constants
from triangular_triples.quadring import InexactError, QuadElem

D = 2


def elems(d=D):
    return st.builds(
        lambda a, b, e: QuadElem(a, b, e, d),
        st.integers(-10**6, 10**6),
        st.integers(-10**6, 10**6),
        st.integers(0, 6),
    )


def to_sympy(x):
    return (sympy.Integer(x.a) + x.b * sympy.sqrt(x.d)) / sympy.Integer(2) ** x.e


def consts(m, n):
    return closed_form_constants(ConstructionParams(m, n))


def test_canonical_form_reduces_denominator():
    x = QuadElem(8, 4, 3, D)
    assert (x.a, x.b, x.e) == (2, 1, 1)
    assert QuadElem(0, 0, 5, D).e == 0
    assert QuadElem(3, 0, 1, D) == QuadElem(6, 0, 2, D)


def test_radicand_must_not_be_square():
    with pytest.raises(ValueError):
        QuadElem(1, 1, 0, 4)


def test_add_examples():
    one = QuadElem.integer(1, D)
    assert one + QuadElem.surd(D) == QuadElem(1, 1, 0, D)
    x = QuadElem(5, -3, 2, D)
    assert x + QuadElem.integer(0, D) == x


@pytest.mark.parametrize("m, n", [(1, 1), (3, 7), (10, 25)])
def test_lambdas_sum_to_m(m, n):
    c = consts(m, n)
    assert (c.lambda1 + c.lambda2).to_integer() == m


def test_radicand_mismatch():
    with pytest.raises(ValueError):
        QuadElem(1, 1, 0, 2) + QuadElem(1, 1, 0, 3)
    with pytest.raises(ValueError):
        QuadElem(1, 1, 0, 2) * QuadElem(1, 1, 0, 3)


@pytest.mark.parametrize("n", [1, 2, 5, 100, 10**9])
def test_alpha_beta_unit(n):
    c = consts(1, n)
    assert c.alpha * c.beta == QuadElem.integer(1, c.d)
    assert c.alpha.conj() == c.beta
    assert c.alpha * 1 == c.alpha


def test_surd_squared():
    w = QuadElem.surd(6)
    assert w * w == QuadElem.integer(6, 6)


def test_pow_examples():
    c = consts(1, 1)
    assert c.alpha ** 0 == QuadElem.integer(1, 2)
    assert c.alpha ** 2 == QuadElem(17, 12, 0, 2)
    for k in (1, 5, 40):
        assert (c.beta ** k) * (c.alpha ** k) == QuadElem.integer(1, 2)


def test_pow_rejects_negative():
    with pytest.raises(ValueError):
        QuadElem(1, 1, 0, 2) ** -1


def test_to_integer():
    assert QuadElem(8, 0, 1, 2).to_integer() == 4
    with pytest.raises(InexactError):
        QuadElem(3, 0, 1, 2).to_integer()
    with pytest.raises(InexactError):
        QuadElem(0, 1, 0, 2).to_integer()
    c = consts(1, 1)
    assert (c.lambda1 * c.alpha + c.lambda2 * c.beta).to_integer() == 4


@given(elems(), elems(), elems())
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x - x == QuadElem.integer(0, D)


@given(elems(), elems())
def test_conj_is_homomorphism(x, y):
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    assert x.conj().conj() == x


@given(elems())
def test_trace_and_norm_rational(x):
    assert x.trace().is_rational
    assert x.norm().is_rational


@given(elems(), elems())
def test_arithmetic_matches_sympy(x, y):
    assert sympy.simplify(to_sympy(x * y) - to_sympy(x) * to_sympy(y)) == 0
    assert sympy.simplify(to_sympy(x + y) - to_sympy(x) - to_sympy(y)) == 0


@given(elems(), elems())
def test_exact_division_inverts_multiplication(x, y):
    if y != QuadElem.integer(0, D):
        assert (x * y) / y == x


def test_inexact_division_raises():
    with pytest.raises(InexactError):
        QuadElem.integer(1, 2) / QuadElem.integer(3, 2)
    with pytest.raises(ZeroDivisionError):
        QuadElem.integer(1, 2) / QuadElem.integer(0, 2)


def test_division_by_power_of_two_extends_denominator():
    assert QuadElem.integer(1, 2) / 4 == QuadElem(1, 0, 2, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 17, 250])
def test_alpha_identities(n):
    c = consts(1, n)
    d = n * (n + 1)
    w = QuadElem.surd(d)
    assert c.alpha + c.beta == QuadElem.integer(2 * (2 * n + 1), d)
    assert c.alpha - c.beta == 4 * w
    assert c.alpha - 2 * w == QuadElem.integer(2 * n + 1, d)
    # alpha = (sqrt(N0+1) + sqrt(N0))^2 numerically
    val = to_sympy(c.alpha)
    assert sympy.simplify(val - (sympy.sqrt(n + 1) + sympy.sqrt(n)) ** 2) == 0
