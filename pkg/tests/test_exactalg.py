import pytest
from hypothesis import given, settings, strategies as st

from enhcone.exactalg import (
    ONE, T, ZERO, IntPolynomial, PolyMatrix, RationalFunction, ZeroPivotError,
    ldl_decompose, poly_gcd,
)

coeffs = st.lists(st.integers(-20, 20), max_size=6)
polys = coeffs.map(IntPolynomial)
nonzero = polys.filter(bool)


def test_basic_arithmetic():
    assert (T + 1) * (T - 1) == IntPolynomial([-1, 0, 1])
    assert IntPolynomial([1, 3, 4, 1])(2) == 31
    assert ZERO.degree == -1
    assert IntPolynomial([0, 0, 0]) == ZERO


def test_substitute_and_halve():
    p = IntPolynomial([1, 2, 3])
    assert p.substitute_power(2) == IntPolynomial([1, 0, 2, 0, 3])
    assert p.substitute_power(2).halve_degrees() == p
    with pytest.raises(ArithmeticError):
        p.halve_degrees()


def test_exact_division_errors():
    with pytest.raises(ArithmeticError):
        (T + 2).exact_div(T + 1)
    with pytest.raises(ZeroDivisionError):
        T.exact_div(ZERO)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(ONE, ZERO)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, polys, st.integers(-5, 5))
def test_evaluation_is_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(nonzero, nonzero)
def test_exact_division_roundtrip(a, b):
    assert (a * b).exact_div(b) == a


@given(nonzero, nonzero, nonzero)
def test_gcd_contains_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert g.divides(a * c) and g.divides(b * c)
    assert c.primitive().divides(g) or (-c).primitive().divides(g)


@given(nonzero, nonzero, nonzero)
def test_normalization_is_canonical(a, b, c):
    r1 = RationalFunction(a, b)
    r2 = RationalFunction(a * c, b * c)
    assert r1 == r2
    assert (r1.num, r1.den) == (r2.num, r2.den)
    assert r1.den.leading > 0


@given(nonzero)
def test_self_quotient_is_one(p):
    assert RationalFunction(p, p) == RationalFunction(ONE)


@given(nonzero, nonzero, nonzero, nonzero)
def test_field_operations(a, b, c, d):
    x, y = RationalFunction(a, b), RationalFunction(c, d)
    assert (x + y) - y == x
    assert (x * y) / y == x
    assert x * (1 / x) == RationalFunction(ONE)


def test_ldl_identity_and_scalar():
    I = PolyMatrix.identity(["a", "b", "c"])
    L, D = ldl_decompose(I)
    assert L == I and D == I
    M = PolyMatrix(["x"], [[IntPolynomial([1, 2, 1])]], symmetric=True)
    L, D = ldl_decompose(M)
    assert L["x", "x"] == 1 and D["x", "x"] == IntPolynomial([1, 2, 1])


def _reconstruct(L, D):
    return L @ D @ L.transpose()


@settings(max_examples=40, deadline=None)
@given(st.lists(nonzero, min_size=6, max_size=6))
def test_ldl_reconstructs_random_symmetric(entries):
    a, b, c, d, e, f = entries
    labels = [0, 1, 2]
    M = PolyMatrix(labels, [[a, b, c], [b, d, e], [c, e, f]], symmetric=True)
    try:
        L, D = ldl_decompose(M)
    except ZeroPivotError:
        return
    assert (_reconstruct(L, D) - M).is_zero()
    for i in range(3):
        assert L.rows[i][i] == 1
        for j in range(i + 1, 3):
            assert not L.rows[i][j]
            assert not D.rows[i][j] and not D.rows[j][i]


def test_ldl_respects_order():
    M = PolyMatrix(["p", "q"], [[T, ONE], [ONE, T * T]], symmetric=True)
    L, D = ldl_decompose(M, ["q", "p"])
    assert L.labels == ("q", "p")
    assert (_reconstruct(L, D) - M.reorder(["q", "p"])).is_zero()


def test_ldl_zero_pivot():
    M = PolyMatrix([0, 1], [[ZERO, ONE], [ONE, ZERO]], symmetric=True)
    with pytest.raises(ZeroPivotError):
        ldl_decompose(M)


def test_ldl_rejects_asymmetric():
    M = PolyMatrix([0, 1], [[ONE, T], [ONE, ONE]])
    with pytest.raises(ValueError):
        ldl_decompose(M)


def test_polymatrix_labels_unique():
    with pytest.raises(ValueError):
        PolyMatrix(["a", "a"])
