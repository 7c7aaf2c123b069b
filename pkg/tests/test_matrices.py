import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eulerpascal.matrices import (
    FamilyKind,
    MatrixFamily,
    SingularMatrixError,
    TriMatrix,
    apply_to_vector,
    build,
    identity,
    invert,
    multiply,
)
from eulerpascal.poly import RatPoly
from eulerpascal.sequences import PolyKind, substituted_polys

from conftest import nonzero_fractions, small_fractions
from oracles import gauss_jordan_inverse

X = RatPoly.x()
HALF = Fraction(1, 2)


def rows(m):
    return [list(r) for r in m.rows]


def full(m):
    return [[m[i, j] for j in range(m.size)] for i in range(m.size)]


def test_build_examples():
    assert rows(build(MatrixFamily(FamilyKind.PASCAL), 3)) == [[1], [1, 1], [1, 2, 1]]
    assert rows(build(MatrixFamily(FamilyKind.EVEN_PASCAL), 3)) == [[1], [0, 1], [1, 0, 1]]
    assert rows(build(MatrixFamily(FamilyKind.HARMONIC_PASCAL), 2)) == [[1], [HALF, 1]]


def test_family_entry_formulas():
    lam = Fraction(-3, 7)
    m = build(MatrixFamily(FamilyKind.DOUBLE_HARMONIC, lam), 4)
    # C(6, 2) lam^2 / 5
    assert m[3, 1] == 15 * lam**2 / 5
    m = build(MatrixFamily(FamilyKind.DOUBLE_EULER, 2), 3)
    # C(4, 0) 2^2 E_4
    assert m[2, 0] == 1 * 4 * 5
    m = build(MatrixFamily(FamilyKind.CENTRAL_PASCAL), 3)
    assert m[2, 0] == Fraction(-1, 3)


def test_build_rejects_bad_size_and_kind():
    with pytest.raises(ValueError):
        build(MatrixFamily(FamilyKind.PASCAL), 0)
    with pytest.raises(ValueError):
        MatrixFamily("pascal")
    with pytest.raises(ValueError):
        FamilyKind.from_name("nope")


def test_triangle_shape_enforced():
    with pytest.raises(ValueError):
        TriMatrix(((1, 2), (1, 1)))


def test_invert_examples():
    assert invert(identity(4)) == identity(4)
    inv = invert(build(MatrixFamily(FamilyKind.PASCAL), 4))
    from math import comb
    assert rows(inv) == [[(-1) ** (i - j) * comb(i, j) for j in range(i + 1)] for i in range(4)]
    inv = invert(build(MatrixFamily(FamilyKind.HARMONIC_PASCAL), 2))
    assert rows(inv) == [[1], [-HALF, 1]]


def test_invert_agrees_with_gauss_jordan():
    for kind in FamilyKind:
        m = build(MatrixFamily(kind, Fraction(-3, 7)), 7)
        assert full(invert(m)) == gauss_jordan_inverse(full(m))


def test_singular_reports_index():
    m = TriMatrix(((1,), (2, 0), (1, 1, 1)))
    with pytest.raises(SingularMatrixError) as info:
        invert(m)
    assert info.value.index == 1


def test_non_unit_diagonal_inverse():
    m = TriMatrix(((2,), (1, 3)))
    assert multiply(m, invert(m)) == identity(2)


def test_multiply_examples():
    a = build(MatrixFamily(FamilyKind.EULER_PASCAL, 2), 5)
    assert multiply(a, identity(5)) == a
    p = build(MatrixFamily(FamilyKind.PASCAL), 4)
    assert multiply(p, invert(p)) == identity(4)
    plus = build(MatrixFamily(FamilyKind.PASCAL_SCALED, 2), 3)
    minus = build(MatrixFamily(FamilyKind.PASCAL_SCALED, -2), 3)
    assert multiply(plus, minus) == identity(3)


def test_multiply_size_mismatch():
    with pytest.raises(ValueError):
        multiply(identity(2), identity(3))


def test_apply_to_vector_examples():
    xs = (RatPoly.constant(1), X, X * X)
    assert apply_to_vector(identity(3), xs) == xs
    w = substituted_polys(PolyKind.W_POLY, 2)
    assert apply_to_vector(build(MatrixFamily(FamilyKind.EVEN_PASCAL), 3), list(w)) == xs
    assert apply_to_vector(build(MatrixFamily(FamilyKind.PASCAL), 2), [1, X]) == (1, 1 + X)
    with pytest.raises(ValueError):
        apply_to_vector(identity(2), [1])


@pytest.mark.parametrize("kind", list(FamilyKind))
@pytest.mark.parametrize("lam", [Fraction(1), Fraction(2)])
def test_nesting(kind, lam):
    fam = MatrixFamily(kind, lam)
    n = 24
    big = build(fam, n)
    big_inv = invert(big)
    for k in range(1, n):
        small = build(fam, k)
        assert big.leading_block(k) == small
        assert big_inv.leading_block(k) == invert(small)


@pytest.mark.parametrize("kind", list(FamilyKind))
def test_unit_diagonal_and_involution(kind):
    m = build(MatrixFamily(kind, Fraction(-3, 7)), 32)
    inv = invert(m)
    assert all(m[i, i] == 1 and inv[i, i] == 1 for i in range(32))
    assert invert(inv) == m


@settings(max_examples=20)
@given(
    st.sampled_from(list(FamilyKind)),
    st.sampled_from(list(FamilyKind)),
    nonzero_fractions(5, 5),
    small_fractions(5, 5),
    st.integers(1, 16),
)
def test_inverse_of_product(ka, kb, la, lb, size):
    a = build(MatrixFamily(ka, la), size)
    b = build(MatrixFamily(kb, lb), size)
    assert multiply(invert(a), invert(b)) == invert(multiply(b, a))


def test_json_round_trip():
    m = build(MatrixFamily(FamilyKind.DOUBLE_CENTRAL, Fraction(-3, 7)), 6)
    doc = json.loads(json.dumps(m.to_json()))
    assert doc["family"] == "double_central" and doc["lambda"] == "-3/7"
    back = TriMatrix.from_json(doc)
    assert back == m
    assert back.family == m.family


def test_from_json_accepts_square_rows():
    m = TriMatrix.from_json({"rows": [["1", "0"], ["1/2", "1"]]})
    assert rows(m) == [[1], [HALF, 1]]
    with pytest.raises(ValueError):
        TriMatrix.from_json({"rows": [["1", "5"], ["1/2", "1"]]})


def test_csv_form():
    m = build(MatrixFamily(FamilyKind.HARMONIC_PASCAL), 3)
    assert m.to_csv() == "1\n1/2,1\n1/3,1,1"
