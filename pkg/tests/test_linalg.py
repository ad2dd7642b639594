from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from lieyamaguti import (
    GF,
    QQ,
    ContainmentError,
    DimensionError,
    FieldMismatchError,
    ManifestError,
    Matrix,
    Subspace,
    complement_in,
    field_of,
    image,
    nullspace,
    quotient_dim,
    rank,
    rref,
    solve,
)
from lieyamaguti.fields import Field, Mod

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, field=QQ, max_rows=6, max_cols=6):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    if field.p:
        vals = st.integers(0, field.p - 1)
    else:
        vals = small
    rows = draw(st.lists(st.lists(vals, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix([[field(x) for x in row] for row in rows], field, c)


def sympy_rank(M: Matrix) -> int:
    if M.nrows == 0:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in M.rows]).rank()


# -- fields -----------------------------------------------------------------


def test_mod_arithmetic():
    F = GF(7)
    x = F(3)
    assert x * x.inverse() == F(1)
    assert F(Fraction(1, 2)) * 2 == F(1)
    assert -F(3) == F(4)
    assert F(3) ** 6 == F(1)
    assert F(5) / F(5) == F(1)


def test_field_descriptors():
    assert Field.from_string("QQ") is QQ
    assert Field.from_string("GF(11)") == GF(11)
    with pytest.raises(ManifestError):
        Field.from_string("RR")
    with pytest.raises(ManifestError):
        Field.from_string("GF(9)")
    with pytest.raises(ValueError):
        GF(2)


def test_parse_format_round_trip():
    assert QQ.parse("-3/7") == Fraction(-3, 7)
    assert QQ.format(Fraction(6, 4)) == "3/2"
    assert QQ.format(Fraction(-4)) == "-4"
    assert GF(5).parse("3/2") == GF(5)(4)
    with pytest.raises(ManifestError):
        QQ.parse("0.5")


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldMismatchError):
        QQ(Mod(1, 5))
    with pytest.raises(FieldMismatchError):
        GF(7)(Mod(1, 5))
    with pytest.raises(FieldMismatchError):
        field_of([Mod(1, 5), Mod(1, 7)])
    with pytest.raises(FieldMismatchError):
        Matrix([[Mod(1, 5), Fraction(1, 2)]])


@given(st.integers(1, 100), st.integers(-50, 50))
def test_gf_division_inverts_multiplication(a, b):
    F = GF(101)
    x, y = F(a), F(b)
    assert (x * y) / x == y


# -- matrices ---------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_agrees_with_sympy(M):
    assert rank(M) == sympy_rank(M)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_is_idempotent_and_row_equivalent(M):
    R = rref(M)
    assert rref(R) == R
    assert rank(R) == rank(M)
    # same row space
    assert Subspace(M.ncols, M.rows) == Subspace(M.ncols, R.rows)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(M):
    N = nullspace(M)
    assert rank(M) + N.dim == M.ncols
    for v in N.basis:
        assert not any(M.apply(v))


@settings(max_examples=40, deadline=None)
@given(matrices(field=GF(7)))
def test_rank_nullity_mod_p(M):
    N = nullspace(M)
    assert rank(M) + N.dim == M.ncols
    for v in N.basis:
        assert not any(M.apply(v))


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_returns_a_solution_when_one_exists(M, data):
    x0 = data.draw(st.lists(small, min_size=M.ncols, max_size=M.ncols))
    b = M.apply(x0)
    x = solve(M, b)
    assert x is not None
    assert M.apply(x) == b


def test_solve_reports_inconsistency():
    M = Matrix([[1, 1], [2, 2]])
    assert solve(M, (1, 3)) is None
    with pytest.raises(DimensionError):
        solve(M, (1,))


@settings(max_examples=40, deadline=None)
@given(matrices(max_rows=5, max_cols=5))
def test_inverse(M):
    if M.nrows != M.ncols:
        return
    inv = M.inverse()
    if rank(M) < M.ncols:
        assert inv is None
    else:
        assert M @ inv == Matrix.identity(M.ncols)


def test_matmul_shape_checks():
    with pytest.raises(DimensionError):
        Matrix([[1, 2]]) @ Matrix([[1, 2]])


def test_fraction_free_elimination_on_large_entries():
    # Hilbert matrix: exact inverse has large integer entries
    n = 6
    H = Matrix([[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)])
    inv = H.inverse()
    assert H @ inv == Matrix.identity(n)
    assert inv[0, 0] == 36


# -- subspaces --------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(matrices(max_cols=5), matrices(max_cols=5))
def test_intersection_and_sum_dimensions(A, B):
    if A.ncols != B.ncols:
        return
    U = Subspace(A.ncols, A.rows)
    W = Subspace(B.ncols, B.rows)
    assert (U + W).dim + (U & W).dim == U.dim + W.dim
    for v in (U & W).basis:
        assert v in U and v in W


@settings(max_examples=40, deadline=None)
@given(matrices(max_cols=5))
def test_annihilator(M):
    U = Subspace(M.ncols, M.rows)
    A = U.annihilator()
    assert A.dim + U.dim == M.ncols
    for a in A.basis:
        for u in U.basis:
            assert sum((x * y for x, y in zip(a, u)), Fraction(0)) == 0


def test_image_is_column_space():
    M = Matrix([[1, 0, 1], [0, 1, 1]])
    assert image(M) == Subspace.full(2)


def test_complement_and_quotient():
    big = Subspace.full(3)
    small = Subspace(3, [(1, 1, 0)])
    comp = complement_in(big, small)
    assert len(comp) == 2
    assert (Subspace(3, comp) + small) == big
    assert (Subspace(3, comp) & small).dim == 0
    dim, reps = quotient_dim(big, small)
    assert dim == 2 and len(reps) == 2
    with pytest.raises(ContainmentError):
        quotient_dim(small, big)


def test_coordinates():
    U = Subspace(3, [(1, 2, 0), (0, 0, 1)])
    v = (2, 4, 5)
    c = U.coordinates(v)
    assert tuple(sum(ci * b[k] for ci, b in zip(c, U.basis)) for k in range(3)) == v
    with pytest.raises(ContainmentError):
        U.coordinates((1, 0, 0))
