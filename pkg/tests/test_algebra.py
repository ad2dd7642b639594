from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from conftest import ALGEBRAS, nonabelian2, l0
from lieyamaguti import (
    GF,
    QQ,
    DimensionError,
    FieldMismatchError,
    LeibnizAlgebra,
    LinearMapCandidate,
    LyAlgebra,
    Matrix,
    Representation,
    UnverifiedError,
    VerificationError,
    adjoint_rep,
    check_leibniz,
    check_lya,
    check_morphism,
    check_representation,
    leibniz_to_lya,
)
from lieyamaguti.fields import Mod


def axiom_table(a):
    """The oracle's LY3-LY6 residuals of ``a`` itself (order zero of a constant series)."""
    b, t = O.constants(a)
    return O.Series(a.dim, [b], [t], 0).residuals(0)


# -- check_lya --------------------------------------------------------------


def test_two_dimensional_example_passes():
    a = LyAlgebra.from_constants(2, [(0, 1, 0, 1)], [(0, 1, 1, 0, 1)])
    assert check_lya(a).ok
    tables = axiom_table(a)
    assert not any(any(v) for table in tables.values() for v in table.values())


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_abelian_passes(d):
    assert check_lya(LyAlgebra.abelian(d))


def test_binary_e2_variant_fails_ly5_not_ly3():
    # [e1,e2]=e2, {e1,e2,e2}=e1: every LY3 cyclic sum vanishes; LY5 does not
    a = LyAlgebra.from_constants(2, [(0, 1, 1, 1)], [(0, 1, 1, 0, 1)])
    report = check_lya(a)
    assert not report.ok
    assert report.axiom == "LY5"
    assert report.witness == ("e1", "e2", "e1", "e2")
    assert report.residual == (1, 0)
    tables = axiom_table(a)
    assert not any(any(v) for v in tables["LY3"].values())
    assert not any(any(v) for v in tables["LY4"].values())
    assert tables["LY5"][0, 1, 0, 1] == [1, 0]


def test_raw_table_reports_ly1():
    a = LyAlgebra.from_table(2, [(0, 0, 0, QQ(1))], [], QQ)
    report = check_lya(a)
    assert (report.axiom, report.witness, report.residual) == ("LY1", ("e1", "e1"), (2, 0))


def test_raw_table_reports_ly2():
    a = LyAlgebra.from_table(2, [], [(0, 1, 0, 0, QQ(1))], QQ)
    report = check_lya(a)
    assert report.axiom == "LY2" and report.witness == ("e1", "e2", "e1")


def test_independent_constants_fill_antisymmetric_slots():
    a = LyAlgebra.from_constants(3, [(0, 2, 1, Fraction(3, 7))], [(1, 2, 0, 0, 5)])
    assert a.b[2][0] == (0, Fraction(-3, 7), 0)
    assert a.t[2][1][0] == (-5, 0, 0)
    assert a.independent_constants() == ([(0, 2, 1, Fraction(3, 7))], [(1, 2, 0, 0, 5)])


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_residuals_re_evaluate(name):
    # perturb one ternary slot and compare the reported residual with the oracle
    a = ALGEBRAS[name]()
    binary, ternary = a.independent_constants()
    ternary = [(0, 1, 0, 1, 1)] + [e for e in ternary if e[:4] != (0, 1, 0, 1)]
    bad = LyAlgebra.from_constants(a.dim, binary, ternary)
    report = check_lya(bad)
    if report.ok:
        return
    tables = axiom_table(bad)
    if report.axiom in tables:
        assert list(report.residual) == tables[report.axiom][report.indices]


def test_malformed_constants():
    with pytest.raises(DimensionError):
        LyAlgebra.from_constants(2, [(0, 2, 0, 1)])
    with pytest.raises(DimensionError):
        LyAlgebra.from_constants(2, [(1, 0, 0, 1)])
    with pytest.raises(FieldMismatchError):
        LyAlgebra.from_constants(2, [(0, 1, 0, Mod(1, 5))])


def test_downstream_requires_verification():
    with pytest.raises(UnverifiedError):
        adjoint_rep(LyAlgebra.from_constants(2, [(0, 1, 0, 1)]))


def test_finite_field_algebra():
    a = LyAlgebra.from_constants(2, [(0, 1, 0, 1)], [(0, 1, 1, 0, 1)], GF(5))
    assert check_lya(a)
    assert a.b[1][0] == (GF(5)(4), GF(5)(0))


# -- representations --------------------------------------------------------


def test_adjoint_entries():
    r = adjoint_rep(nonabelian2())
    assert r.rho[0].column(0) == (0, 0) and r.rho[0].column(1) == (1, 0)
    assert r.D[0][1].column(0) == (0, 0) and r.D[0][1].column(1) == (1, 0)
    # theta(x,y)z = {z,x,y}: theta(e1,e2)e2 = {e2,e1,e2} = -e1
    assert r.theta[0][1].column(0) == (0, 0) and r.theta[0][1].column(1) == (-1, 0)


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_adjoint_is_a_representation(name):
    assert check_representation(adjoint_rep(ALGEBRAS[name]()))


def test_zero_representation_of_abelian():
    assert check_representation(Representation.zero(LyAlgebra.abelian(2).verify(), 3))


def test_perturbed_d_fails_r1():
    a = nonabelian2()
    r = adjoint_rep(a)
    D = [list(row) for row in r.D]
    D[0][1] = D[0][1] + Matrix.identity(2)
    bad = Representation(a, 2, r.rho, D, r.theta)
    report = check_representation(bad)
    assert report.axiom == "R1" and report.witness == ("e1", "e2")
    assert report.residual == Matrix.identity(2)


def test_representation_dimension_mismatch():
    a = nonabelian2()
    with pytest.raises(DimensionError):
        Representation(a, 2, [Matrix.identity(3)] * 2, adjoint_rep(a).D, adjoint_rep(a).theta)


# -- Leibniz ------------------------------------------------------------------


@pytest.mark.parametrize(
    "entries, binary, ternary",
    [
        ([(0, 0, 1, 1)], [], []),
        ([(0, 1, 1, 1)], [(0, 1, 1, 1)], []),
        ([], [], []),
    ],
)
def test_leibniz_examples(entries, binary, ternary):
    a = leibniz_to_lya(LeibnizAlgebra.from_entries(2, entries, QQ))
    assert a.independent_constants() == (binary, ternary)


def test_leibniz_violation_reported():
    lz = LeibnizAlgebra.from_entries(2, [(1, 0, 1, 1)], QQ)
    report = check_leibniz(lz)
    assert not report and report.witness == ("e2", "e1", "e1")
    with pytest.raises(VerificationError):
        leibniz_to_lya(lz)


FAMILIES = [
    [(0, 0, 1, 1)],  # e1.e1 = e2
    [(0, 1, 1, 1)],  # e1.e2 = e2
    [(0, 0, 1, 1), (0, 1, 1, 1)],
]


def transport(lz, P):
    """The isomorphic Leibniz algebra c'(x, y) = P^-1 c(Px, Py)."""
    Pinv = P.inverse()
    d = lz.dim
    cols = P.columns()
    entries = []
    for i, j in product(range(d), repeat=2):
        v = Pinv.apply(lz.product(cols[i], cols[j]))
        entries.extend((i, j, k, c) for k, c in enumerate(v) if c)
    return LeibnizAlgebra.from_entries(d, entries, QQ)


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from(FAMILIES),
    st.lists(st.integers(-3, 3), min_size=4, max_size=4),
    st.integers(1, 4),
)
def test_induced_structure_is_lie_yamaguti(family, p, scale):
    P = Matrix([p[:2], p[2:]])
    if P.inverse() is None:
        return
    lz = LeibnizAlgebra.from_entries(2, [e[:3] + (QQ(e[3] * scale),) for e in family], QQ)
    lz = transport(lz, P)
    assert check_leibniz(lz)
    assert check_lya(leibniz_to_lya(lz))


# -- morphisms ----------------------------------------------------------------


def test_morphisms():
    a = nonabelian2()
    assert check_morphism(LinearMapCandidate(a, a, Matrix.identity(2)))
    assert check_morphism(LinearMapCandidate(a, a, Matrix.zeros(2, 2)))
    swap = Matrix([[0, 1], [1, 0]])
    report = check_morphism(LinearMapCandidate(a, a, swap))
    assert not report and report.witness == ("e1", "e2")
    # phi[e1,e2] = phi(e1) = e2 versus [e2,e1] = -e1
    assert report.residual == (1, 1)


def test_morphism_shape_checked():
    a = nonabelian2()
    with pytest.raises(DimensionError):
        check_morphism(LinearMapCandidate(a, l0(), Matrix.identity(3)))
