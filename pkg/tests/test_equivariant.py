from fractions import Fraction
from itertools import product

import pytest

import oracles as O
from conftest import abelian, diag, nonabelian2, l0, rand_coeffs, sl2, z2_action
from lieyamaguti import (
    GF,
    QQ,
    CochainSpace,
    DimensionError,
    EquivariantModuleAction,
    FiniteGroup,
    GroupAction,
    LyAlgebra,
    Matrix,
    Subspace,
    UnsupportedConfigurationError,
    UnverifiedError,
    adjoint_rep,
    check_action,
    check_equivariant_compat,
    check_group,
    check_lya,
    cohomology,
    delta_general,
    equivariant_cohomology,
    equivariant_subspace,
    fixed_subalgebra,
    induced_action,
    pair_spaces,
)
from lieyamaguti.cochains import CochainPair
from lieyamaguti.equivariant import equivariant_pairs


def verified(act, rep=None):
    assert check_action(act)
    rep = rep or adjoint_rep(act.algebra)
    modact = EquivariantModuleAction.adjoint(act, rep)
    assert check_equivariant_compat(act, modact)
    return act, rep, modact


def cyclic_permutation_action(a):
    """Z3 permuting e1 -> e2 -> e3 -> e1 (an automorphism of the abelian algebra)."""
    G = FiniteGroup.cyclic(3).verify()
    P = Matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    return GroupAction(G, a, [Matrix.identity(3), P, P @ P])


def pointwise_equivariant(coeffs, n, act, M_of):
    """f(g x1, ..., g xn) == g f(x1, ..., xn) on every full basis tuple."""
    a = act.algebra
    d = a.dim
    T = O.dense(coeffs, n, d, d)
    for g in range(act.group.order):
        P = O.mat(act.matrices[g])
        M = O.mat(M_of(g))
        cols = [[P[i][j] for i in range(d)] for j in range(d)]
        for X in product(range(d), repeat=n):
            # expand f(P e_{x1}, ..., P e_{xn}) multilinearly
            lhs = O.zeros(d)
            for Y in product(range(d), repeat=n):
                c = Fraction(1)
                for x, y in zip(X, Y):
                    c *= cols[x][y]
                    if not c:
                        break
                if c:
                    lhs = O.add(lhs, T[Y], c)
            if lhs != O.mv(M, T[X]):
                return False
    return True


# -- groups -------------------------------------------------------------------


def test_groups():
    assert check_group(FiniteGroup.cyclic(2))
    assert check_group(FiniteGroup.cyclic(3))
    assert FiniteGroup.cyclic(2).labels == ("e", "g")
    table = [[0, 1, 2], [1, 2, 0], [2, 0, 0]]
    report = check_group(FiniteGroup(("e", "a", "b"), table))
    assert not report and report.witness


def test_group_table_shape():
    with pytest.raises((DimensionError, ValueError)):
        FiniteGroup(("e", "g"), [[0, 1]])


# -- actions ------------------------------------------------------------------


@pytest.mark.parametrize("make", [nonabelian2, l0, sl2])
def test_trivial_action_passes(make):
    a = make()
    assert check_action(GroupAction.trivial(FiniteGroup.cyclic(2).verify(), a))


def test_negation_on_the_ternary_only_algebra():
    assert check_action(z2_action(l0(), -1, -1))


def test_negation_fails_on_the_example_with_a_binary_bracket():
    report = check_action(z2_action(nonabelian2(), -1, -1))
    assert not report
    assert report.axiom == "automorphism"
    assert report.witness == ("g", "e1", "e2")
    # g[e1,e2] - [g e1, g e2] = -e1 - e1
    assert report.residual == (-2, 0)


def test_action_must_be_a_homomorphism():
    report = check_action(z2_action(abelian(2), 1, 2))
    assert not report and report.axiom != "automorphism"


def test_action_must_be_invertible():
    G = FiniteGroup.cyclic(2).verify()
    a = abelian(2)
    with pytest.raises(DimensionError):
        check_action(GroupAction(G, a, [Matrix.identity(2), Matrix([[1, 0], [0, 0]])]))


def test_z3_action_passes():
    assert check_action(cyclic_permutation_action(abelian(3)))


# -- fixed points -------------------------------------------------------------


def test_fixed_points_of_trivial_action():
    a = nonabelian2()
    act = GroupAction.trivial(FiniteGroup.cyclic(2).verify(), a)
    assert check_action(act)
    fs = fixed_subalgebra(act)
    assert fs.algebra.dim == 2
    assert fs.algebra.independent_constants() == a.independent_constants()


def test_fixed_points_of_negation():
    act = z2_action(l0(), -1, -1)
    assert check_action(act)
    assert fixed_subalgebra(act).algebra.dim == 0
    assert fixed_subalgebra(act, ["e"]).algebra.dim == 2


def test_fixed_points_of_a_reflection():
    act = z2_action(abelian(3), 1, 1, -1)
    assert check_action(act)
    fs = fixed_subalgebra(act, ["e", "g"])
    assert Subspace(3, fs.basis) == Subspace(3, [(1, 0, 0), (0, 1, 0)])
    assert fs.algebra.independent_constants() == ([], [])
    assert check_lya(fs.algebra)


def test_fixed_points_need_a_subgroup():
    act = z2_action(l0(), -1, -1)
    assert check_action(act)
    with pytest.raises(DimensionError):
        fixed_subalgebra(act, ["g"])


def test_fixed_points_of_z3_on_abelian():
    act = cyclic_permutation_action(abelian(3))
    assert check_action(act)
    fs = fixed_subalgebra(act)
    assert fs.basis == ((1, 1, 1),)


# -- module compatibility -----------------------------------------------------


def test_adjoint_module_is_compatible():
    verified(z2_action(l0(), -1, -1))
    verified(GroupAction.trivial(FiniteGroup.trivial().verify(), nonabelian2()))


def test_identity_module_under_negation_is_still_compatible():
    # D and theta are quadratic in the action, rho vanishes: signs cancel
    act = z2_action(l0(), -1, -1)
    assert check_action(act)
    r = adjoint_rep(act.algebra)
    mod = EquivariantModuleAction(act.group, r, [Matrix.identity(2)] * 2)
    assert check_equivariant_compat(act, mod)


def test_identity_module_under_a_reflection_fails():
    act = z2_action(l0(), 1, -1)
    assert check_action(act)
    r = adjoint_rep(act.algebra)
    mod = EquivariantModuleAction(act.group, r, [Matrix.identity(2)] * 2)
    report = check_equivariant_compat(act, mod)
    assert not report
    assert report.axiom == "D" and report.witness == ("g", "e1", "e2")


def test_subspace_needs_checked_compatibility():
    act = z2_action(l0(), -1, -1)
    assert check_action(act)
    mod = EquivariantModuleAction.adjoint(act, adjoint_rep(act.algebra))
    with pytest.raises(UnverifiedError):
        equivariant_subspace(CochainSpace(2, 2, 2), act, mod)


# -- induced action and C_G -----------------------------------------------------


@pytest.mark.parametrize(
    "make_act",
    [lambda: z2_action(l0(), -1, -1), lambda: z2_action(abelian(3), 1, 1, -1), lambda: cyclic_permutation_action(abelian(3))],
)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_induced_action_is_a_representation(make_act, n):
    act, r, mod = verified(make_act())
    a = act.algebra
    space = CochainSpace(n, a.dim, a.dim)
    G = act.group
    T = [induced_action(space, act, mod, g) for g in range(G.order)]
    assert T[G.identity] == Matrix.identity(space.dim)
    for g, h in product(range(G.order), repeat=2):
        assert T[g] @ T[h] == T[G.mul(g, h)]


def test_trivial_group_gives_full_spaces():
    act, r, mod = verified(GroupAction.trivial(FiniteGroup.trivial().verify(), nonabelian2()))
    for n in (1, 2, 3):
        space = CochainSpace(n, 2, 2)
        assert equivariant_subspace(space, act, mod).dim == space.dim


@pytest.mark.parametrize("n, expected", [(1, 4), (2, 0), (3, 4), (4, 0), (5, 4)])
def test_negation_on_l0(n, expected):
    act, r, mod = verified(z2_action(l0(), -1, -1))
    assert equivariant_subspace(CochainSpace(n, 2, 2), act, mod).dim == expected


@pytest.mark.parametrize(
    "make_act", [lambda: z2_action(abelian(3), 1, 1, -1), lambda: cyclic_permutation_action(abelian(3))]
)
@pytest.mark.parametrize("n", [2, 3])
def test_equivariant_basis_checked_pointwise(make_act, n):
    act, r, mod = verified(make_act())
    S = equivariant_subspace(CochainSpace(n, 3, 3), act, mod).subspace
    for v in S.basis:
        assert pointwise_equivariant(v, n, act, lambda g: mod.matrices[g])


@pytest.mark.parametrize("n", [2, 3])
def test_kernel_agrees_with_averaging(n):
    act, r, mod = verified(cyclic_permutation_action(abelian(3)))
    space = CochainSpace(n, 3, 3)
    G = act.group
    avg = Matrix.zeros(space.dim, space.dim)
    for g in range(G.order):
        avg = avg + induced_action(space, act, mod, g)
    avg = avg.scale(Fraction(1, G.order))
    from lieyamaguti import image

    assert image(avg) == equivariant_subspace(space, act, mod).subspace


def test_prime_field_dividing_group_order_is_rejected():
    F = GF(5)
    a = LyAlgebra.abelian(2, F).verify()
    act = GroupAction.trivial(FiniteGroup.cyclic(5).verify(), a)
    act, r, mod = verified(act)
    with pytest.raises(UnsupportedConfigurationError):
        equivariant_subspace(CochainSpace(2, 2, 2, F), act, mod)


def test_prime_field_matches_rationals():
    F = GF(7)
    a = LyAlgebra.from_constants(2, [], [(0, 1, 1, 0, 1)], F).verify()
    G = FiniteGroup.cyclic(2).verify()
    act = GroupAction(G, a, [Matrix.identity(2, F), diag(-1, -1, field=F)])
    act, r, mod = verified(act)
    res = equivariant_cohomology(a, r, act, mod, 1)
    assert res.dims == (0, 1)


# -- equivariant cohomology -----------------------------------------------------


@pytest.mark.parametrize("make", [nonabelian2, l0, lambda: abelian(2)])
@pytest.mark.parametrize("level", [1, 2])
def test_trivial_group_reproduces_ordinary_cohomology(make, level):
    a = make()
    act, r, mod = verified(GroupAction.trivial(FiniteGroup.trivial().verify(), a))
    eq = equivariant_cohomology(a, r, act, mod, level)
    ordinary = cohomology(a, r, level)
    assert eq == ordinary
    assert eq.representatives == ordinary.representatives


def test_trivial_action_of_z2_on_abelian_plane():
    a = abelian(2)
    act, r, mod = verified(GroupAction.trivial(FiniteGroup.cyclic(2).verify(), a))
    assert equivariant_cohomology(a, r, act, mod, 1).dims == (2, 4)


@pytest.mark.parametrize("level, dims", [(1, (0, 1)), (2, (0, 1))])
def test_negation_on_l0_cohomology(level, dims):
    a = l0()
    act, r, mod = verified(z2_action(a, -1, -1))
    res = equivariant_cohomology(a, r, act, mod, level)
    assert res.dims == dims
    assert res.z_dims[0] == 0


def test_coboundary_preserves_equivariance(rng):
    a = l0()
    act, r, mod = verified(z2_action(a, -1, -1))
    S = equivariant_pairs(1, act, mod)
    target = equivariant_pairs(2, act, mod)
    even, odd = pair_spaces(1, 2, 2, QQ)
    for _ in range(10):
        c = rand_coeffs(rng, S.dim)
        vec = [sum((ci * b[k] for ci, b in zip(c, S.basis)), Fraction(0)) for k in range(S.ambient)]
        out = delta_general(CochainPair.from_vector(even, odd, vec), r)
        assert out.vector in target


def test_mismatched_inputs_rejected():
    a = l0()
    act, r, mod = verified(z2_action(a, -1, -1))
    other = nonabelian2()
    with pytest.raises(DimensionError):
        equivariant_cohomology(other, adjoint_rep(other), act, mod, 1)
