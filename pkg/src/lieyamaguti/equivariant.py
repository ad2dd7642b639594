"""Finite group actions, fixed-point subalgebras and equivariant cohomology.

Groups are Cayley tables.  An action assigns an invertible matrix to each
group element; the induced action on n-cochains is

    (g . f)(x1, ..., xn) = g f(g^-1 x1, ..., g^-1 xn)

and equivariant cochains are its common fixed points.  Those are computed
as kernels, never by averaging, so nothing has to be divided by |G|.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import (
    CheckReport,
    LinearMapCandidate,
    LyAlgebra,
    Representation,
    _passed,
    check_morphism,
    require_verified,
)
from .cochains import (
    CochainSpace,
    CohomologyResult,
    _cache,
    _kernel,
    build_result,
    coboundary_operator,
    delta1_operator,
    delta23_operator,
    pair_spaces,
)
from .errors import (
    ClosureError,
    ContainmentError,
    DimensionError,
    UnsupportedConfigurationError,
    UnverifiedError,
)
from .linalg import Matrix, Subspace, nullspace


class FiniteGroup:
    """A group given by its multiplication table.

    ``table[g][h]`` is the index of g*h.  Call :func:`check_group` (or
    :meth:`verify`) before use.
    """

    def __init__(self, labels, table, identity: int = 0):
        self.labels = tuple(labels)
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise DimensionError("group labels must be distinct")
        rows = [tuple(r) for r in table]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionError(f"Cayley table must be {n}x{n}")
        for r in rows:
            for v in r:
                if not (isinstance(v, int) and 0 <= v < n):
                    raise DimensionError(f"table entry {v!r} is not an element index")
        if not 0 <= identity < n:
            raise DimensionError("identity index out of range")
        self.table = tuple(rows)
        self.identity = identity
        self._verified = False

    @classmethod
    def cyclic(cls, n: int, labels=None) -> FiniteGroup:
        labels = labels or (["e"] + [f"g{k}" if n > 2 else "g" for k in range(1, n)])
        return cls(labels, [[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def trivial(cls) -> FiniteGroup:
        return cls(["e"], [[0]])

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inverse(self, g: int) -> int:
        for h in range(self.order):
            if self.table[g][h] == self.identity:
                return h
        raise DimensionError(f"{self.labels[g]} has no inverse")

    def index(self, label) -> int:
        if isinstance(label, int):
            return label
        try:
            return self.labels.index(label)
        except ValueError:
            raise DimensionError(f"unknown group element {label!r}") from None

    @property
    def verified(self) -> bool:
        return self._verified

    def verify(self) -> FiniteGroup:
        from .errors import VerificationError

        rep = check_group(self)
        if not rep:
            raise VerificationError(rep.describe(), rep)
        return self

    def is_subgroup(self, elements) -> bool:
        H = set(elements)
        return self.identity in H and all(self.table[a][b] in H for a in H for b in H)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def check_group(G: FiniteGroup) -> CheckReport:
    """Identity law, inverses and associativity on all triples."""
    n, t, e = G.order, G.table, G.identity
    lab = G.labels
    for g in range(n):
        if t[e][g] != g or t[g][e] != g:
            return CheckReport(False, "group", "identity", (lab[g],), (g,))
    for g in range(n):
        if not any(t[g][h] == e and t[h][g] == e for h in range(n)):
            return CheckReport(False, "group", "inverse", (lab[g],), (g,))
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            return CheckReport(False, "group", "associativity", (lab[a], lab[b], lab[c]), (a, b, c))
    G._verified = True
    return _passed("group")


class GroupAction:
    """psi: G -> GL(L), one matrix per group element (column j = psi_g e_j)."""

    def __init__(self, group: FiniteGroup, algebra: LyAlgebra, matrices):
        self.group = group
        self.algebra = algebra
        mats = tuple(matrices)
        if len(mats) != group.order:
            raise DimensionError(f"{len(mats)} matrices for a group of order {group.order}")
        for m in mats:
            if m.shape != (algebra.dim, algebra.dim):
                raise DimensionError(f"action matrix of shape {m.shape} on a {algebra.dim}-dim algebra")
        self.matrices = mats
        self._verified = False

    @classmethod
    def trivial(cls, group: FiniteGroup, algebra: LyAlgebra) -> GroupAction:
        eye = Matrix.identity(algebra.dim, algebra.field)
        return cls(group, algebra, [eye] * group.order)

    def psi(self, g) -> Matrix:
        return self.matrices[self.group.index(g)]

    @property
    def verified(self) -> bool:
        return self._verified

    def verify(self) -> GroupAction:
        from .errors import VerificationError

        rep = check_action(self)
        if not rep:
            raise VerificationError(rep.describe(), rep)
        return self


def _check_linear_action(G: FiniteGroup, mats, subject) -> CheckReport | None:
    """Identity and homomorphism laws for a family of matrices indexed by G."""
    lab = G.labels
    for g, m in enumerate(mats):
        if m.inverse() is None:
            raise DimensionError(f"matrix for {lab[g]} is not invertible")
    n = mats[0].nrows
    eye = Matrix.identity(n, mats[0].field)
    if mats[G.identity] != eye:
        return CheckReport(
            False, subject, "identity", (lab[G.identity],), (G.identity,), mats[G.identity] - eye
        )
    for g, h in product(range(G.order), repeat=2):
        res = mats[g] @ mats[h] - mats[G.mul(g, h)]
        if not res.is_zero():
            return CheckReport(False, subject, "homomorphism", (lab[g], lab[h]), (g, h), res)
    return None


def check_action(act: GroupAction) -> CheckReport:
    """Action axioms: psi_e = id, psi_g psi_h = psi_gh, each psi_g an automorphism.

    Raises DimensionError for a non-invertible matrix.
    """
    G, a = act.group, act.algebra
    require_verified(G, a)
    bad = _check_linear_action(G, act.matrices, "action")
    if bad is not None:
        return bad
    for g, m in enumerate(act.matrices):
        rep = check_morphism(LinearMapCandidate(a, a, m))
        if not rep:
            return CheckReport(
                False,
                "action",
                "automorphism",
                (G.labels[g],) + rep.witness,
                (g,) + rep.indices,
                rep.residual,
                f"{rep.axiom} bracket not preserved",
            )
    act._verified = True
    return _passed("action")


def _subgroup(G: FiniteGroup, H) -> list[int]:
    if H is None:
        return list(range(G.order))
    idx = sorted({G.index(h) for h in H})
    if not G.is_subgroup(idx):
        raise DimensionError(f"{[G.labels[i] for i in idx]} is not a subgroup")
    return idx


@dataclass(frozen=True)
class FixedSubalgebra:
    """L^H with its own basis.

    ``basis`` are coordinate vectors in L (an RREF basis); ``algebra`` holds
    the induced constants against that basis; ``inclusion`` maps
    L^H -> L, column i being ``basis[i]``.
    """

    elements: tuple
    basis: tuple
    algebra: LyAlgebra
    inclusion: Matrix


def fixed_subalgebra(act: GroupAction, H=None) -> FixedSubalgebra:
    """Fixed points of a subgroup, closed under both brackets."""
    require_verified(act)
    G, a = act.group, act.algebra
    Hidx = _subgroup(G, H)
    d, f = a.dim, a.field
    eye = Matrix.identity(d, f)
    rows = tuple(r for h in Hidx if h != G.identity for r in (act.matrices[h] - eye).rows)
    S = nullspace(Matrix._raw(rows, f, d)) if rows else Subspace.full(d, f)
    k = S.dim
    basis = S.basis

    def coords(v, witness):
        try:
            return S.coordinates(v)
        except ContainmentError:
            raise ClosureError("bracket of fixed vectors left the fixed subspace", witness=witness) from None

    b = [[coords(a.bracket(basis[i], basis[j]), (i, j)) for j in range(k)] for i in range(k)]
    t = [
        [[coords(a.triple(basis[i], basis[j], basis[l]), (i, j, l)) for l in range(k)] for j in range(k)]
        for i in range(k)
    ]
    sub = LyAlgebra(k, b, t, f, labels=[f"u{i + 1}" for i in range(k)])
    sub.verify()
    inclusion = Matrix.from_columns(basis, d, f) if k else Matrix.zeros(d, 0, f)
    return FixedSubalgebra(tuple(G.labels[h] for h in Hidx), basis, sub, inclusion)


class EquivariantModuleAction:
    """G acting on the module V of a representation (one matrix per element)."""

    def __init__(self, group: FiniteGroup, rep: Representation, matrices):
        self.group = group
        self.rep = rep
        mats = tuple(matrices)
        if len(mats) != group.order:
            raise DimensionError(f"{len(mats)} matrices for a group of order {group.order}")
        for m in mats:
            if m.shape != (rep.dimV, rep.dimV):
                raise DimensionError(f"module matrix of shape {m.shape} on a {rep.dimV}-dim module")
        self.matrices = mats
        self._verified = False

    @property
    def verified(self) -> bool:
        return self._verified

    @classmethod
    def adjoint(cls, act: GroupAction, rep: Representation) -> EquivariantModuleAction:
        """The action on V = L given by the action on L itself."""
        if not rep.is_adjoint or rep.algebra != act.algebra:
            raise DimensionError("adjoint module action needs the adjoint representation of the same algebra")
        return cls(act.group, rep, act.matrices)


def check_equivariant_compat(act: GroupAction, modact: EquivariantModuleAction) -> CheckReport:
    """Module-action laws and rho(gx) = g rho(x) g^-1, D(gx,gy) = g D(x,y) g^-1, same for theta."""
    require_verified(act, modact.rep)
    G, r = act.group, modact.rep
    if modact.group is not G and modact.group.table != G.table:
        raise DimensionError("module action is over a different group")
    if r.algebra != act.algebra:
        raise DimensionError("representation belongs to a different algebra")
    bad = _check_linear_action(G, modact.matrices, "module action")
    if bad is not None:
        return bad
    a = act.algebra
    d = a.dim
    lab, glab = a.labels, G.labels
    for g in range(G.order):
        P, M = act.matrices[g], modact.matrices[g]
        Minv = M.inverse()
        img = P.columns()
        for x in range(d):
            res = r.rho_of(img[x]) - M @ r.rho[x] @ Minv
            if not res.is_zero():
                return CheckReport(False, "equivariant compatibility", "rho", (glab[g], lab[x]), (g, x), res)
        for x, y in product(range(d), repeat=2):
            res = r.D_of(img[x], img[y]) - M @ r.D[x][y] @ Minv
            if not res.is_zero():
                return CheckReport(False, "equivariant compatibility", "D", (glab[g], lab[x], lab[y]), (g, x, y), res)
        for x, y in product(range(d), repeat=2):
            res = r.theta_of(img[x], img[y]) - M @ r.theta[x][y] @ Minv
            if not res.is_zero():
                return CheckReport(
                    False, "equivariant compatibility", "theta", (glab[g], lab[x], lab[y]), (g, x, y), res
                )
    modact._verified = True
    return _passed("equivariant compatibility")


# ---------------------------------------------------------------------------
# induced action on cochains


def induced_matrix(space: CochainSpace, P: Matrix, M: Matrix) -> Matrix:
    """Matrix of f -> M f(P x1, ..., P xn) on canonical coordinates.

    With P = psi_{g^-1} and M the module matrix of g this is T_g.
    """
    d, dv, f = space.d, space.dimV, space.field
    cols = [[(k, P.rows[k][x]) for k in range(d) if P.rows[k][x]] for x in range(d)]
    rows = []
    for key in space.keys:
        acc = [dict() for _ in range(dv)]
        for choice in product(*(cols[x] for x in key)):
            hit = space.lookup(tuple(k for k, _ in choice))
            if hit is None:
                continue
            sign, idx = hit
            c = f.one if sign > 0 else -f.one
            for _, v in choice:
                c = c * v
            base = idx * dv
            for u in range(dv):
                s = acc[u].get(base + u, f.zero) + c
                acc[u][base + u] = s
        # value_w = sum_u M[w][u] * value_u
        for w in range(dv):
            row = [f.zero] * space.dim
            for u in range(dv):
                m = M.rows[w][u]
                if m:
                    for col, c in acc[u].items():
                        row[col] += m * c
            rows.append(tuple(row))
    return Matrix._raw(tuple(rows), f, space.dim)


def induced_action(space: CochainSpace, act: GroupAction, modact: EquivariantModuleAction, g) -> Matrix:
    G = act.group
    g = G.index(g)
    return induced_matrix(space, act.matrices[G.inverse(g)], modact.matrices[g])


@dataclass(frozen=True)
class EquivariantCochainSpace:
    space: CochainSpace
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim


def _check_characteristic(act: GroupAction):
    p = act.algebra.field.p
    if p and act.group.order % p == 0:
        raise UnsupportedConfigurationError(
            f"characteristic {p} divides the group order {act.group.order}"
        )


def _require_compat(act, modact):
    if not modact.verified:
        raise UnverifiedError("equivariant compatibility has not been checked")


def equivariant_constraints(space: CochainSpace, act: GroupAction, modact: EquivariantModuleAction) -> tuple:
    """Rows of T_g - id for every g != e (cached per action and space)."""

    def build():
        G = act.group
        eye = Matrix.identity(space.dim, space.field)
        rows = []
        for g in range(G.order):
            if g == G.identity:
                continue
            T = induced_action(space, act, modact, g)
            rows.extend(r for r in (T - eye).rows if any(r))
        return tuple(dict.fromkeys(rows))

    return _cache(modact, ("constraints", space), build)


def equivariant_subspace(space: CochainSpace, act: GroupAction, modact: EquivariantModuleAction) -> EquivariantCochainSpace:
    """C_G^n: the common kernel of T_g - id over g != e."""
    require_verified(act)
    _require_compat(act, modact)
    _check_characteristic(act)
    if (space.d, space.dimV, space.field) != (act.algebra.dim, modact.rep.dimV, act.algebra.field):
        raise DimensionError("cochain space does not match the action")
    rows = equivariant_constraints(space, act, modact)
    if not rows:
        return EquivariantCochainSpace(space, Subspace.full(space.dim, space.field))
    return EquivariantCochainSpace(space, nullspace(Matrix._raw(rows, space.field, space.dim)))


def _stacked_constraints(spaces, act, modact):
    even, odd = spaces
    z = even.field.zero
    rows = [r + (z,) * odd.dim for r in equivariant_constraints(even, act, modact)]
    rows += [(z,) * even.dim + r for r in equivariant_constraints(odd, act, modact)]
    return rows


def equivariant_cohomology(
    a: LyAlgebra, r: Representation, act: GroupAction, modact: EquivariantModuleAction, n: int
) -> CohomologyResult:
    """H_G at level n: Z_G = Z restricted to equivariant pairs, B_G = delta(equivariant pairs one level down)."""
    require_verified(a, r, act)
    _require_compat(act, modact)
    _check_characteristic(act)
    if act.algebra != a or r.algebra != a or modact.rep != r:
        raise DimensionError("algebra, representation and actions do not match")
    if n < 1:
        raise DimensionError("cohomology level must be at least 1")
    f = a.field
    spaces = pair_spaces(n, a.dim, r.dimV, f)
    if n == 1:
        if not r.is_adjoint:
            raise UnsupportedConfigurationError("level 1 cohomology is only defined for adjoint coefficients")
        M = delta23_operator(a)
        prev_space = CochainSpace(1, a.dim, a.dim, f)
        prev = equivariant_subspace(prev_space, act, modact).subspace
        D = delta1_operator(a)
    else:
        M = coboundary_operator(r, n).matrix
        ps = pair_spaces(n - 1, a.dim, r.dimV, f)
        prev = _stacked_subspace(ps, act, modact)
        D = coboundary_operator(r, n - 1).matrix
    eq_rows = _stacked_constraints(spaces, act, modact)
    if eq_rows:
        Z = _kernel(Matrix._raw(M.rows + tuple(eq_rows), f, M.ncols))
    else:
        Z = _kernel(M)
    images = [D.apply(v) for v in prev.basis]
    # equivariance of the image, checked generator by generator
    for v, img in zip(prev.basis, images):
        for row in eq_rows:
            if sum((x * y for x, y in zip(row, img)), f.zero):
                raise ClosureError("coboundary of an equivariant cochain is not equivariant", witness=v)
    B = Subspace(M.ncols, images, f)
    return build_result(n, spaces, Z, B, M, equivariant=True)


def _stacked_subspace(spaces, act, modact) -> Subspace:
    even, odd = spaces
    E = equivariant_subspace(even, act, modact).subspace
    O = equivariant_subspace(odd, act, modact).subspace
    z = even.field.zero
    vecs = [v + (z,) * odd.dim for v in E.basis] + [(z,) * even.dim + v for v in O.basis]
    return Subspace(even.dim + odd.dim, vecs, even.field)


def equivariant_pairs(level: int, act: GroupAction, modact: EquivariantModuleAction) -> Subspace:
    """C_G^{2n} x C_G^{2n+1} in stacked coordinates."""
    a = act.algebra
    return _stacked_subspace(pair_spaces(level, a.dim, modact.rep.dimV, a.field), act, modact)
