"""Truncated one-parameter deformations and formal isomorphisms.

A jet of order N is f_t = [.,.] + f_1 t + ... + f_N t^N together with
g_t = {.,.,.} + g_1 t + ... + g_N t^N.  It is a deformation through order N
when (L[[t]], f_t, g_t) satisfies LY3-LY6 modulo t^{N+1}; the order-n part
of each axiom is checked separately, tagged by the axiom it comes from.

Isomorphism jets phi_t = id + phi_1 t + ... act by

    f'_t = phi_t^-1 f_t(phi_t ., phi_t .),   g'_t likewise,

so that the infinitesimal moves by delta^1 phi_1, and gauging by A then B
is gauging by the truncated product A B.

Multilinear maps are handled as numpy object arrays of exact scalars,
indexed (arguments..., output).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .algebra import LyAlgebra, adjoint_rep, require_verified
from .cochains import (
    Cochain,
    CochainPair,
    CochainSpace,
    cochain_to_matrix,
    cohomology,
    delta1_operator,
    delta23,
    matrix_to_cochain,
    pair_spaces,
)
from .equivariant import (
    EquivariantModuleAction,
    GroupAction,
    check_equivariant_compat,
    equivariant_cohomology,
    equivariant_subspace,
    induced_action,
)
from .errors import CocycleError, DimensionError, VerificationError
from .linalg import Matrix, solve


# ---------------------------------------------------------------------------
# tensors


def _tensor(c: Cochain) -> np.ndarray:
    sp = c.space
    T = np.empty((sp.d,) * sp.arity + (sp.dimV,), dtype=object)
    for args in product(range(sp.d), repeat=sp.arity):
        T[args] = c.value(args)
    return T


def _cochain(T: np.ndarray, space: CochainSpace) -> Cochain:
    return Cochain.from_function(space, lambda key: tuple(T[key]))


def _mat(M: Matrix) -> np.ndarray:
    A = np.empty(M.shape, dtype=object)
    for i, row in enumerate(M.rows):
        A[i, :] = row
    return A


def _zeros(shape, field) -> np.ndarray:
    A = np.empty(shape, dtype=object)
    A.fill(field.zero)
    return A


def _nonzero(T: np.ndarray) -> np.ndarray:
    """Mask over argument tuples where the output vector is nonzero."""
    return np.vectorize(bool, otypes=[bool])(T).any(axis=-1)


def _cyc(T: np.ndarray) -> np.ndarray:
    """Cyclic sum over the first three arguments."""
    rest = tuple(range(3, T.ndim))
    return T + np.transpose(T, (2, 0, 1) + rest) + np.transpose(T, (1, 2, 0) + rest)


# ---------------------------------------------------------------------------
# jets


@dataclass(frozen=True)
class DeformationJet:
    """(f_1..f_N, g_1..g_N) over an algebra; f_0, g_0 are its brackets."""

    algebra: LyAlgebra
    f: tuple
    g: tuple

    def __post_init__(self):
        a = self.algebra
        s2, s3 = pair_spaces(1, a.dim, a.dim, a.field)
        if len(self.f) != len(self.g) or not self.f:
            raise DimensionError("a jet needs f_1..f_N and g_1..g_N with N >= 1")
        for c in self.f:
            if c.space != s2:
                raise DimensionError(f"f component lives in {c.space}, expected {s2}")
        for c in self.g:
            if c.space != s3:
                raise DimensionError(f"g component lives in {c.space}, expected {s3}")
        object.__setattr__(self, "f", tuple(self.f))
        object.__setattr__(self, "g", tuple(self.g))

    @classmethod
    def null(cls, a: LyAlgebra, order: int) -> DeformationJet:
        s2, s3 = pair_spaces(1, a.dim, a.dim, a.field)
        return cls(a, (s2.zero(),) * order, (s3.zero(),) * order)

    @classmethod
    def from_pairs(cls, a: LyAlgebra, pairs) -> DeformationJet:
        pairs = list(pairs)
        return cls(a, tuple(p.f for p in pairs), tuple(p.g for p in pairs))

    @property
    def order(self) -> int:
        return len(self.f)

    def pair(self, i: int) -> CochainPair:
        """(f_i, g_i) for 1 <= i <= N."""
        return CochainPair(self.f[i - 1], self.g[i - 1])

    def lowest_nonzero(self) -> int | None:
        for i in range(1, self.order + 1):
            if not self.pair(i).is_zero():
                return i
        return None

    def is_null(self) -> bool:
        return self.lowest_nonzero() is None

    def tensors(self):
        """([f_0..f_N], [g_0..g_N]) as arrays."""
        a = self.algebra
        F0 = np.empty((a.dim,) * 3, dtype=object)
        G0 = np.empty((a.dim,) * 4, dtype=object)
        for x, y in product(range(a.dim), repeat=2):
            F0[x, y] = a.b[x][y]
            for z in range(a.dim):
                G0[x, y, z] = a.t[x][y][z]
        return [F0] + [_tensor(c) for c in self.f], [G0] + [_tensor(c) for c in self.g]


@dataclass(frozen=True)
class IsomorphismJet:
    """phi_0 = id, phi_1, ..., phi_N as matrices (column j = phi_i e_j)."""

    algebra: LyAlgebra
    phi: tuple

    def __post_init__(self):
        a = self.algebra
        phi = tuple(self.phi)
        if len(phi) < 2:
            raise DimensionError("an isomorphism jet needs phi_0 and at least phi_1")
        for m in phi:
            if m.shape != (a.dim, a.dim):
                raise DimensionError("isomorphism jet component has the wrong shape")
        if phi[0] != Matrix.identity(a.dim, a.field):
            raise DimensionError("phi_0 must be the identity")
        object.__setattr__(self, "phi", phi)

    @classmethod
    def identity(cls, a: LyAlgebra, order: int) -> IsomorphismJet:
        eye = Matrix.identity(a.dim, a.field)
        return cls(a, (eye,) + (Matrix.zeros(a.dim, a.dim, a.field),) * order)

    @classmethod
    def from_cochains(cls, a: LyAlgebra, cochains) -> IsomorphismJet:
        """phi_1..phi_N given as 1-cochains."""
        return cls(a, (Matrix.identity(a.dim, a.field),) + tuple(cochain_to_matrix(c) for c in cochains))

    @property
    def order(self) -> int:
        return len(self.phi) - 1

    def cochains(self) -> tuple:
        return tuple(matrix_to_cochain(m, self.algebra) for m in self.phi[1:])

    def inverse_series(self) -> tuple:
        """psi_0..psi_N with psi_t phi_t = id modulo t^{N+1}."""
        psi = [self.phi[0]]
        for k in range(1, self.order + 1):
            acc = Matrix.zeros(self.algebra.dim, self.algebra.dim, self.algebra.field)
            for i in range(1, k + 1):
                acc = acc + self.phi[i] @ psi[k - i]
            psi.append(-acc)
        return tuple(psi)


def compose(A: IsomorphismJet, B: IsomorphismJet) -> IsomorphismJet:
    """Truncated product A_t B_t; gauging by it equals gauging by A then B."""
    if A.algebra != B.algebra or A.order != B.order:
        raise DimensionError("composing isomorphism jets of different algebras or orders")
    a = A.algebra
    out = []
    for k in range(A.order + 1):
        acc = Matrix.zeros(a.dim, a.dim, a.field)
        for i in range(k + 1):
            acc = acc + A.phi[i] @ B.phi[k - i]
        out.append(acc)
    return IsomorphismJet(a, tuple(out))


@dataclass(frozen=True)
class JetReport:
    """Outcome of a jet check.

    On failure: ``order`` is the lowest failing order, ``equation`` the
    axiom whose order-n part fails (LY3..LY6) or ``"equivariance"``,
    ``witness`` the first offending basis tuple (labels) and ``residual``
    the value there.
    """

    ok: bool
    order: int | None = None
    equation: str | None = None
    witness: tuple = ()
    residual: tuple | None = None

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "jet: pass"
        return f"jet: FAIL {self.equation} at order {self.order}, ({', '.join(self.witness)})"


def order_residuals(F, G, n: int):
    """Order-n parts of LY3..LY6 for series with coefficient arrays F, G."""
    pairs = [(i, n - i) for i in range(n + 1)]
    ly3 = G[n] + sum(np.einsum("xyk,kzo->xyzo", F[j], F[i]) for i, j in pairs)
    ly4 = sum(np.einsum("xyk,kzuo->xyzuo", F[j], G[i]) for i, j in pairs)
    ly5 = sum(
        np.einsum("xyko,uvk->xyuvo", G[i], F[j])
        - np.einsum("xyuk,kvo->xyuvo", G[j], F[i])
        - np.einsum("xyvk,uko->xyuvo", G[j], F[i])
        for i, j in pairs
    )
    ly6 = sum(
        np.einsum("xyko,uvwk->xyuvwo", G[i], G[j])
        - np.einsum("xyuk,kvwo->xyuvwo", G[j], G[i])
        - np.einsum("xyvk,ukwo->xyuvwo", G[j], G[i])
        - np.einsum("xywk,uvko->xyuvwo", G[j], G[i])
        for i, j in pairs
    )
    return (("LY3", _cyc(ly3)), ("LY4", _cyc(ly4)), ("LY5", ly5), ("LY6", ly6))


def check_jet(j: DeformationJet, through: int | None = None) -> JetReport:
    """Order-n parts of LY3-LY6 for n = 1..N (or 1..through)."""
    a = j.algebra
    require_verified(a)
    if a.dim == 0:
        return JetReport(True)
    F, G = j.tensors()
    last = j.order if through is None else min(through, j.order)
    for n in range(1, last + 1):
        for name, R in order_residuals(F, G, n):
            mask = _nonzero(R)
            if mask.any():
                idx = tuple(int(i) for i in np.argwhere(mask)[0])
                return JetReport(False, n, name, tuple(a.labels[i] for i in idx), tuple(R[idx]))
    return JetReport(True)


def _require_jet(j: DeformationJet, through: int | None = None):
    rep = check_jet(j, through)
    if not rep:
        raise VerificationError(rep.describe(), rep)


def infinitesimal(j: DeformationJet) -> CochainPair:
    """(f_1, g_1), after confirming it satisfies the (2,3)-cocycle conditions."""
    _require_jet(j, 1)
    p = j.pair(1)
    res = delta23(p, j.algebra)
    if res:
        raise CocycleError(f"infinitesimal is not a cocycle: {res.witness}", residual=res.vector)
    return p


def gauge_transform(j: DeformationJet, iso: IsomorphismJet) -> DeformationJet:
    """phi_t^-1 f_t(phi_t ., phi_t .) and phi_t^-1 g_t(phi_t ., phi_t ., phi_t .) through order N."""
    a = j.algebra
    if iso.algebra != a:
        raise DimensionError("isomorphism jet over a different algebra")
    if iso.order != j.order:
        raise DimensionError(f"jet of order {j.order} gauged by an isomorphism of order {iso.order}")
    N = j.order
    F, G = j.tensors()
    P = [_mat(m) for m in iso.phi]
    Q = [_mat(m) for m in iso.inverse_series()]

    def times(series, mats, spec):
        # truncated product of two series, contracting one slot with phi_t
        out = []
        for m in range(N + 1):
            acc = _zeros(series[0].shape, a.field)
            for i in range(m + 1):
                acc = acc + np.einsum(spec, series[i], mats[m - i])
            out.append(acc)
        return out

    Fs = times(F, P, "klq,kx->xlq")
    Fs = times(Fs, P, "xlq,ly->xyq")
    Fs = times(Fs, Q, "xyq,oq->xyo")
    Gs = times(G, P, "klmq,kx->xlmq")
    Gs = times(Gs, P, "xlmq,ly->xymq")
    Gs = times(Gs, P, "xymq,mz->xyzq")
    Gs = times(Gs, Q, "xyzq,oq->xyzo")
    s2, s3 = pair_spaces(1, a.dim, a.dim, a.field)
    fs = [_cochain(Fs[n], s2) for n in range(1, N + 1)]
    gs = [_cochain(Gs[n], s3) for n in range(1, N + 1)]
    return DeformationJet(a, tuple(fs), tuple(gs))


def equivalent_first_order(j1: DeformationJet, j2: DeformationJet) -> Cochain | None:
    """A 1-cochain phi with delta^1 phi = (f_1 - f'_1, g_1 - g'_1), or None.

    The solution is canonical: free variables of the solve are zero.
    """
    if j1.algebra != j2.algebra:
        raise DimensionError("jets over different algebras")
    _require_jet(j1, 1)
    _require_jet(j2, 1)
    a = j1.algebra
    target = (j1.pair(1) - j2.pair(1)).vector
    sol = solve(delta1_operator(a), target)
    if sol is None:
        return None
    return Cochain(CochainSpace(1, a.dim, a.dim, a.field), sol)


# ---------------------------------------------------------------------------
# equivariant variants and trivialization


def _adjoint_modact(act: GroupAction) -> EquivariantModuleAction:
    r = adjoint_rep(act.algebra)
    modact = EquivariantModuleAction.adjoint(act, r)
    rep = check_equivariant_compat(act, modact)
    if not rep:
        raise VerificationError(rep.describe(), rep)
    return modact


def check_equivariant_jet(j: DeformationJet, act: GroupAction) -> JetReport:
    """check_jet plus equivariance of every f_i and g_i."""
    if act.algebra != j.algebra:
        raise DimensionError("action over a different algebra")
    rep = check_jet(j)
    if not rep:
        return rep
    modact = _adjoint_modact(act)
    G = act.group
    for i in range(1, j.order + 1):
        for c in (j.f[i - 1], j.g[i - 1]):
            sub = equivariant_subspace(c.space, act, modact).subspace
            if c.coeffs in sub:
                continue
            for g in range(G.order):
                moved = induced_action(c.space, act, modact, g).apply(c.coeffs)
                res = tuple(x - y for x, y in zip(moved, c.coeffs))
                if any(res):
                    name = "f" if c.arity == 2 else "g"
                    return JetReport(False, i, "equivariance", (G.labels[g], f"{name}{i}"), res)
    # the infinitesimal is then an equivariant cocycle
    infinitesimal(j)
    return JetReport(True)


@dataclass(frozen=True)
class Trivialization:
    """Result of the trivialization loop.

    ``trivial`` is True when gauging by ``iso`` makes the jet null through
    its order.  Otherwise ``order`` is where the solve failed, ``jet`` the
    partially gauged jet there (null below ``order``) and ``obstruction``
    the canonical representative of the class of (f_r, g_r): its normal
    form modulo coboundaries.  ``steps`` lists (r, h_r) per gauge step.
    """

    trivial: bool
    iso: IsomorphismJet
    steps: tuple
    jet: DeformationJet
    order: int | None = None
    obstruction: CochainPair | None = None


def trivialize(j: DeformationJet, act: GroupAction | None = None) -> Trivialization:
    """Gauge away the lowest nonzero order repeatedly, by id - h_r t^r.

    With an action, every h_r is taken equivariant.
    """
    a = j.algebra
    _require_jet(j)
    D1 = delta1_operator(a)
    c1 = CochainSpace(1, a.dim, a.dim, a.field)
    if act is not None:
        rep = check_equivariant_jet(j, act)
        if not rep:
            raise VerificationError(rep.describe(), rep)
        modact = _adjoint_modact(act)
        basis = equivariant_subspace(c1, act, modact).subspace.basis
        # columns: delta^1 of each equivariant basis 1-cochain
        A = Matrix.from_columns([D1.apply(v) for v in basis], D1.nrows, a.field) if basis else None
    iso = IsomorphismJet.identity(a, j.order)
    cur = j
    steps = []
    while True:
        r = cur.lowest_nonzero()
        if r is None:
            return Trivialization(True, iso, tuple(steps), cur)
        p = cur.pair(r)
        res = delta23(p, a)
        if res:
            raise CocycleError(f"lowest order term is not a cocycle: {res.witness}", residual=res.vector)
        v = p.vector
        if act is None:
            h = solve(D1, v)
        else:
            coef = solve(A, v) if A is not None else (None if any(v) else ())
            h = None
            if coef is not None:
                h = tuple(sum((c * b[k] for c, b in zip(coef, basis)), a.field.zero) for k in range(c1.dim))
        if h is None:
            if act is None:
                result = cohomology(a, adjoint_rep(a), 1)
            else:
                result = equivariant_cohomology(a, modact.rep, act, modact, 1)
            cls = result.pair(result.B.reduce(v))
            return Trivialization(False, iso, tuple(steps), cur, r, cls)
        hc = Cochain(c1, h)
        steps.append((r, hc))
        phi = [Matrix.identity(a.dim, a.field)] + [Matrix.zeros(a.dim, a.dim, a.field)] * j.order
        phi[r] = -cochain_to_matrix(hc)
        step = IsomorphismJet(a, tuple(phi))
        cur = gauge_transform(cur, step)
        iso = compose(iso, step)
        if cur.lowest_nonzero() is not None and cur.lowest_nonzero() <= r:
            raise CocycleError(f"gauge step failed to clear order {r}", residual=cur.pair(r).vector)


@dataclass(frozen=True)
class RigidityReport:
    dims: tuple
    rigid: bool
    equivariant: bool

    @property
    def verdict(self) -> str:
        if self.rigid:
            return "rigid (second and third cohomology vanish)"
        return "not provably rigid by the cohomological criterion"


def rigidity_probe(a: LyAlgebra, act: GroupAction | None = None) -> RigidityReport:
    """Vanishing of H^2 x H^3 (or its equivariant version) implies rigidity.

    The converse is not claimed.
    """
    require_verified(a)
    if act is None:
        res = cohomology(a, adjoint_rep(a), 1)
    else:
        modact = _adjoint_modact(act)
        res = equivariant_cohomology(a, modact.rep, act, modact, 1)
    return RigidityReport(res.dims, res.dims == (0, 0), act is not None)
