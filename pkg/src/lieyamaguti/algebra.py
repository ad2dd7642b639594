"""Lie-Yamaguti algebras, their representations, and structure checks.

An algebra is stored as full structure-constant tables over a fixed basis:
``b[i][j]`` is the coordinate vector of [e_i, e_j] and ``t[i][j][k]`` the
coordinate vector of {e_i, e_j, e_k}.  All checks are exhaustive over basis
tuples, which is enough by multilinearity.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .errors import DimensionError, UnverifiedError, VerificationError
from .fields import QQ, Field
from .linalg import Matrix


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exhaustive check.

    On failure ``axiom`` names the first violated condition, ``witness``
    gives the offending tuple as labels (``indices`` as integers) and
    ``residual`` is left-hand side minus right-hand side on that tuple: a
    coordinate tuple for vector-valued identities, a Matrix for operator
    identities.
    """

    ok: bool
    subject: str
    axiom: str | None = None
    witness: tuple = ()
    indices: tuple = ()
    residual: object = None
    message: str = ""

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"{self.subject}: pass"
        text = f"{self.subject}: FAIL {self.axiom} at ({', '.join(self.witness)})"
        if self.message:
            text += f" -- {self.message}"
        return text


def _passed(subject: str) -> CheckReport:
    return CheckReport(True, subject)


def _vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _vscale(c, u):
    return tuple(c * a for a in u)


class LyAlgebra:
    """Finite-dimensional Lie-Yamaguti algebra given by structure constants."""

    def __init__(self, dim: int, binary, ternary, field: Field = QQ, labels=None):
        """``binary[i][j]`` and ``ternary[i][j][k]`` are length-``dim`` vectors."""
        if dim < 0:
            raise DimensionError("negative dimension")
        self.field = field
        self.dim = dim
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
        if len(self.labels) != dim or len(set(self.labels)) != dim:
            raise DimensionError("need one distinct label per basis vector")
        try:
            self.b = tuple(
                tuple(tuple(field(x) for x in binary[i][j]) for j in range(dim)) for i in range(dim)
            )
            self.t = tuple(
                tuple(
                    tuple(tuple(field(x) for x in ternary[i][j][k]) for k in range(dim))
                    for j in range(dim)
                )
                for i in range(dim)
            )
        except (IndexError, TypeError) as exc:
            raise DimensionError(f"malformed structure constants: {exc}") from None
        for i, j in product(range(dim), repeat=2):
            if len(self.b[i][j]) != dim or any(len(self.t[i][j][k]) != dim for k in range(dim)):
                raise DimensionError("structure constant vectors must have length dim")
        self._verified = False

    @classmethod
    def from_constants(cls, dim, binary=(), ternary=(), field: Field = QQ, labels=None) -> LyAlgebra:
        """Build from independent constants, filling in the antisymmetric partners.

        ``binary`` holds entries ``(i, j, k, c)`` meaning [e_i, e_j] has
        e_k-coefficient c; ``ternary`` holds ``(i, j, k, l, c)``.  Both
        require i < j.
        """
        b = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        t = [[[[field.zero] * dim for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in binary:
            _check_index(dim, i, j, k)
            if not i < j:
                raise DimensionError(f"independent binary constant needs i < j, got ({i}, {j})")
            c = field(c)
            b[i][j][k] += c
            b[j][i][k] -= c
        for i, j, k, l, c in ternary:
            _check_index(dim, i, j, k, l)
            if not i < j:
                raise DimensionError(f"independent ternary constant needs i < j, got ({i}, {j})")
            c = field(c)
            t[i][j][k][l] += c
            t[j][i][k][l] -= c
        return cls(dim, b, t, field, labels)

    @classmethod
    def from_table(cls, dim, binary=(), ternary=(), field: Field = QQ, labels=None) -> LyAlgebra:
        """Build from a raw table of entries; nothing is filled in."""
        b = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        t = [[[[field.zero] * dim for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in binary:
            _check_index(dim, i, j, k)
            b[i][j][k] += field(c)
        for i, j, k, l, c in ternary:
            _check_index(dim, i, j, k, l)
            t[i][j][k][l] += field(c)
        return cls(dim, b, t, field, labels)

    @classmethod
    def abelian(cls, dim: int, field: Field = QQ) -> LyAlgebra:
        return cls.from_constants(dim, field=field)

    # -- evaluation -------------------------------------------------------

    def unit(self, i: int) -> tuple:
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(self.dim))

    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    def bracket(self, x, y) -> tuple:
        out = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, v in enumerate(self.b[i][j]):
                    if v:
                        out[k] += c * v
        return tuple(out)

    def triple(self, x, y, z) -> tuple:
        out = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                cij = xi * yj
                for k, zk in enumerate(z):
                    if not zk:
                        continue
                    c = cij * zk
                    for l, v in enumerate(self.t[i][j][k]):
                        if v:
                            out[l] += c * v
        return tuple(out)

    # -- bookkeeping ------------------------------------------------------

    def is_antisymmetric(self) -> bool:
        """Whether the tables satisfy LY1/LY2 at the constant level."""
        r = range(self.dim)
        return all(
            self.b[i][j][k] == -self.b[j][i][k] for i, j, k in product(r, repeat=3)
        ) and all(self.t[i][j][k][l] == -self.t[j][i][k][l] for i, j, k, l in product(r, repeat=4))

    def independent_constants(self):
        """Sparse (binary, ternary) entries with i < j; requires antisymmetric tables."""
        r = range(self.dim)
        binary = [(i, j, k, self.b[i][j][k]) for i, j, k in product(r, repeat=3) if i < j and self.b[i][j][k]]
        ternary = [
            (i, j, k, l, self.t[i][j][k][l])
            for i, j, k, l in product(r, repeat=4)
            if i < j and self.t[i][j][k][l]
        ]
        return binary, ternary

    def raw_constants(self):
        r = range(self.dim)
        binary = [(i, j, k, self.b[i][j][k]) for i, j, k in product(r, repeat=3) if self.b[i][j][k]]
        ternary = [
            (i, j, k, l, self.t[i][j][k][l]) for i, j, k, l in product(r, repeat=4) if self.t[i][j][k][l]
        ]
        return binary, ternary

    @property
    def verified(self) -> bool:
        return self._verified

    def verify(self) -> LyAlgebra:
        """Run :func:`check_lya`; tag and return self, or raise VerificationError."""
        if not self._verified:
            report = check_lya(self)
            if not report:
                raise VerificationError(report.describe(), report)
            self._verified = True
        return self

    def _key(self):
        return (self.field, self.dim, self.b, self.t)

    def __eq__(self, other):
        if not isinstance(other, LyAlgebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"LyAlgebra(dim={self.dim}, {self.field})"


def _check_index(dim, *idx):
    for i in idx:
        if not (isinstance(i, int) and 0 <= i < dim):
            raise DimensionError(f"basis index {i} out of range for dimension {dim}")


def require_verified(*objs):
    for obj in objs:
        if not getattr(obj, "verified", False):
            raise UnverifiedError(f"{obj!r} has not been verified")


# ---------------------------------------------------------------------------
# axioms


def ly_residuals(a: LyAlgebra):
    """Yield (axiom, index tuple, residual vector) for every basis tuple.

    Order: LY1 on pairs, LY2 on triples, LY3 on triples, LY4, LY5 on
    quadruples, LY6 on quintuples; tuples lexicographic within each axiom.
    """
    d = a.dim
    e = [a.unit(i) for i in range(d)]
    br, tr = a.bracket, a.triple
    for x, y in product(range(d), repeat=2):
        yield "LY1", (x, y), _vadd(a.b[x][y], a.b[y][x])
    for x, y, z in product(range(d), repeat=3):
        yield "LY2", (x, y, z), _vadd(a.t[x][y][z], a.t[y][x][z])

    def ly3(x, y, z):
        return _vadd(br(a.b[x][y], e[z]), a.t[x][y][z])

    for x, y, z in product(range(d), repeat=3):
        yield "LY3", (x, y, z), _vadd(_vadd(ly3(x, y, z), ly3(y, z, x)), ly3(z, x, y))

    def ly4(x, y, z, u):
        return tr(a.b[x][y], e[z], e[u])

    for x, y, z, u in product(range(d), repeat=4):
        yield "LY4", (x, y, z, u), _vadd(_vadd(ly4(x, y, z, u), ly4(y, z, x, u)), ly4(z, x, y, u))
    for x, y, u, v in product(range(d), repeat=4):
        lhs = tr(e[x], e[y], a.b[u][v])
        rhs = _vadd(br(a.t[x][y][u], e[v]), br(e[u], a.t[x][y][v]))
        yield "LY5", (x, y, u, v), _vsub(lhs, rhs)
    for x, y, u, v, w in product(range(d), repeat=5):
        lhs = tr(e[x], e[y], a.t[u][v][w])
        rhs = _vadd(
            _vadd(tr(a.t[x][y][u], e[v], e[w]), tr(e[u], a.t[x][y][v], e[w])),
            tr(e[u], e[v], a.t[x][y][w]),
        )
        yield "LY6", (x, y, u, v, w), _vsub(lhs, rhs)


def check_lya(a: LyAlgebra) -> CheckReport:
    """Check LY1-LY6 exhaustively; report the first violation."""
    for axiom, idx, res in ly_residuals(a):
        if any(res):
            return CheckReport(
                False,
                "Lie-Yamaguti axioms",
                axiom,
                tuple(a.labels[i] for i in idx),
                idx,
                res,
            )
    return _passed("Lie-Yamaguti axioms")


# ---------------------------------------------------------------------------
# representations


class Representation:
    """Representation (rho, D, theta) of an algebra on V = F^dimV.

    ``rho[i]`` is the matrix of rho(e_i); ``D[i][j]`` and ``theta[i][j]``
    those of D(e_i, e_j) and theta(e_i, e_j).  No symmetry is imposed on D
    or theta; R1-R7 decide.
    """

    def __init__(self, algebra: LyAlgebra, dimV: int, rho, D, theta, *, adjoint: bool = False):
        d = algebra.dim
        self.algebra = algebra
        self.field = algebra.field
        self.dimV = dimV
        try:
            self.rho = tuple(rho[i] for i in range(d))
            self.D = tuple(tuple(D[i][j] for j in range(d)) for i in range(d))
            self.theta = tuple(tuple(theta[i][j] for j in range(d)) for i in range(d))
        except (IndexError, TypeError) as exc:
            raise DimensionError(f"malformed representation data: {exc}") from None
        mats = list(self.rho) + [m for row in self.D for m in row] + [m for row in self.theta for m in row]
        for m in mats:
            if not isinstance(m, Matrix) or m.shape != (dimV, dimV):
                raise DimensionError(f"representation matrices must be {dimV}x{dimV}")
            if m.field != self.field:
                raise DimensionError(f"representation over {m.field} for algebra over {self.field}")
        self.is_adjoint = adjoint
        self._verified = False

    @classmethod
    def zero(cls, algebra: LyAlgebra, dimV: int) -> Representation:
        z = Matrix.zeros(dimV, dimV, algebra.field)
        d = algebra.dim
        return cls(algebra, dimV, [z] * d, [[z] * d] * d, [[z] * d] * d)

    def rho_of(self, x) -> Matrix:
        return _combine(self.field, self.dimV, ((c, self.rho[i]) for i, c in enumerate(x) if c))

    def D_of(self, x, y) -> Matrix:
        return _combine(
            self.field,
            self.dimV,
            ((xi * yj, self.D[i][j]) for i, xi in enumerate(x) if xi for j, yj in enumerate(y) if yj),
        )

    def theta_of(self, x, y) -> Matrix:
        return _combine(
            self.field,
            self.dimV,
            ((xi * yj, self.theta[i][j]) for i, xi in enumerate(x) if xi for j, yj in enumerate(y) if yj),
        )

    @property
    def verified(self) -> bool:
        return self._verified

    def verify(self) -> Representation:
        if not self._verified:
            report = check_representation(self)
            if not report:
                raise VerificationError(report.describe(), report)
            self._verified = True
        return self

    def _key(self):
        return (self.algebra, self.dimV, self.rho, self.D, self.theta)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        kind = "adjoint " if self.is_adjoint else ""
        return f"Representation({kind}dimV={self.dimV})"


def _combine(field, n, terms) -> Matrix:
    acc = [[field.zero] * n for _ in range(n)]
    for c, m in terms:
        for r, row in enumerate(m.rows):
            for s, v in enumerate(row):
                if v:
                    acc[r][s] += c * v
    return Matrix._raw(tuple(tuple(r) for r in acc), field, n)


def adjoint_rep(a: LyAlgebra) -> Representation:
    """rho(x)y = [x, y], D(x, y)z = {x, y, z}, theta(x, y)z = {z, x, y}."""
    require_verified(a)
    d, f = a.dim, a.field
    rho = [Matrix.from_columns([a.b[i][j] for j in range(d)], d, f) for i in range(d)]
    D = [[Matrix.from_columns([a.t[i][j][l] for l in range(d)], d, f) for j in range(d)] for i in range(d)]
    theta = [[Matrix.from_columns([a.t[l][i][j] for l in range(d)], d, f) for j in range(d)] for i in range(d)]
    return Representation(a, d, rho, D, theta, adjoint=True).verify()


def representation_residuals(r: Representation):
    """Yield (condition, index tuple, residual matrix) over all basis tuples."""
    a = r.algebra
    d = a.dim
    rho, D, th = r.rho, r.D, r.theta
    for x, y in product(range(d), repeat=2):
        res = D[x][y] - th[y][x] + th[x][y] + r.rho_of(a.b[x][y]) - rho[x] @ rho[y] + rho[y] @ rho[x]
        yield "R1", (x, y), res
    for x, y, z in product(range(d), repeat=3):
        e = a.unit
        res = r.D_of(a.b[x][y], e(z)) + r.D_of(a.b[y][z], e(x)) + r.D_of(a.b[z][x], e(y))
        yield "R2", (x, y, z), res
    for x, y, z in product(range(d), repeat=3):
        res = r.theta_of(a.b[x][y], a.unit(z)) - th[x][z] @ rho[y] + th[y][z] @ rho[x]
        yield "R3", (x, y, z), res
    for x, y, z in product(range(d), repeat=3):
        res = D[x][y] @ rho[z] - rho[z] @ D[x][y] - r.rho_of(a.t[x][y][z])
        yield "R4", (x, y, z), res
    for x, y, z in product(range(d), repeat=3):
        res = r.theta_of(a.unit(x), a.b[y][z]) - rho[y] @ th[x][z] + rho[z] @ th[x][y]
        yield "R5", (x, y, z), res
    for x, y, u, v in product(range(d), repeat=4):
        res = (
            D[x][y] @ th[u][v]
            - th[u][v] @ D[x][y]
            - r.theta_of(a.t[x][y][u], a.unit(v))
            - r.theta_of(a.unit(u), a.t[x][y][v])
        )
        yield "R6", (x, y, u, v), res
    for x, y, z, u in product(range(d), repeat=4):
        res = (
            r.theta_of(a.unit(x), a.t[y][z][u])
            - th[z][u] @ th[x][y]
            + th[y][u] @ th[x][z]
            - D[y][z] @ th[x][u]
        )
        yield "R7", (x, y, z, u), res


def check_representation(r: Representation) -> CheckReport:
    """Check R1-R7 as matrix identities on basis tuples."""
    labels = r.algebra.labels
    for cond, idx, res in representation_residuals(r):
        if not res.is_zero():
            return CheckReport(False, "representation", cond, tuple(labels[i] for i in idx), idx, res)
    return _passed("representation")


# ---------------------------------------------------------------------------
# Leibniz algebras


class LeibnizAlgebra:
    """Left Leibniz algebra: ``c[i][j]`` is the vector e_i . e_j."""

    def __init__(self, dim: int, constants, field: Field = QQ, labels=None):
        self.dim = dim
        self.field = field
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
        try:
            self.c = tuple(tuple(tuple(field(x) for x in constants[i][j]) for j in range(dim)) for i in range(dim))
        except (IndexError, TypeError) as exc:
            raise DimensionError(f"malformed Leibniz constants: {exc}") from None
        if any(len(self.c[i][j]) != dim for i in range(dim) for j in range(dim)):
            raise DimensionError("Leibniz constant vectors must have length dim")

    @classmethod
    def from_entries(cls, dim, entries, field: Field = QQ, labels=None) -> LeibnizAlgebra:
        """``entries``: (i, j, k, value) meaning e_i . e_j has e_k-coefficient value."""
        c = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, v in entries:
            _check_index(dim, i, j, k)
            c[i][j][k] += field(v)
        return cls(dim, c, field, labels)

    def product(self, x, y) -> tuple:
        out = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for k, v in enumerate(self.c[i][j]):
                    if v:
                        out[k] += xi * yj * v
        return tuple(out)

    def unit(self, i):
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(self.dim))


def check_leibniz(lz: LeibnizAlgebra) -> CheckReport:
    """a.(b.c) = (a.b).c + b.(a.c) on all basis triples."""
    p, e = lz.product, lz.unit
    for a, b, c in product(range(lz.dim), repeat=3):
        lhs = p(e(a), lz.c[b][c])
        rhs = _vadd(p(lz.c[a][b], e(c)), p(e(b), lz.c[a][c]))
        res = _vsub(lhs, rhs)
        if any(res):
            return CheckReport(
                False, "Leibniz identity", "Leibniz", tuple(lz.labels[i] for i in (a, b, c)), (a, b, c), res
            )
    return _passed("Leibniz identity")


def induced_brackets(lz: LeibnizAlgebra) -> LyAlgebra:
    """[a, b] = a.b - b.a and {a, b, c} = -(a.b).c, unchecked."""
    d, f = lz.dim, lz.field
    b = [[_vsub(lz.c[i][j], lz.c[j][i]) for j in range(d)] for i in range(d)]
    t = [
        [[_vscale(-f.one, lz.product(lz.c[i][j], lz.unit(k))) for k in range(d)] for j in range(d)]
        for i in range(d)
    ]
    return LyAlgebra(d, b, t, f, lz.labels)


def leibniz_to_lya(lz: LeibnizAlgebra) -> LyAlgebra:
    """The Lie-Yamaguti algebra of a Leibniz algebra, after checking both structures."""
    report = check_leibniz(lz)
    if not report:
        raise VerificationError(report.describe(), report)
    a = induced_brackets(lz)
    report = check_lya(a)
    if not report:
        raise VerificationError(f"induced structure is not Lie-Yamaguti: {report.describe()}", report)
    a._verified = True
    return a


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class LinearMapCandidate:
    """A linear map source -> target; column j is the image of source e_j."""

    source: LyAlgebra
    target: LyAlgebra
    matrix: Matrix = dc_field(compare=False)


def check_morphism(m: LinearMapCandidate) -> CheckReport:
    """phi[x, y] = [phi x, phi y]' and phi{x, y, z} = {phi x, phi y, phi z}'."""
    src, tgt, M = m.source, m.target, m.matrix
    require_verified(src, tgt)
    if M.shape != (tgt.dim, src.dim):
        raise DimensionError(f"map matrix {M.shape} for {src.dim}-dim source and {tgt.dim}-dim target")
    img = M.columns()
    for x, y in product(range(src.dim), repeat=2):
        res = _vsub(M.apply(src.b[x][y]), tgt.bracket(img[x], img[y]))
        if any(res):
            return CheckReport(
                False, "morphism", "binary", tuple(src.labels[i] for i in (x, y)), (x, y), res
            )
    for x, y, z in product(range(src.dim), repeat=3):
        res = _vsub(M.apply(src.t[x][y][z]), tgt.triple(img[x], img[y], img[z]))
        if any(res):
            return CheckReport(
                False, "morphism", "ternary", tuple(src.labels[i] for i in (x, y, z)), (x, y, z), res
            )
    return _passed("morphism")
