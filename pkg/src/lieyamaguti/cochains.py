"""Cochain spaces, coboundary operators and cohomology.

An n-cochain vanishes whenever the arguments in a consecutive slot pair
(1,2), (3,4), ... coincide, so it is determined by its values on tuples
whose pair slots are strictly increasing.  Those tuples, together with a
target index, form the canonical basis of C^n(L, V), ordered
lexicographically.

Operators are assembled as exact matrices by evaluating their defining
formulas on basis tuples, with the input cochain kept symbolic: a value
f(e_x1, ..., e_xn) is a signed coordinate of the unknown input.  Each
output coordinate therefore becomes a sparse linear form, i.e. a matrix
row.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from math import comb

from .algebra import LyAlgebra, Representation, adjoint_rep, require_verified
from .errors import (
    CocycleError,
    ContainmentError,
    DimensionError,
    FieldMismatchError,
    IncompatibleRepresentationError,
    UnsupportedConfigurationError,
)
from .fields import QQ, Field
from .linalg import Matrix, Subspace, complement_in, rank, nullspace, image, solve


class CochainSpace:
    """C^n(L, V) for a d-dimensional L and dimV-dimensional V.

    Basis tuples are (a1, b1, ..., am, bm[, r], v) with a_k < b_k, m = n // 2,
    r present for odd n, v the target index.
    """

    def __init__(self, arity: int, d: int, dimV: int, field: Field = QQ):
        if arity < 1:
            raise DimensionError("cochain arity must be at least 1")
        self.arity = arity
        self.d = d
        self.dimV = dimV
        self.field = field
        pairs = list(combinations(range(d), 2))
        keys = []
        for ps in product(pairs, repeat=arity // 2):
            flat = tuple(x for p in ps for x in p)
            if arity % 2:
                keys.extend(flat + (r,) for r in range(d))
            else:
                keys.append(flat)
        self.keys = tuple(keys)
        self.key_index = {k: i for i, k in enumerate(self.keys)}

    @property
    def dim(self) -> int:
        return len(self.keys) * self.dimV

    @staticmethod
    def formula_dim(arity: int, d: int, dimV: int) -> int:
        return comb(d, 2) ** (arity // 2) * d ** (arity % 2) * dimV

    def signature(self) -> tuple:
        return (self.arity, self.d, self.dimV, str(self.field))

    def basis_tuples(self) -> list[tuple]:
        return [k + (v,) for k in self.keys for v in range(self.dimV)]

    def index(self, key: tuple, v: int) -> int:
        return self.key_index[key] * self.dimV + v

    def lookup(self, args) -> tuple[int, int] | None:
        """(sign, key index) of the basis tuple matching ``args``, or None if zero."""
        args = list(args)
        sign = 1
        for s in range(0, 2 * (self.arity // 2), 2):
            a, b = args[s], args[s + 1]
            if a == b:
                return None
            if a > b:
                args[s], args[s + 1] = b, a
                sign = -sign
        return sign, self.key_index[tuple(args)]

    def zero(self) -> Cochain:
        return Cochain(self, (self.field.zero,) * self.dim)

    def _key(self):
        return (self.arity, self.d, self.dimV, self.field)

    def __eq__(self, other):
        if not isinstance(other, CochainSpace):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"CochainSpace(n={self.arity}, d={self.d}, dimV={self.dimV}, {self.field})"


@dataclass(frozen=True)
class Cochain:
    """Coordinates of a cochain against ``space``'s canonical basis."""

    space: CochainSpace
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.space.dim:
            raise DimensionError(f"{len(self.coeffs)} coefficients for a {self.space.dim}-dim space")
        f = self.space.field
        object.__setattr__(self, "coeffs", tuple(f(c) for c in self.coeffs))

    @classmethod
    def from_function(cls, space: CochainSpace, fn) -> Cochain:
        """Cochain whose value at a canonical basis tuple is ``fn(args)`` (a V-vector).

        The caller vouches that ``fn`` satisfies the vanishing condition.
        """
        coeffs = []
        for key in space.keys:
            val = fn(key)
            if len(val) != space.dimV:
                raise DimensionError("function value has wrong length")
            coeffs.extend(val)
        return cls(space, tuple(coeffs))

    @property
    def arity(self) -> int:
        return self.space.arity

    def value(self, key_args) -> tuple:
        """Value at a tuple of basis indices."""
        hit = self.space.lookup(key_args)
        dv = self.space.dimV
        if hit is None:
            return (self.space.field.zero,) * dv
        sign, k = hit
        block = self.coeffs[k * dv : (k + 1) * dv]
        return block if sign > 0 else tuple(-c for c in block)

    def __call__(self, *args) -> tuple:
        return evaluate(self, args)

    def _same(self, other: Cochain):
        if self.space != other.space:
            raise DimensionError(f"{self.space} combined with {other.space}")

    def __add__(self, other: Cochain) -> Cochain:
        self._same(other)
        return Cochain(self.space, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Cochain) -> Cochain:
        self._same(other)
        return Cochain(self.space, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Cochain:
        return Cochain(self.space, tuple(-a for a in self.coeffs))

    def __rmul__(self, c) -> Cochain:
        c = self.space.field(c)
        return Cochain(self.space, tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_record(self) -> dict:
        f = self.space.field
        n, d, dimV, fs = self.space.signature()
        return {"arity": n, "d": d, "dimV": dimV, "field": fs, "coefficients": [f.encode(c) for c in self.coeffs]}

    @classmethod
    def from_record(cls, rec: dict) -> Cochain:
        field = Field.from_string(rec["field"])
        space = CochainSpace(rec["arity"], rec["d"], rec["dimV"], field)
        return cls(space, tuple(field(c) if not isinstance(c, str) else field.parse(c) for c in rec["coefficients"]))


def evaluate(c: Cochain, args) -> tuple:
    """Multilinear evaluation of ``c`` at algebra coordinate vectors ``args``."""
    space = c.space
    if len(args) != space.arity:
        raise DimensionError(f"{len(args)} arguments for a {space.arity}-cochain")
    f = space.field
    for a in args:
        if len(a) != space.d:
            raise DimensionError("argument vector has wrong length")
    supports = [[(i, f(x)) for i, x in enumerate(a) if x] for a in args]
    out = [f.zero] * space.dimV
    dv = space.dimV
    for choice in product(*supports):
        idx = tuple(i for i, _ in choice)
        hit = space.lookup(idx)
        if hit is None:
            continue
        sign, k = hit
        coef = f.one if sign > 0 else -f.one
        for _, x in choice:
            coef = coef * x
        block = c.coeffs[k * dv : (k + 1) * dv]
        for w in range(dv):
            if block[w]:
                out[w] += coef * block[w]
    return tuple(out)


@dataclass(frozen=True)
class CochainPair:
    """(f, g) in C^{2n}(L, V) x C^{2n+1}(L, V)."""

    f: Cochain
    g: Cochain

    def __post_init__(self):
        sf, sg = self.f.space, self.g.space
        if sf.arity % 2 or sg.arity != sf.arity + 1:
            raise DimensionError(f"pair arities must be (2n, 2n+1), got ({sf.arity}, {sg.arity})")
        if (sf.d, sf.dimV, sf.field) != (sg.d, sg.dimV, sg.field):
            raise DimensionError("pair components over different algebras or modules")

    @property
    def level(self) -> int:
        return self.f.arity // 2

    @property
    def vector(self) -> tuple:
        return self.f.coeffs + self.g.coeffs

    @classmethod
    def from_vector(cls, even: CochainSpace, odd: CochainSpace, vec) -> CochainPair:
        vec = tuple(vec)
        if len(vec) != even.dim + odd.dim:
            raise DimensionError("stacked vector has wrong length")
        return cls(Cochain(even, vec[: even.dim]), Cochain(odd, vec[even.dim :]))

    def __add__(self, other: CochainPair) -> CochainPair:
        return CochainPair(self.f + other.f, self.g + other.g)

    def __sub__(self, other: CochainPair) -> CochainPair:
        return CochainPair(self.f - other.f, self.g - other.g)

    def __rmul__(self, c) -> CochainPair:
        return CochainPair(c * self.f, c * self.g)

    def is_zero(self) -> bool:
        return self.f.is_zero() and self.g.is_zero()


def pair_spaces(level: int, d: int, dimV: int, field: Field) -> tuple[CochainSpace, CochainSpace]:
    return CochainSpace(2 * level, d, dimV, field), CochainSpace(2 * level + 1, d, dimV, field)


# ---------------------------------------------------------------------------
# symbolic evaluation: a "form" is a list (one per V-component) of sparse rows
# {input coordinate: coefficient}


def _zero_form(dv):
    return [{} for _ in range(dv)]


def _add_into(acc, form, c):
    for w, row in enumerate(form):
        target = acc[w]
        for col, v in row.items():
            s = target.get(col)
            s = c * v if s is None else s + c * v
            if s:
                target[col] = s
            else:
                target.pop(col, None)


def _columns(M: Matrix):
    """Sparse columns of M: for each input index u, the nonzero (w, M[w][u])."""
    return (M.nrows, tuple(tuple((w, row[u]) for w, row in enumerate(M.rows) if row[u]) for u in range(M.ncols)))


def _apply(M, form):
    """Form of the matrix M (in :func:`_columns` shape) applied to ``form``."""
    nrows, cols = M
    out = _zero_form(nrows)
    for u, src in enumerate(form):
        if not src:
            continue
        for w, m in cols[u]:
            target = out[w]
            for col, v in src.items():
                s = target.get(col)
                s = m * v if s is None else s + m * v
                if s:
                    target[col] = s
                else:
                    target.pop(col, None)
    return out


class _Unknown:
    """Symbolic cochain occupying coordinates offset .. offset + space.dim."""

    def __init__(self, space: CochainSpace, offset: int):
        self.space = space
        self.offset = offset
        one = space.field.one
        self._pos, self._neg = one, -one

    def at(self, args):
        hit = self.space.lookup(args)
        dv = self.space.dimV
        if hit is None:
            return _zero_form(dv)
        sign, k = hit
        base = self.offset + k * dv
        s = self._pos if sign > 0 else self._neg
        return [{base + w: s} for w in range(dv)]


def _sparse_tables(a: LyAlgebra):
    d = a.dim
    sb = [[{k: v for k, v in enumerate(a.b[i][j]) if v} for j in range(d)] for i in range(d)]
    st = [
        [[{l: v for l, v in enumerate(a.t[i][j][k]) if v} for k in range(d)] for j in range(d)]
        for i in range(d)
    ]
    return sb, st


def _cache(obj, key, build):
    store = obj.__dict__.setdefault("_op_cache", {})
    if key not in store:
        store[key] = build()
    return store[key]


def _rows_to_matrix(rows, ncols, field) -> Matrix:
    zero = field.zero
    dense = []
    for row in rows:
        r = [zero] * ncols
        for c, v in row.items():
            r[c] = v
        dense.append(tuple(r))
    return Matrix._raw(tuple(dense), field, ncols)


def _form_value(form, vec, field):
    return tuple(sum((v * vec[c] for c, v in row.items()), field.zero) for row in form)


# ---------------------------------------------------------------------------
# the general coboundary operator


def _delta_forms(rep: Representation, level: int):
    """Functions X -> form for delta_I (arity 2n+2) and delta_II (arity 2n+3)."""
    a = rep.algebra
    n = level
    d, dv, field = a.dim, rep.dimV, a.field
    sb, st = _sparse_tables(a)
    even, odd = pair_spaces(n, d, dv, field)
    F = _Unknown(even, 0)
    G = _Unknown(odd, even.dim)
    one = field.one
    rho = [_columns(m) for m in rep.rho]
    D = [[_columns(m) for m in row] for row in rep.D]
    theta = [[_columns(m) for m in row] for row in rep.theta]

    def sgn(e):
        return one if e % 2 == 0 else -one

    def delta_I(X):
        out = _zero_form(dv)
        head = X[: 2 * n]
        p, q = X[2 * n], X[2 * n + 1]
        _add_into(out, _apply(rho[p], G.at(head + (q,))), one)
        _add_into(out, _apply(rho[q], G.at(head + (p,))), -one)
        for k, c in sb[p][q].items():
            _add_into(out, G.at(head + (k,)), -c)
        for k in range(1, n + 1):
            i0 = 2 * k - 2
            x, y = X[i0], X[i0 + 1]
            rest = X[:i0] + X[i0 + 2 :]
            _add_into(out, _apply(D[x][y], F.at(rest)), sgn(n + k + 1))
            s2 = sgn(n + k)
            for j in range(2 * k + 1, 2 * n + 3):
                pos = j - 3
                for l, c in st[x][y][X[j - 1]].items():
                    args = rest[:pos] + (l,) + rest[pos + 1 :]
                    _add_into(out, F.at(args), s2 * c)
        return out

    def delta_II(X):
        out = _zero_form(dv)
        head = X[: 2 * n]
        x1, x2, x3 = X[2 * n], X[2 * n + 1], X[2 * n + 2]
        _add_into(out, _apply(theta[x2][x3], G.at(X[: 2 * n + 1])), one)
        # the theta(x_{2n+1}, x_{2n+3}) term takes x_{2n+2} in its last slot
        _add_into(out, _apply(theta[x1][x3], G.at(head + (x2,))), -one)
        for k in range(1, n + 2):
            i0 = 2 * k - 2
            x, y = X[i0], X[i0 + 1]
            rest = X[:i0] + X[i0 + 2 :]
            _add_into(out, _apply(D[x][y], G.at(rest)), sgn(n + k + 1))
            s2 = sgn(n + k)
            for j in range(2 * k + 1, 2 * n + 4):
                pos = j - 3
                for l, c in st[x][y][X[j - 1]].items():
                    args = rest[:pos] + (l,) + rest[pos + 1 :]
                    _add_into(out, G.at(args), s2 * c)
        return out

    return delta_I, delta_II


@dataclass
class CoboundaryOperator:
    """delta at one level as an exact matrix, plus its compatibility verdict.

    ``failures`` lists (output arity, tuple, kind, form) for every place
    where the raw formula violates the vanishing condition; each form is
    the linear functional that must vanish there.
    """

    level: int
    source: tuple  # (even space, odd space)
    target: tuple
    matrix: Matrix
    failures: list = dc_field(default_factory=list)

    @property
    def compatible(self) -> bool:
        return not self.failures


def _scan_compatibility(form_fn, arity, d, one):
    failures = []
    for s in range(arity // 2):
        for X in product(range(d), repeat=arity):
            a, b = X[2 * s], X[2 * s + 1]
            if a == b:
                form = form_fn(X)
                if any(form):
                    failures.append((arity, X, "diagonal", form))
            elif a < b:
                Y = X[: 2 * s] + (b, a) + X[2 * s + 2 :]
                form = [dict(r) for r in form_fn(X)]
                _add_into(form, form_fn(Y), one)
                if any(form):
                    failures.append((arity, X, "antisymmetry", form))
    return failures


def _memo(fn):
    seen = {}

    def wrapped(X):
        if X not in seen:
            seen[X] = fn(X)
        return seen[X]

    return wrapped


def coboundary_operator(rep: Representation, level: int) -> CoboundaryOperator:
    """delta: C^{2n} x C^{2n+1} -> C^{2n+2} x C^{2n+3} at level n (cached)."""
    if level < 1:
        raise DimensionError("coboundary level must be at least 1")

    def build():
        a = rep.algebra
        d, dv, field = a.dim, rep.dimV, a.field
        src = pair_spaces(level, d, dv, field)
        tgt = pair_spaces(level + 1, d, dv, field)
        dI, dII = (_memo(fn) for fn in _delta_forms(rep, level))
        rows = []
        for key in tgt[0].keys:
            rows.extend(dI(key))
        for key in tgt[1].keys:
            rows.extend(dII(key))
        M = _rows_to_matrix(rows, src[0].dim + src[1].dim, field)
        failures = _scan_compatibility(dI, 2 * level + 2, d, field.one)
        failures += _scan_compatibility(dII, 2 * level + 3, d, field.one)
        return CoboundaryOperator(level, src, tgt, M, failures)

    return _cache(rep, ("delta", level), build)


def delta_general(p: CochainPair, r: Representation) -> CochainPair:
    """(delta_I, delta_II) applied to a pair at level n >= 1."""
    require_verified(r)
    n = p.level
    if n < 1:
        raise DimensionError("delta needs a pair of arities (2n, 2n+1) with n >= 1")
    op = coboundary_operator(r, n)
    if p.f.space != op.source[0] or p.g.space != op.source[1]:
        if p.f.space.field != r.field:
            raise FieldMismatchError(f"pair over {p.f.space.field}, representation over {r.field}")
        raise DimensionError("pair does not match the representation's cochain spaces")
    vec = p.vector
    for arity, X, kind, form in op.failures:
        res = _form_value(form, vec, r.field)
        if any(res):
            raise IncompatibleRepresentationError(
                f"representation incompatible with cochain condition: {kind} failure "
                f"of the {arity}-cochain output at {X}",
                witness=X,
                residual=res,
            )
    return CochainPair.from_vector(*op.target, op.matrix.apply(vec))


# ---------------------------------------------------------------------------
# low degrees, adjoint coefficients


def _bracket_matrices(a: LyAlgebra):
    """Matrices of the partial maps u -> [u, z], u -> {u, y, z}, u -> {x, u, z}."""
    d, f = a.dim, a.field
    def cols(vectors):
        return _columns(Matrix.from_columns(vectors, d, f))

    right = [cols([a.b[u][z] for u in range(d)]) for z in range(d)]
    left = [cols([a.b[x][u] for u in range(d)]) for x in range(d)]
    t1 = [[cols([a.t[u][y][z] for u in range(d)]) for z in range(d)] for y in range(d)]
    t2 = [[cols([a.t[x][u][z] for u in range(d)]) for z in range(d)] for x in range(d)]
    t3 = [[cols([a.t[x][y][u] for u in range(d)]) for y in range(d)] for x in range(d)]
    return right, left, t1, t2, t3


def delta1_operator(a: LyAlgebra) -> Matrix:
    """Matrix of phi -> (delta^1_I phi, delta^1_II phi), C^1(L,L) -> C^2(L,L) x C^3(L,L)."""

    def build():
        d, field = a.dim, a.field
        one = field.one
        sb, st = _sparse_tables(a)
        right, left, t1, t2, t3 = _bracket_matrices(a)
        c1 = CochainSpace(1, d, d, field)
        P = _Unknown(c1, 0)
        c2, c3 = pair_spaces(1, d, d, field)
        rows = []
        for x, y in c2.keys:
            out = _zero_form(d)
            _add_into(out, _apply(right[y], P.at((x,))), one)
            _add_into(out, _apply(left[x], P.at((y,))), one)
            for k, c in sb[x][y].items():
                _add_into(out, P.at((k,)), -c)
            rows.extend(out)
        for x, y, z in c3.keys:
            out = _zero_form(d)
            _add_into(out, _apply(t1[y][z], P.at((x,))), one)
            _add_into(out, _apply(t2[x][z], P.at((y,))), one)
            _add_into(out, _apply(t3[x][y], P.at((z,))), one)
            for l, c in st[x][y][z].items():
                _add_into(out, P.at((l,)), -c)
            rows.extend(out)
        return _rows_to_matrix(rows, c1.dim, field)

    return _cache(a, "delta1", build)


def delta1(phi: Cochain, a: LyAlgebra) -> CochainPair:
    """((x,y) -> [phi x, y] + [x, phi y] - phi[x, y], (x,y,z) -> sum of three - phi{x,y,z})."""
    require_verified(a)
    if phi.space != CochainSpace(1, a.dim, a.dim, a.field):
        raise DimensionError("delta1 needs a 1-cochain with values in the algebra")
    vec = delta1_operator(a).apply(phi.coeffs)
    return CochainPair.from_vector(*pair_spaces(1, a.dim, a.dim, a.field), vec)


def _delta23_forms(a: LyAlgebra):
    """Residual forms of the linearized deformation equations, block by block.

    Each block maps a basis tuple to the form of a full multilinear map into L.
    """
    d, field = a.dim, a.field
    one = field.one
    sb, st = _sparse_tables(a)
    right, left, t1, t2, t3 = _bracket_matrices(a)
    c2, c3 = pair_spaces(1, d, d, field)
    F = _Unknown(c2, 0)
    G = _Unknown(c3, c2.dim)

    def cyc3(fn, x, y, z, *rest):
        out = _zero_form(d)
        for args in ((x, y, z), (y, z, x), (z, x, y)):
            _add_into(out, fn(*args, *rest), one)
        return out

    def a_term(x, y, z):
        out = _apply(right[z], F.at((x, y)))
        for k, c in sb[x][y].items():
            _add_into(out, F.at((k, z)), c)
        _add_into(out, G.at((x, y, z)), one)
        return out

    def b_term(x, y, z, u):
        out = _apply(t1[z][u], F.at((x, y)))
        for k, c in sb[x][y].items():
            _add_into(out, G.at((k, z, u)), c)
        return out

    def block_A(x, y, z):
        return cyc3(a_term, x, y, z)

    def block_B(x, y, z, u):
        return cyc3(b_term, x, y, z, u)

    def block_C(x, y, u, v):
        out = _apply(t3[x][y], F.at((u, v)))
        for k, c in sb[u][v].items():
            _add_into(out, G.at((x, y, k)), c)
        _add_into(out, _apply(right[v], G.at((x, y, u))), -one)
        for l, c in st[x][y][u].items():
            _add_into(out, F.at((l, v)), -c)
        _add_into(out, _apply(left[u], G.at((x, y, v))), -one)
        for l, c in st[x][y][v].items():
            _add_into(out, F.at((u, l)), -c)
        return out

    def block_D(x, y, u, v, w):
        out = _apply(t3[x][y], G.at((u, v, w)))
        for l, c in st[u][v][w].items():
            _add_into(out, G.at((x, y, l)), c)
        _add_into(out, _apply(t1[v][w], G.at((x, y, u))), -one)
        for l, c in st[x][y][u].items():
            _add_into(out, G.at((l, v, w)), -c)
        _add_into(out, _apply(t2[u][w], G.at((x, y, v))), -one)
        for l, c in st[x][y][v].items():
            _add_into(out, G.at((u, l, w)), -c)
        _add_into(out, _apply(t3[u][v], G.at((x, y, w))), -one)
        for l, c in st[x][y][w].items():
            _add_into(out, G.at((u, v, l)), -c)
        return out

    return (("A", 3, block_A), ("B", 4, block_B), ("C", 4, block_C), ("D", 5, block_D))


def delta23_operator(a: LyAlgebra) -> Matrix:
    """Stacked residual matrix of the (2,3)-cocycle conditions.

    Rows: blocks A (3-linear), B, C (4-linear), D (5-linear), each over all
    basis tuples in lexicographic order, then target index.
    """

    def build():
        rows = []
        for _, arity, fn in _delta23_forms(a):
            for X in product(range(a.dim), repeat=arity):
                rows.extend(fn(*X))
        c2, c3 = pair_spaces(1, a.dim, a.dim, a.field)
        return _rows_to_matrix(rows, c2.dim + c3.dim, a.field)

    return _cache(a, "delta23", build)


@dataclass(frozen=True)
class Delta23Residual:
    """Residual of the (2,3)-cocycle conditions.

    ``vector`` is the stacked residual; ``witness`` is the first nonzero
    (block, tuple, value) or None.
    """

    vector: tuple
    witness: tuple | None

    def __bool__(self):
        return any(self.vector)


def delta23(p: CochainPair, a: LyAlgebra) -> Delta23Residual:
    require_verified(a)
    if p.level != 1 or p.f.space.dimV != a.dim or p.f.space.d != a.dim:
        raise DimensionError("delta23 needs a pair in C^2(L,L) x C^3(L,L)")
    vec = delta23_operator(a).apply(p.vector)
    witness = None
    pos = 0
    d = a.dim
    for name, arity, _ in _delta23_forms(a):
        for X in product(range(d), repeat=arity):
            block = vec[pos : pos + d]
            pos += d
            if witness is None and any(block):
                witness = (name, tuple(a.labels[i] for i in X), block)
    return Delta23Residual(vec, witness)


def bracket_cochain(a: LyAlgebra) -> Cochain:
    """The binary bracket as an element of C^2(L, L)."""
    return Cochain.from_function(CochainSpace(2, a.dim, a.dim, a.field), lambda k: a.b[k[0]][k[1]])


def ternary_cochain(a: LyAlgebra) -> Cochain:
    """The ternary bracket as an element of C^3(L, L)."""
    return Cochain.from_function(CochainSpace(3, a.dim, a.dim, a.field), lambda k: a.t[k[0]][k[1]][k[2]])


def identity_cochain(a: LyAlgebra) -> Cochain:
    return Cochain.from_function(CochainSpace(1, a.dim, a.dim, a.field), lambda k: a.unit(k[0]))


def matrix_to_cochain(M: Matrix, a: LyAlgebra) -> Cochain:
    """A linear map L -> L (columns = images) as a 1-cochain."""
    return Cochain.from_function(CochainSpace(1, a.dim, a.dim, a.field), lambda k: M.column(k[0]))


def cochain_to_matrix(c: Cochain) -> Matrix:
    if c.arity != 1:
        raise DimensionError("only 1-cochains are linear maps")
    d, dv = c.space.d, c.space.dimV
    return Matrix.from_columns([c.value((r,)) for r in range(d)], dv, c.space.field)


# ---------------------------------------------------------------------------
# cohomology


@dataclass(frozen=True)
class CohomologyResult:
    """Z, B and H at level n, in stacked (even block, odd block) coordinates.

    ``dims`` splits dim H into (even, odd): the odd part is measured on the
    projections of Z and B to the odd block, the even part on their
    intersections with the even block.  The two add up to dim Z - dim B.
    """

    level: int
    spaces: tuple
    Z: Subspace
    B: Subspace
    dims: tuple
    representatives: tuple
    cocycle_operator: Matrix = dc_field(compare=False, repr=False)
    equivariant: bool = dc_field(default=False, compare=False)

    @property
    def degrees(self) -> tuple:
        return (2 * self.level, 2 * self.level + 1)

    @property
    def dim_H(self) -> int:
        return self.Z.dim - self.B.dim

    @property
    def z_dims(self) -> tuple:
        return block_dims(self.Z, self.spaces[0].dim)

    @property
    def b_dims(self) -> tuple:
        return block_dims(self.B, self.spaces[0].dim)

    def pair(self, vec) -> CochainPair:
        return CochainPair.from_vector(*self.spaces, vec)

    def representative_pairs(self) -> list[CochainPair]:
        return [self.pair(v) for v in self.representatives]

    def class_of(self, p: CochainPair) -> tuple:
        """Canonical representative of the class of a cocycle: its normal form mod B."""
        return self.B.reduce(p.vector)


def block_dims(S: Subspace, even_dim: int) -> tuple[int, int]:
    """(dim of S within the even block, dim of S projected to the odd block)."""
    if not S.basis or S.ambient == even_dim:
        odd = 0
    else:
        odd = rank(Matrix._raw(tuple(v[even_dim:] for v in S.basis), S.field, S.ambient - even_dim))
    return S.dim - odd, odd


def _split_dims(Z: Subspace, B: Subspace, even_dim: int) -> tuple[int, int]:
    ze, zo = block_dims(Z, even_dim)
    be, bo = block_dims(B, even_dim)
    return ze - be, zo - bo


def _kernel(M: Matrix) -> Subspace:
    # duplicate and zero rows do not change the kernel
    rows = list(dict.fromkeys(r for r in M.rows if any(r)))
    if not rows:
        return Subspace.full(M.ncols, M.field)
    return nullspace(Matrix._raw(tuple(rows), M.field, M.ncols))


def build_result(level, spaces, Z, B, cocycle_operator, equivariant=False) -> CohomologyResult:
    for b in B.basis:
        if b not in Z:
            raise ContainmentError("coboundaries are not contained in cocycles", witness=b)
    reps = complement_in(Z, B)
    dims = _split_dims(Z, B, spaces[0].dim)
    return CohomologyResult(level, spaces, Z, B, dims, tuple(reps), cocycle_operator, equivariant)


def cohomology(a: LyAlgebra, r: Representation, n: int) -> CohomologyResult:
    """H^{2n} x H^{2n+1}.

    Level 1 uses the (2,3)-cocycle conditions and delta^1, which are
    defined for adjoint coefficients only; levels n >= 2 use the general
    coboundary.
    """
    require_verified(a, r)
    if r.algebra != a:
        raise DimensionError("representation belongs to a different algebra")
    if n < 1:
        raise DimensionError("cohomology level must be at least 1")
    spaces = pair_spaces(n, a.dim, r.dimV, a.field)
    if n == 1:
        if not r.is_adjoint:
            raise UnsupportedConfigurationError("level 1 cohomology is only defined for adjoint coefficients")
        M = delta23_operator(a)
        Z = _kernel(M)
        B = image(delta1_operator(a))
    else:
        M = coboundary_operator(r, n).matrix
        Z = _kernel(M)
        B = image(coboundary_operator(r, n - 1).matrix)
    return build_result(n, spaces, Z, B, M)


def same_class(p1: CochainPair, p2: CochainPair, result: CohomologyResult) -> bool:
    """Whether two cocycles differ by a coboundary."""
    for p in (p1, p2):
        v = p.vector
        if len(v) != result.Z.ambient:
            raise DimensionError("pair does not live in the result's cochain spaces")
        if v not in result.Z:
            raise CocycleError("input is not a cocycle", residual=result.cocycle_operator.apply(v))
    diff = tuple(x - y for x, y in zip(p1.vector, p2.vector))
    if not result.B.basis:
        return not any(diff)
    return solve(result.B.matrix().T, diff) is not None


def compare_cocycle_spaces(a: LyAlgebra) -> dict:
    """Kernel of delta23 versus kernel of the general delta at level 1 (adjoint).

    Reported only; no relation between the two is asserted.
    """
    require_verified(a)
    Zdef = _kernel(delta23_operator(a))
    Zgen = _kernel(coboundary_operator(adjoint_rep(a), 1).matrix)
    meet = Zdef & Zgen
    return {
        "deformation_cocycles": Zdef.dim,
        "general_kernel": Zgen.dim,
        "intersection": meet.dim,
        "equal": Zdef == Zgen,
    }
