"""Exact matrices and subspaces.

All rank, kernel and quotient computations in the package reduce to
:func:`_echelon`, a Gauss-Jordan elimination that is fraction-free over the
rationals (rows are cleared to integers, then eliminated Bareiss-style so
every intermediate entry is a minor of the input) and ordinary modular
elimination over GF(p).  Pivots are chosen leftmost column first, first
nonzero row, so every basis produced here is canonical.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import ContainmentError, DimensionError, FieldMismatchError
from .fields import QQ, Field, Mod, field_of


class Matrix:
    """Immutable dense matrix over an exact field.

    Linear maps act on column vectors: column ``j`` holds the image of the
    ``j``-th basis vector.
    """

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, rows, field: Field | None = None, ncols: int | None = None):
        rows = [list(r) for r in rows]
        field = field_of((x for r in rows for x in r), field)
        if ncols is None:
            if not rows:
                raise DimensionError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged matrix rows")
        self.field = field
        self.ncols = ncols
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)

    @classmethod
    def _raw(cls, rows, field, ncols):
        # trusted constructor: entries already live in ``field``
        m = object.__new__(cls)
        m.field = field
        m.rows = rows
        m.ncols = ncols
        return m

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> Matrix:
        z, o = field.zero, field.one
        return cls._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field, n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field = QQ) -> Matrix:
        z = field.zero
        return cls._raw(tuple((z,) * ncols for _ in range(nrows)), field, ncols)

    @classmethod
    def from_columns(cls, columns, nrows: int, field: Field | None = None) -> Matrix:
        columns = [list(c) for c in columns]
        return cls([[c[i] for c in columns] for i in range(nrows)], field, ncols=len(columns))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> Matrix:
        return Matrix._raw(tuple(self.columns()), self.field, len(self.rows))

    def _check(self, other: Matrix):
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} matrix combined with {other.field} matrix")

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if other.shape != self.shape:
            raise DimensionError(f"shape {self.shape} + {other.shape}")
        rows = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        return Matrix._raw(rows, self.field, self.ncols)

    def __neg__(self) -> Matrix:
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.field, self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        c = self.field(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.field, self.ncols)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.ncols != other.nrows:
                raise DimensionError(f"shape {self.shape} @ {other.shape}")
            cols = other.columns()
            zero = self.field.zero
            rows = tuple(
                tuple(sum((a * b for a, b in zip(r, c) if a and b), zero) for c in cols)
                for r in self.rows
            )
            return Matrix._raw(rows, self.field, other.ncols)
        return self.apply(other)

    def apply(self, v) -> tuple:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} for {self.shape} matrix")
        zero = self.field.zero
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), zero) for r in self.rows)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        body = ", ".join("[" + ", ".join(self.field.format(x) for x in r) + "]" for r in self.rows)
        return f"Matrix([{body}], {self.field})"

    def inverse(self) -> Matrix | None:
        """Inverse, or None when singular."""
        n = self.nrows
        if n != self.ncols:
            raise DimensionError("inverse of a non-square matrix")
        one, zero = self.field.one, self.field.zero
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        red, pivots = _echelon(aug, 2 * n, self.field)
        if pivots[:n] != list(range(n)) or len(pivots) > n:
            return None
        return Matrix._raw(tuple(tuple(r[n:]) for r in red[:n]), self.field, n)


# ---------------------------------------------------------------------------
# elimination kernels


def _ff_gauss_jordan(A: list[list[int]], ncols: int):
    """Fraction-free Gauss-Jordan on integer rows, in place.

    Returns (pivot columns, final pivot value).  Every row above the rank
    ends with its pivot equal to the final pivot value, so dividing by it
    yields the reduced row echelon form.
    """
    m = len(A)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        prow = A[r]
        p = prow[c]
        for i in range(m):
            if i == r:
                continue
            row = A[i]
            a = row[c]
            # rows above the pivot carry free columns left of c; rows below are zero there
            lo = 0 if i < r else c
            if a:
                row[lo:] = [(p * x - a * y) // prev for x, y in zip(row[lo:], prow[lo:])]
            elif p != prev:
                row[lo:] = [(p * x) // prev for x in row[lo:]]
        prev = p
        pivots.append(c)
        r += 1
    return pivots, prev


def _echelon(rows, ncols: int, field: Field):
    """Reduced row echelon form of ``rows`` (list of lists of field elements).

    Returns (rref rows as lists of field elements, pivot columns).  Zero rows
    are kept at the bottom, so the row count is preserved.
    """
    m = len(rows)
    if field.p == 0:
        A = []
        for r in rows:
            r = [x if isinstance(x, Fraction) else Fraction(x) for x in r]
            den = lcm(*(x.denominator for x in r)) if r else 1
            A.append([x.numerator * (den // x.denominator) for x in r])
        pivots, last = _ff_gauss_jordan(A, ncols)
        zero, one = Fraction(0), Fraction(1)
        out = []
        for i, c in enumerate(pivots):
            row = [Fraction(x, last) if x else zero for x in A[i]]
            for j in range(c):
                row[j] = zero
            row[c] = one
            out.append(row)
        out.extend([zero] * ncols for _ in range(m - len(pivots)))
        return out, pivots
    p = field.p
    A = [[(x.v if isinstance(x, Mod) else x) % p for x in r] for r in rows]
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], p - 2, p)
        prow = [(x * inv) % p for x in A[r]]
        A[r] = prow
        for i in range(m):
            if i != r and A[i][c]:
                a = A[i][c]
                A[i] = [(x - a * y) % p for x, y in zip(A[i], prow)]
        pivots.append(c)
        r += 1
    return [[Mod(x, p) for x in row] for row in A], pivots


# ---------------------------------------------------------------------------
# public operations


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form (same shape, zero rows last)."""
    red, _ = _echelon([list(r) for r in m.rows], m.ncols, m.field)
    return Matrix._raw(tuple(tuple(r) for r in red), m.field, m.ncols)


def rank(m: Matrix) -> int:
    _, pivots = _echelon([list(r) for r in m.rows], m.ncols, m.field)
    return len(pivots)


def nullspace(m: Matrix) -> Subspace:
    """Subspace {v : m v = 0}."""
    red, pivots = _echelon([list(r) for r in m.rows], m.ncols, m.field)
    zero, one = m.field.zero, m.field.one
    pivset = set(pivots)
    vectors = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = [zero] * m.ncols
        v[f] = one
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        vectors.append(v)
    return Subspace(m.ncols, vectors, m.field)


def image(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return Subspace(m.nrows, m.columns(), m.field)


def solve(m: Matrix, target) -> tuple | None:
    """One solution x of m x = target, or None.

    Free variables are set to zero, so the answer is canonical.
    """
    if len(target) != m.nrows:
        raise DimensionError(f"target of length {len(target)} for {m.shape} matrix")
    f = m.field
    aug = [list(r) + [f(t)] for r, t in zip(m.rows, target)]
    red, pivots = _echelon(aug, m.ncols + 1, f)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [f.zero] * m.ncols
    for i, c in enumerate(pivots):
        x[c] = red[i][m.ncols]
    return tuple(x)


class Subspace:
    """Subspace of F^n held as an RREF basis (rows, no zero rows)."""

    __slots__ = ("ambient", "field", "basis", "pivots")

    def __init__(self, ambient: int, vectors=(), field: Field = QQ):
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise DimensionError(f"vector of length {len(v)} in F^{ambient}")
        field = field_of((x for v in vectors for x in v), field)
        vectors = [[field(x) for x in v] for v in vectors]
        red, pivots = _echelon(vectors, ambient, field)
        self.ambient = ambient
        self.field = field
        self.basis = tuple(tuple(r) for r in red[: len(pivots)])
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, n: int, field: Field = QQ) -> Subspace:
        return cls(n, (), field)

    @classmethod
    def full(cls, n: int, field: Field = QQ) -> Subspace:
        return cls(n, Matrix.identity(n, field).rows, field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        return Matrix._raw(self.basis, self.field, self.ambient)

    def reduce(self, v) -> tuple:
        """Normal form of ``v`` modulo this subspace (zero iff contained)."""
        if len(v) != self.ambient:
            raise DimensionError(f"vector of length {len(v)} in F^{self.ambient}")
        v = [self.field(x) for x in v]
        for row, c in zip(self.basis, self.pivots):
            a = v[c]
            if a:
                v = [x - a * y for x, y in zip(v, row)]
        return tuple(v)

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v) -> tuple:
        """Coefficients of ``v`` in the RREF basis."""
        if v not in self:
            raise ContainmentError("vector not in subspace", witness=tuple(v))
        return tuple(self.field(v[c]) for c in self.pivots)

    def __le__(self, other: Subspace) -> bool:
        return all(b in other for b in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient, self.field, self.basis) == (other.ambient, other.field, other.basis)

    def __hash__(self):
        return hash((self.ambient, self.field, self.basis))

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(self.ambient, self.basis + other.basis, self.field)

    def annihilator(self) -> Subspace:
        """{a : a.u = 0 for all u in self}."""
        if not self.basis:
            return Subspace.full(self.ambient, self.field)
        return nullspace(self.matrix())

    def intersection(self, other: Subspace) -> Subspace:
        if other.ambient != self.ambient:
            raise DimensionError("intersection of subspaces in different ambients")
        eqs = self.annihilator().basis + other.annihilator().basis
        if not eqs:
            return Subspace.full(self.ambient, self.field)
        return nullspace(Matrix._raw(eqs, self.field, self.ambient))

    def __and__(self, other: Subspace) -> Subspace:
        return self.intersection(other)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, {self.field})"


def complement_in(big: Subspace, small: Subspace) -> tuple[tuple, ...]:
    """Canonical complement of ``small`` inside ``big``.

    The complement is {z in big : z vanishes on small's pivot columns};
    it is returned as an RREF basis.  Caller guarantees small <= big.
    """
    reduced = [small.reduce(b) for b in big.basis]
    return Subspace(big.ambient, reduced, big.field).basis


def quotient_dim(big: Subspace, small: Subspace) -> tuple[int, list[tuple]]:
    """dim(big/small) and canonical coset representatives completing small."""
    if big.ambient != small.ambient:
        raise DimensionError("quotient of subspaces in different ambients")
    for b in small.basis:
        if b not in big:
            raise ContainmentError("small subspace not contained in big", witness=b)
    reps = list(complement_in(big, small))
    assert len(reps) == big.dim - small.dim
    return big.dim - small.dim, reps
