"""JSON manifests: parsing, validation and canonical serialization.

A manifest names a field and an algebra (or a Leibniz algebra to induce
one from), optionally with a representation, a group action, deformation
jets and command options.  Basis indices are 1-based in the file and
0-based everywhere else.  The schema ships as ``manifest.schema.json``.

Parsing is structural only: nothing is verified here, so a manifest can
describe a structure that fails its axioms (which is what ``check`` is
for).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from importlib import resources

import jsonschema

from .algebra import LeibnizAlgebra, LyAlgebra, Representation, adjoint_rep, induced_brackets
from .cochains import Cochain, pair_spaces
from .deformation import DeformationJet
from .equivariant import EquivariantModuleAction, FiniteGroup, GroupAction
from .errors import DimensionError, FieldMismatchError, LyaError, ManifestError
from .fields import Field
from .linalg import Matrix


@lru_cache(maxsize=1)
def schema() -> dict:
    text = resources.files(__package__).joinpath("manifest.schema.json").read_text()
    return json.loads(text)


@dataclass
class Manifest:
    field: Field
    algebra: LyAlgebra
    table: str = "independent"
    leibniz: LeibnizAlgebra | None = None
    representation: Representation | None = None
    group: FiniteGroup | None = None
    action: GroupAction | None = None
    module: tuple | None = None
    jet: DeformationJet | None = None
    jet2: DeformationJet | None = None
    adjoint_declared: bool = False
    options: dict = dc_field(default_factory=dict)

    @property
    def rep(self) -> Representation:
        """The declared representation, or the adjoint one."""
        if self.representation is not None:
            return self.representation
        return adjoint_rep(self.algebra)

    def module_action(self, rep: Representation) -> EquivariantModuleAction:
        if self.module is None:
            return EquivariantModuleAction.adjoint(self.action, rep)
        return EquivariantModuleAction(self.group, rep, self.module)

    def to_dict(self) -> dict:
        return serialize(self)


# ---------------------------------------------------------------------------
# parsing


def _at(path, msg):
    where = "/".join(str(p) for p in path) or "<root>"
    return ManifestError(f"{where}: {msg}")


def loads(text: str) -> Manifest:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_dict(raw)


def load(path) -> Manifest:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ManifestError(f"cannot read manifest: {exc}") from None
    return loads(text)


def from_dict(raw) -> Manifest:
    validator = jsonschema.Draft202012Validator(schema())
    err = jsonschema.exceptions.best_match(validator.iter_errors(raw))
    if err is not None and err.validator == "oneOf" and not err.absolute_path:
        raise _at((), "exactly one of 'algebra' or 'leibniz' is required")
    if err is not None:
        raise _at(err.absolute_path, err.message)
    try:
        return _build(raw)
    except ManifestError:
        raise
    except (DimensionError, FieldMismatchError, ValueError) as exc:
        raise ManifestError(str(exc)) from None


def _scalar(field: Field, x, path):
    try:
        if isinstance(x, str):
            return field.parse(x)
        return field(x)
    except (LyaError, ValueError, ZeroDivisionError) as exc:
        raise _at(path, f"bad scalar {x!r}: {exc}") from None


def _index(i, dim, path):
    if i > dim:
        raise _at(path, f"index {i} exceeds dimension {dim}")
    return i - 1


def _matrix(field, rows, nrows, ncols, path) -> Matrix:
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise _at(path, f"expected a {nrows}x{ncols} matrix")
    return Matrix(
        [[_scalar(field, x, path + [i, j]) for j, x in enumerate(r)] for i, r in enumerate(rows)], field, ncols
    )


def _labels(block, dim, path):
    labels = block.get("labels")
    if labels is None:
        return tuple(f"e{i + 1}" for i in range(dim))
    if len(labels) != dim:
        raise _at(path + ["labels"], f"{len(labels)} labels for dimension {dim}")
    return tuple(labels)


def _build(raw: dict) -> Manifest:
    field = Field.from_string(raw["field"])
    leibniz = None
    table = "independent"
    if "algebra" in raw:
        blk = raw["algebra"]
        d = blk["dim"]
        labels = _labels(blk, d, ["algebra"])
        table = blk.get("table", "independent")
        binary = [
            tuple(_index(i, d, ["algebra", "binary", n]) for i in e[:3]) + (_scalar(field, e[3], ["algebra", "binary", n]),)
            for n, e in enumerate(blk.get("binary", []))
        ]
        ternary = [
            tuple(_index(i, d, ["algebra", "ternary", n]) for i in e[:4]) + (_scalar(field, e[4], ["algebra", "ternary", n]),)
            for n, e in enumerate(blk.get("ternary", []))
        ]
        if table == "raw":
            algebra = LyAlgebra.from_table(d, binary, ternary, field, labels)
        else:
            for n, e in enumerate(binary):
                if not e[0] < e[1]:
                    raise _at(["algebra", "binary", n], "independent entries need i < j (use table: raw for a full table)")
            for n, e in enumerate(ternary):
                if not e[0] < e[1]:
                    raise _at(["algebra", "ternary", n], "independent entries need i < j (use table: raw for a full table)")
            algebra = LyAlgebra.from_constants(d, binary, ternary, field, labels)
    else:
        blk = raw["leibniz"]
        d = blk["dim"]
        labels = _labels(blk, d, ["leibniz"])
        entries = [
            tuple(_index(i, d, ["leibniz", "products", n]) for i in e[:3]) + (_scalar(field, e[3], ["leibniz", "products", n]),)
            for n, e in enumerate(blk.get("products", []))
        ]
        leibniz = LeibnizAlgebra.from_entries(d, entries, field, labels)
        algebra = induced_brackets(leibniz)
    m = Manifest(field, algebra, table, leibniz)
    d = algebra.dim

    if "representation" in raw:
        blk = raw["representation"]
        if "dimV" in blk:
            m.representation = _representation(field, algebra, blk)
        else:
            m.adjoint_declared = True

    if "group" in raw:
        gb = raw["group"]
        glabels = tuple(gb["labels"])
        n = len(glabels)
        pos = {g: i for i, g in enumerate(glabels)}

        def gidx(x, path):
            if x not in pos:
                raise _at(path, f"unknown group element {x!r}")
            return pos[x]

        rows = gb["table"]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise _at(["group", "table"], f"Cayley table must be {n}x{n}")
        tab = [[gidx(x, ["group", "table", i, j]) for j, x in enumerate(r)] for i, r in enumerate(rows)]
        ident = gidx(gb.get("identity", glabels[0]), ["group", "identity"])
        m.group = FiniteGroup(glabels, tab, ident)
        ab = raw["action"]
        m.action = GroupAction(m.group, algebra, _per_element(field, ab["matrices"], glabels, d, ["action", "matrices"]))
        if "module" in ab:
            dv = m.representation.dimV if m.representation is not None else d
            m.module = tuple(_per_element(field, ab["module"], glabels, dv, ["action", "module"]))

    for key in ("jet", "jet2"):
        if key in raw:
            setattr(m, key, _jet(field, algebra, raw[key], key))

    m.options = dict(raw.get("options", {}))
    return m


def _per_element(field, mats, glabels, n, path):
    extra = set(mats) - set(glabels)
    if extra:
        raise _at(path, f"matrices for unknown elements {sorted(extra)}")
    missing = [g for g in glabels if g not in mats]
    if missing:
        raise _at(path, f"missing matrices for {missing}")
    return [_matrix(field, mats[g], n, n, path + [g]) for g in glabels]


def _representation(field, algebra, blk) -> Representation:
    d, dv = algebra.dim, blk["dimV"]
    zero = Matrix.zeros(dv, dv, field)
    rho = [zero] * d
    D = [[zero] * d for _ in range(d)]
    theta = [[zero] * d for _ in range(d)]
    for n, (i, M) in enumerate(blk.get("rho", [])):
        path = ["representation", "rho", n]
        rho[_index(i, d, path)] = _matrix(field, M, dv, dv, path + [1])
    for name, target in (("D", D), ("theta", theta)):
        for n, (i, j, M) in enumerate(blk.get(name, [])):
            path = ["representation", name, n]
            target[_index(i, d, path)][_index(j, d, path)] = _matrix(field, M, dv, dv, path + [2])
    return Representation(algebra, dv, rho, D, theta)


def _jet(field, algebra, blk, key) -> DeformationJet:
    N = blk["order"]
    s2, s3 = pair_spaces(1, algebra.dim, algebra.dim, field)
    out = {}
    for name, space in (("f", s2), ("g", s3)):
        lists = blk[name]
        if len(lists) != N:
            raise _at([key, name], f"{len(lists)} components for order {N}")
        comps = []
        for i, coeffs in enumerate(lists):
            if len(coeffs) != space.dim:
                raise _at([key, name, i], f"{len(coeffs)} coefficients, the cochain space has dimension {space.dim}")
            comps.append(Cochain(space, tuple(_scalar(field, x, [key, name, i, k]) for k, x in enumerate(coeffs))))
        out[name] = tuple(comps)
    return DeformationJet(algebra, out["f"], out["g"])


# ---------------------------------------------------------------------------
# serialization


def _enc_matrix(field, M: Matrix):
    return [[field.encode(x) for x in row] for row in M.rows]


def serialize(m: Manifest) -> dict:
    """Canonical form: explicit labels and table kind, sparse sorted constants."""
    f = m.field
    out = {"field": str(f)}
    a = m.algebra
    if m.leibniz is not None:
        lz = m.leibniz
        entries = [
            [i + 1, j + 1, k + 1, f.encode(lz.c[i][j][k])]
            for i in range(lz.dim)
            for j in range(lz.dim)
            for k in range(lz.dim)
            if lz.c[i][j][k]
        ]
        out["leibniz"] = {"dim": lz.dim, "labels": list(lz.labels), "products": entries}
    else:
        if m.table == "raw":
            binary, ternary = a.raw_constants()
        else:
            binary, ternary = a.independent_constants()
        out["algebra"] = {
            "dim": a.dim,
            "labels": list(a.labels),
            "table": m.table,
            "binary": [[i + 1, j + 1, k + 1, f.encode(c)] for i, j, k, c in binary],
            "ternary": [[i + 1, j + 1, k + 1, l + 1, f.encode(c)] for i, j, k, l, c in ternary],
        }
    r = m.representation
    if r is not None:
        rep = {"dimV": r.dimV, "rho": [], "D": [], "theta": []}
        for i, M in enumerate(r.rho):
            if not M.is_zero():
                rep["rho"].append([i + 1, _enc_matrix(f, M)])
        for name, table in (("D", r.D), ("theta", r.theta)):
            for i, row in enumerate(table):
                for j, M in enumerate(row):
                    if not M.is_zero():
                        rep[name].append([i + 1, j + 1, _enc_matrix(f, M)])
        out["representation"] = rep
    elif m.adjoint_declared:
        out["representation"] = {"adjoint": True}
    if m.group is not None:
        G = m.group
        out["group"] = {
            "labels": list(G.labels),
            "table": [[G.labels[x] for x in row] for row in G.table],
            "identity": G.labels[G.identity],
        }
        act = {"matrices": {g: _enc_matrix(f, M) for g, M in zip(G.labels, m.action.matrices)}}
        if m.module is not None:
            act["module"] = {g: _enc_matrix(f, M) for g, M in zip(G.labels, m.module)}
        out["action"] = act
    for key in ("jet", "jet2"):
        j = getattr(m, key)
        if j is not None:
            out[key] = {
                "order": j.order,
                "f": [[f.encode(x) for x in c.coeffs] for c in j.f],
                "g": [[f.encode(x) for x in c.coeffs] for c in j.g],
            }
    if m.options:
        out["options"] = dict(m.options)
    return out


def dumps(m: Manifest) -> str:
    return json.dumps(serialize(m), indent=2, sort_keys=True) + "\n"
