"""Regenerate the JSON fixtures in ../fixtures from their definitions here."""

from pathlib import Path

from lieyamaguti import (
    QQ,
    CochainSpace,
    GF,
    DeformationJet,
    FiniteGroup,
    GroupAction,
    IsomorphismJet,
    LeibnizAlgebra,
    LyAlgebra,
    Manifest,
    dumps,
    gauge_transform,
    pair_spaces,
)
from lieyamaguti.algebra import induced_brackets
from lieyamaguti.cochains import Cochain, ternary_cochain
from lieyamaguti.linalg import Matrix

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def diag(*xs, field=QQ):
    n = len(xs)
    return Matrix([[field(xs[i]) if i == j else field(0) for j in range(n)] for i in range(n)], field, n)


def z2_action(a, *signs):
    G = FiniteGroup.cyclic(2)
    act = GroupAction(G, a, [Matrix.identity(a.dim, a.field), diag(*signs, field=a.field)])
    return G, act


def nonabelian2(field=QQ):
    return LyAlgebra.from_constants(2, [(0, 1, 0, 1)], [(0, 1, 1, 0, 1)], field)


def l0():
    return LyAlgebra.from_constants(2, [], [(0, 1, 1, 0, 1)])


def sl2():
    return LyAlgebra.from_constants(3, [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)], [])


def iso(a, order, seed):
    space = CochainSpace(1, a.dim, a.dim, a.field)
    comps = []
    for k in range(order):
        comps.append(Cochain(space, tuple(a.field((seed * (i + 2) + 3 * k) % 5 - 2) for i in range(space.dim))))
    return IsomorphismJet.from_cochains(a, comps)


def with_action(a, signs, **kw):
    G, act = z2_action(a, *signs)
    return Manifest(a.field, a, group=G, action=act, **kw)


def build():
    out = {}
    out["nonabelian2"] = Manifest(QQ, nonabelian2(), adjoint_declared=True)
    out["nonabelian2_gf5"] = Manifest(GF(5), nonabelian2(GF(5)))
    out["nonabelian2_negation"] = with_action(nonabelian2(), (-1, -1))
    out["l0_neg"] = with_action(l0(), (-1, -1), options={"level": 1})
    m = with_action(l0(), (1, -1))
    m.module = (Matrix.identity(2, QQ), Matrix.identity(2, QQ))
    out["l0_diag_identity_module"] = m
    out["abelian2"] = Manifest(QQ, LyAlgebra.abelian(2))
    out["abelian3_action"] = with_action(LyAlgebra.abelian(3), (1, 1, -1))
    out["dim1"] = Manifest(QQ, LyAlgebra.abelian(1))
    out["sl2"] = Manifest(QQ, sl2())
    out["raw_ly1_violation"] = Manifest(
        QQ, LyAlgebra.from_table(2, [(0, 0, 0, QQ(1))], [], QQ), table="raw"
    )
    out["ly_axiom_failure"] = Manifest(QQ, LyAlgebra.from_constants(2, [(0, 1, 1, 1)], [(0, 1, 1, 0, 1)]))
    for name, ents in (
        ("leibniz_nonlie", [(0, 1, 1, 1)]),
        ("leibniz_sl2", [(0, 1, 1, 2), (1, 0, 1, -2), (0, 2, 2, -2), (2, 0, 2, 2), (1, 2, 0, 1), (2, 1, 0, -1)]),
    ):
        d = 1 + max(max(e[:3]) for e in ents)
        lz = LeibnizAlgebra.from_entries(d, [e[:3] + (QQ(e[3]),) for e in ents], QQ)
        out[name] = Manifest(QQ, induced_brackets(lz), leibniz=lz)

    a = nonabelian2().verify()
    out["jet_null"] = Manifest(QQ, a, jet=DeformationJet.null(a, 2))
    out["jet_gauge_null"] = Manifest(QQ, a, jet=gauge_transform(DeformationJet.null(a, 3), iso(a, 3, 1)))
    ab = LyAlgebra.abelian(2).verify()
    s2, s3 = pair_spaces(1, 2, 2, QQ)
    f1 = Cochain(s2, (QQ(1),) + (QQ(0),) * (s2.dim - 1))
    out["jet_abelian_f1"] = Manifest(QQ, ab, jet=DeformationJet(ab, (f1,), (s3.zero(),)))
    z = l0().verify()
    jt = DeformationJet(z, (s2.zero(),), (ternary_cochain(z),))
    G, act = z2_action(z, -1, -1)
    out["jet_l0_ternary"] = Manifest(QQ, z, group=G, action=act, jet=jt)
    out["jet_compare"] = Manifest(QQ, z, jet=jt, jet2=gauge_transform(jt, iso(z, 1, 2)))
    return out


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    for name, m in build().items():
        (OUT / f"{name}.json").write_text(dumps(m))
        print(name)
