"""Command-line front end.

    lieyamaguti check --manifest M
    lieyamaguti cohomology --manifest M [--level N] [--representatives]
    lieyamaguti equivariant-cohomology --manifest M [--level N]
    lieyamaguti fixed-subalgebra --manifest M [--subgroup e,g]
    lieyamaguti deformation {check,trivialize,compare} --manifest M [--order N]
    lieyamaguti rigidity --manifest M [--equivariant]

Exit status: 0 pass, 1 mathematical violation, 2 input or configuration
error.  ``--format machine`` prints only the JSON report; the default text
format prints readable lines followed by the same JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    CheckReport,
    LinearMapCandidate,
    adjoint_rep,
    check_leibniz,
    check_lya,
    check_morphism,
    check_representation,
)
from .cochains import cohomology, compare_cocycle_spaces
from .deformation import (
    check_equivariant_jet,
    check_jet,
    equivalent_first_order,
    rigidity_probe,
    trivialize,
)
from .equivariant import check_action, check_equivariant_compat, check_group, equivariant_cohomology, fixed_subalgebra
from .errors import (
    ClosureError,
    CocycleError,
    ContainmentError,
    DimensionError,
    FieldMismatchError,
    IncompatibleRepresentationError,
    ManifestError,
    UnsupportedConfigurationError,
    UnverifiedError,
    VerificationError,
)
from .linalg import Matrix
from .manifest import Manifest, load

PASS, VIOLATION, INPUT_ERROR = 0, 1, 2


class Violation(Exception):
    """A failed check that stops a command; carries the failing record."""

    def __init__(self, record: dict):
        super().__init__(record.get("message", ""))
        self.record = record


class Report:
    def __init__(self, command: str, field):
        self.data = {"command": command}
        self.lines = []
        self.field = field

    def enc(self, x):
        """Encode scalars, vectors and matrices for the machine block."""
        if isinstance(x, Matrix):
            return [[self.field.encode(v) for v in row] for row in x.rows]
        if isinstance(x, (tuple, list)):
            return [self.enc(v) for v in x]
        if x is None or isinstance(x, (bool, str)):
            return x
        return self.field.encode(x)

    def say(self, line: str):
        self.lines.append(line)

    def render(self, fmt: str) -> str:
        machine = json.dumps(self.data, indent=2, sort_keys=True)
        if fmt == "machine":
            return machine + "\n"
        return "\n".join(self.lines + ["--- machine ---", machine]) + "\n"


def _check_record(rep: Report, report: CheckReport) -> dict:
    rec = {"check": report.subject, "ok": report.ok}
    if not report.ok:
        rec.update(
            axiom=report.axiom,
            witness=list(report.witness),
            residual=rep.enc(report.residual),
        )
        if report.message:
            rec["message"] = report.message
    rep.say(report.describe())
    return rec


def _vectors(rep: Report, vecs):
    return [rep.enc(v) for v in vecs]


# ---------------------------------------------------------------------------
# verification shared by the commands


def _verified_algebra(m: Manifest, rep: Report):
    if m.leibniz is not None:
        lz = check_leibniz(m.leibniz)
        if not lz:
            raise Violation(_check_record(rep, lz))
    r = check_lya(m.algebra)
    if not r:
        raise Violation(_check_record(rep, r))
    m.algebra.verify()
    return m.algebra


def _verified_rep(m: Manifest, rep: Report):
    r = m.rep
    if not r.verified:
        res = check_representation(r)
        if not res:
            raise Violation(_check_record(rep, res))
        r.verify()
    return r


def _verified_action(m: Manifest, rep: Report, r=None):
    if m.group is None:
        raise UnsupportedConfigurationError("this command needs group and action blocks")
    for report in (check_group(m.group), check_action(m.action)):
        if not report:
            raise Violation(_check_record(rep, report))
    if r is None:
        return m.action, None
    modact = m.module_action(r)
    res = check_equivariant_compat(m.action, modact)
    if not res:
        raise Violation(_check_record(rep, res))
    return m.action, modact


def _level(args, m: Manifest) -> int:
    return args.level if args.level is not None else m.options.get("level", 1)


# ---------------------------------------------------------------------------
# commands


def cmd_check(m: Manifest, args, rep: Report) -> int:
    records = []
    ok = True

    def run(report):
        nonlocal ok
        records.append(_check_record(rep, report))
        ok = ok and report.ok
        return report.ok

    algebra_ok = True
    if m.leibniz is not None:
        algebra_ok = run(check_leibniz(m.leibniz))
    if algebra_ok:
        algebra_ok = run(check_lya(m.algebra))
    if algebra_ok:
        m.algebra.verify()
        r = m.rep
        rep_ok = run(check_representation(r))
        if rep_ok:
            r.verify()
        if m.group is not None:
            if run(check_group(m.group)) and run(check_action(m.action)) and rep_ok:
                run(check_equivariant_compat(m.action, m.module_action(r)))
        for key in ("jet", "jet2"):
            j = getattr(m, key)
            if j is not None:
                jr = check_jet(j)
                records.append(_jet_record(rep, jr, key))
                ok = ok and jr.ok
    rep.data["checks"] = records
    rep.data["ok"] = ok
    return PASS if ok else VIOLATION


def _cohomology_record(rep: Report, res, with_reps: bool) -> dict:
    even, odd = res.spaces
    rec = {
        "level": res.level,
        "degrees": list(res.degrees),
        "dim_C": [even.dim, odd.dim],
        "dim_Z": res.Z.dim,
        "dim_B": res.B.dim,
        "dim_Z_blocks": list(res.z_dims),
        "dim_B_blocks": list(res.b_dims),
        "dim_H": list(res.dims),
        "equivariant": res.equivariant,
    }
    p, q = res.degrees
    tag = "_G" if res.equivariant else ""
    rep.say(f"level {res.level}: C^{p} x C^{q} dims {even.dim} x {odd.dim}")
    rep.say(f"  dim Z = {res.Z.dim} (blocks {res.z_dims[0]}, {res.z_dims[1]})")
    rep.say(f"  dim B = {res.B.dim} (blocks {res.b_dims[0]}, {res.b_dims[1]})")
    rep.say(f"  H{tag}^{p} x H{tag}^{q} dims = ({res.dims[0]}, {res.dims[1]})")
    if with_reps:
        rec["representatives"] = _vectors(rep, res.representatives)
        for v in res.representatives:
            rep.say("  representative " + " ".join(rep.field.format(x) for x in v))
    return rec


def cmd_cohomology(m: Manifest, args, rep: Report) -> int:
    a = _verified_algebra(m, rep)
    r = _verified_rep(m, rep)
    n = _level(args, m)
    res = cohomology(a, r, n)
    rep.data["cohomology"] = _cohomology_record(rep, res, args.representatives)
    if n == 1:
        cmp = compare_cocycle_spaces(a)
        rep.data["cocycle_comparison"] = cmp
        rep.say(
            "  general-delta kernel at level 1: dim {general_kernel}, "
            "(2,3)-cocycles: dim {deformation_cocycles}, common: {intersection}".format(**cmp)
        )
    return PASS


def cmd_equivariant_cohomology(m: Manifest, args, rep: Report) -> int:
    a = _verified_algebra(m, rep)
    r = _verified_rep(m, rep)
    act, modact = _verified_action(m, rep, r)
    res = equivariant_cohomology(a, r, act, modact, _level(args, m))
    rep.data["cohomology"] = _cohomology_record(rep, res, args.representatives)
    return PASS


def cmd_fixed_subalgebra(m: Manifest, args, rep: Report) -> int:
    a = _verified_algebra(m, rep)
    act, _ = _verified_action(m, rep)
    H = args.subgroup.split(",") if args.subgroup else m.options.get("subgroup")
    fs = fixed_subalgebra(act, H)
    sub = fs.algebra
    binary, ternary = sub.independent_constants()
    lya = check_lya(sub)
    incl = check_morphism(LinearMapCandidate(sub, a, fs.inclusion))
    rep.data["fixed_subalgebra"] = {
        "subgroup": list(fs.elements),
        "dim": sub.dim,
        "basis": _vectors(rep, fs.basis),
        "binary": [[i + 1, j + 1, k + 1, rep.enc(c)] for i, j, k, c in binary],
        "ternary": [[i + 1, j + 1, k + 1, l + 1, rep.enc(c)] for i, j, k, l, c in ternary],
        "lya_check": lya.ok,
        "inclusion_morphism": incl.ok,
    }
    rep.say(f"L^H for H = {{{', '.join(fs.elements)}}}: dimension {sub.dim}")
    for u, v in zip(sub.labels, fs.basis):
        rep.say(f"  {u} = " + " ".join(rep.field.format(x) for x in v))
    rep.say(f"  induced algebra: {'pass' if lya else 'FAIL'}; inclusion morphism: {'pass' if incl else 'FAIL'}")
    return PASS if lya and incl else VIOLATION


def _jet_record(rep: Report, jr, name="jet") -> dict:
    rec = {"check": name, "ok": jr.ok}
    if not jr.ok:
        rec.update(order=jr.order, equation=jr.equation, witness=list(jr.witness), residual=rep.enc(jr.residual))
    rep.say(f"{name}: " + jr.describe().split(": ", 1)[1])
    return rec


def _truncate(j, order):
    if order is None or order >= j.order:
        return j
    return type(j)(j.algebra, j.f[:order], j.g[:order])


def cmd_deformation(m: Manifest, args, rep: Report) -> int:
    a = _verified_algebra(m, rep)
    if m.jet is None:
        raise UnsupportedConfigurationError("deformation commands need a jet block")
    order = args.order if args.order is not None else m.options.get("order")
    j = _truncate(m.jet, order)
    act = None
    if m.group is not None:
        act, _ = _verified_action(m, rep, adjoint_rep(a))
    sub = args.subcommand
    rep.data["subcommand"] = sub
    if sub == "check":
        jr = check_equivariant_jet(j, act) if act is not None else check_jet(j)
        rep.data["jet"] = _jet_record(rep, jr)
        return PASS if jr.ok else VIOLATION
    jr = check_equivariant_jet(j, act) if act is not None else check_jet(j)
    if not jr:
        rep.data["jet"] = _jet_record(rep, jr)
        return VIOLATION
    if sub == "trivialize":
        t = trivialize(j, act)
        rec = {
            "trivial": t.trivial,
            "steps": [{"order": r, "h": rep.enc(h.coeffs)} for r, h in t.steps],
            "iso": [rep.enc(c.coeffs) for c in t.iso.cochains()],
            "transformed_jet_null": t.jet.is_null(),
        }
        if t.trivial:
            rep.say(f"trivialized through order {j.order} in {len(t.steps)} step(s)")
        else:
            rec["obstruction_order"] = t.order
            rec["obstruction_class"] = rep.enc(t.obstruction.vector)
            rep.say(f"obstruction at order {t.order}; class representative "
                    + " ".join(rep.field.format(x) for x in t.obstruction.vector))
        for k, c in enumerate(t.iso.cochains(), 1):
            rep.say(f"  phi_{k} = " + " ".join(rep.field.format(x) for x in c.coeffs))
        rep.data["trivialization"] = rec
        return PASS
    # compare
    if m.jet2 is None:
        raise UnsupportedConfigurationError("compare needs a jet2 block")
    j2 = _truncate(m.jet2, order)
    jr2 = check_equivariant_jet(j2, act) if act is not None else check_jet(j2)
    if not jr2:
        rep.data["jet2"] = _jet_record(rep, jr2, "jet2")
        return VIOLATION
    phi = equivalent_first_order(j, j2)
    rep.data["comparison"] = {"equivalent": phi is not None, "phi1": rep.enc(phi.coeffs) if phi else None}
    if phi is None:
        rep.say("not first-order equivalent")
    else:
        rep.say("first-order equivalent; phi_1 = " + " ".join(rep.field.format(x) for x in phi.coeffs))
    return PASS


def cmd_rigidity(m: Manifest, args, rep: Report) -> int:
    a = _verified_algebra(m, rep)
    act = None
    if args.equivariant:
        act, _ = _verified_action(m, rep, adjoint_rep(a))
    res = rigidity_probe(a, act)
    rep.data["rigidity"] = {"dim_H": list(res.dims), "rigid": res.rigid, "equivariant": res.equivariant}
    tag = "_G" if res.equivariant else ""
    rep.say(f"H{tag}^2 x H{tag}^3 dims ({res.dims[0]}, {res.dims[1]}): {res.verdict}")
    return PASS


COMMANDS = {
    "check": cmd_check,
    "cohomology": cmd_cohomology,
    "equivariant-cohomology": cmd_equivariant_cohomology,
    "fixed-subalgebra": cmd_fixed_subalgebra,
    "deformation": cmd_deformation,
    "rigidity": cmd_rigidity,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lieyamaguti", description="Lie-Yamaguti algebra toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--manifest", required=True, metavar="PATH")
        p.add_argument("--format", choices=("text", "machine"), default="text")
        return p

    common(sub.add_parser("check", help="run every applicable checker"))
    for name in ("cohomology", "equivariant-cohomology"):
        p = common(sub.add_parser(name, help=f"compute {name.replace('-', ' ')}"))
        p.add_argument("--level", type=int)
        p.add_argument("--representatives", action="store_true")
    p = common(sub.add_parser("fixed-subalgebra", help="fixed points of a subgroup"))
    p.add_argument("--subgroup", metavar="LABELS", help="comma-separated element labels")
    p = common(sub.add_parser("deformation", help="deformation jets"))
    p.add_argument("subcommand", choices=("check", "trivialize", "compare"))
    p.add_argument("--order", type=int)
    p = common(sub.add_parser("rigidity", help="cohomological rigidity test"))
    p.add_argument("--equivariant", action="store_true")
    return parser


def run(argv=None) -> tuple[int, str]:
    """Execute a command; return (exit status, rendered output)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "level", None) is not None and args.level < 1:
        parser.error("--level must be at least 1")
    if getattr(args, "order", None) is not None and args.order < 1:
        parser.error("--order must be at least 1")
    rep = None
    try:
        m = load(args.manifest)
        rep = Report(args.command, m.field)
        status = COMMANDS[args.command](m, args, rep)
    except Violation as exc:
        status = VIOLATION
        rep.data["violation"] = exc.record
    except (VerificationError, ClosureError, ContainmentError, CocycleError, IncompatibleRepresentationError) as exc:
        status = VIOLATION
        rep.data["violation"] = {"error": type(exc).__name__, "message": str(exc)}
        witness = getattr(exc, "witness", None)
        if witness is not None:
            rep.data["violation"]["witness"] = rep.enc(witness)
        rep.say(f"violation: {exc}")
    except (ManifestError, DimensionError, FieldMismatchError, UnsupportedConfigurationError, UnverifiedError) as exc:
        status = INPUT_ERROR
        if rep is None:
            from .fields import QQ

            rep = Report(args.command, QQ)
        rep.data["error"] = {"type": type(exc).__name__, "message": str(exc)}
        rep.say(f"error: {exc}")
    rep.data["exit"] = status
    return status, rep.render(args.format)


def main(argv=None) -> int:
    status, out = run(argv)
    sys.stdout.write(out)
    return status


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
