import random
from fractions import Fraction
from pathlib import Path

import pytest

from lieyamaguti import (
    QQ,
    Cochain,
    CochainPair,
    CochainSpace,
    FiniteGroup,
    GroupAction,
    LyAlgebra,
    Matrix,
    pair_spaces,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def nonabelian2():
    """[e1,e2]=e1, {e1,e2,e2}=e1."""
    return LyAlgebra.from_constants(2, [(0, 1, 0, 1)], [(0, 1, 1, 0, 1)]).verify()


def l0():
    """Zero binary bracket, {e1,e2,e2}=e1."""
    return LyAlgebra.from_constants(2, [], [(0, 1, 1, 0, 1)]).verify()


def sl2():
    """sl2 as a Lie-Yamaguti algebra with zero ternary bracket: h=e1, e=e2, f=e3."""
    return LyAlgebra.from_constants(3, [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)], []).verify()


def abelian(d):
    return LyAlgebra.abelian(d).verify()


ALGEBRAS = {
    "nonabelian2": nonabelian2,
    "l0": l0,
    "abelian2": lambda: abelian(2),
    "abelian3": lambda: abelian(3),
    "sl2": sl2,
}


def diag(*xs, field=QQ):
    n = len(xs)
    return Matrix([[field(xs[i]) if i == j else field(0) for j in range(n)] for i in range(n)], field, n)


def z2_action(a, *signs):
    G = FiniteGroup.cyclic(2).verify()
    return GroupAction(G, a, [Matrix.identity(a.dim, a.field), diag(*signs, field=a.field)])


def rand_coeffs(rng, n, lo=-4, hi=4):
    """Random small rationals, a few with denominators."""
    out = []
    for _ in range(n):
        x = Fraction(rng.randint(lo, hi), rng.choice((1, 1, 1, 2, 3)))
        out.append(x)
    return out


def rand_cochain(rng, space: CochainSpace):
    return Cochain(space, tuple(space.field(x) for x in rand_coeffs(rng, space.dim)))


def rand_pair(rng, level, d, dimV, field=QQ):
    even, odd = pair_spaces(level, d, dimV, field)
    return CochainPair(rand_cochain(rng, even), rand_cochain(rng, odd))


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(params=sorted(ALGEBRAS))
def algebra(request):
    return ALGEBRAS[request.param]()


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            name = nodeid.split("::test_criterion_")[1]
            if key != "passed" or outcomes.get(name) != "FAIL":
                outcomes[name] = "PASS" if key == "passed" else "FAIL"
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(outcomes):
        number, _, title = name.partition("_")
        terminalreporter.write_line(f"criterion {int(number):2d} {title.replace('_', ' ')}: {outcomes[name]}")
