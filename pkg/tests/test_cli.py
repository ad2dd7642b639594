import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from lieyamaguti.cli import run

FAILING = {"nonabelian2_negation", "l0_diag_identity_module", "ly_axiom_failure", "raw_ly1_violation"}
ALL = sorted(p.stem for p in FIXTURES.glob("*.json"))


def machine(*argv):
    status, out = run([*argv, "--format", "machine"])
    return status, json.loads(out)


def fx(name):
    return str(FIXTURES / f"{name}.json")


@pytest.mark.parametrize("name", ALL)
def test_check_exit_codes(name):
    status, data = machine("check", "--manifest", fx(name))
    assert status == (1 if name in FAILING else 0)
    assert data["exit"] == status
    assert data["ok"] == (status == 0)


def test_failure_record_names_axiom_and_witness():
    _, data = machine("check", "--manifest", fx("ly_axiom_failure"))
    rec = data["checks"][0]
    assert rec["axiom"] == "LY5"
    assert rec["witness"] == ["e1", "e2", "e1", "e2"]
    assert rec["residual"] == ["1", "0"]


def test_raw_table_failure():
    _, data = machine("check", "--manifest", fx("raw_ly1_violation"))
    assert data["checks"][0]["axiom"] == "LY1"


def test_text_output_ends_with_machine_block():
    status, out = run(["check", "--manifest", fx("nonabelian2")])
    text, _, block = out.partition("--- machine ---\n")
    assert status == 0 and text
    assert json.loads(block)["ok"]


@pytest.mark.parametrize(
    "argv",
    [
        ["cohomology", "--manifest", fx("nonabelian2"), "--level", "2"],
        ["equivariant-cohomology", "--manifest", fx("l0_neg"), "--representatives"],
        ["deformation", "trivialize", "--manifest", fx("jet_gauge_null")],
        ["fixed-subalgebra", "--manifest", fx("abelian3_action")],
    ],
)
def test_output_is_deterministic(argv):
    assert run(argv) == run(argv)


def test_cohomology_dims():
    _, data = machine("cohomology", "--manifest", fx("abelian2"), "--level", "1")
    rec = data["cohomology"]
    assert (rec["dim_Z"], rec["dim_B"]) == (6, 0)
    assert rec["dim_H"] == [2, 4]


def test_cohomology_level_two_of_example():
    _, data = machine("cohomology", "--manifest", fx("nonabelian2"), "--level", "2")
    assert data["cohomology"]["dim_H"] == [0, 1]


def test_equivariant_cohomology():
    status, data = machine("equivariant-cohomology", "--manifest", fx("l0_neg"))
    assert status == 0
    assert data["cohomology"]["dim_H"] == [0, 1]
    assert data["cohomology"]["equivariant"]


def test_equivariant_cohomology_needs_an_action():
    status, _ = run(["equivariant-cohomology", "--manifest", fx("nonabelian2")])
    assert status == 2


def test_fixed_subalgebra():
    status, data = machine("fixed-subalgebra", "--manifest", fx("abelian3_action"))
    assert status == 0
    assert data["fixed_subalgebra"]["dim"] == 2


def test_trivialize_gauge_of_null():
    status, data = machine("deformation", "trivialize", "--manifest", fx("jet_gauge_null"))
    rec = data["trivialization"]
    assert status == 0
    assert rec["trivial"] and rec["transformed_jet_null"]
    assert len(rec["steps"]) == 3


def test_trivialize_reports_obstruction():
    status, data = machine("deformation", "trivialize", "--manifest", fx("jet_abelian_f1"))
    rec = data["trivialization"]
    assert status == 0
    assert not rec["trivial"]
    assert rec["obstruction_order"] == 1
    assert rec["obstruction_class"] == ["1", "0", "0", "0", "0", "0"]


def test_compare():
    status, data = machine("deformation", "compare", "--manifest", fx("jet_compare"))
    rec = data["comparison"]
    assert status == 0 and rec["equivalent"]


def test_compare_without_second_jet():
    status, _ = run(["deformation", "compare", "--manifest", fx("jet_null")])
    assert status == 2


def test_rigidity():
    _, data = machine("rigidity", "--manifest", fx("dim1"))
    assert data["rigidity"]["rigid"]
    _, data = machine("rigidity", "--manifest", fx("abelian2"))
    assert not data["rigidity"]["rigid"]


def test_bad_manifest_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "field": QQ}')
    status, out = run(["check", "--manifest", str(bad)])
    assert status == 2 and "line 2" in out
    unknown = tmp_path / "unknown.json"
    raw = json.loads((FIXTURES / "nonabelian2.json").read_text())
    raw["surprise"] = 1
    unknown.write_text(json.dumps(raw))
    assert run(["check", "--manifest", str(unknown)])[0] == 2


def test_console_entry_point():
    cmd = [sys.executable, "-m", "lieyamaguti", "check", "--manifest", fx("nonabelian2"), "--format", "machine"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0
    assert first.stdout == second.stdout
