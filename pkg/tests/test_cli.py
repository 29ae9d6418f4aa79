import json
import subprocess
import sys

import pytest

from conftest import GOLDEN, MUTATIONS
from partialhopf import catalog
from partialhopf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_crossed_passes(capsys):
    code, out, _ = run(capsys, "verify", "--catalog", "action_hss", "--profile", "crossed")
    assert code == 0
    assert out.splitlines()[-1] == "RESULT: PASS"
    assert "E6: " in out and "(informational)" not in out


def test_verify_core_marks_extra_checks_informational(capsys):
    code, out, _ = run(capsys, "verify", "--catalog", "action_h00", "--profile", "core")
    assert code == 0
    assert "E5: " in out and "(informational)" in out


def test_verify_reports_canonical_sides(capsys):
    _, out, _ = run(capsys, "verify", "--catalog", "action_hss")
    assert "[ok ] (nu, e1, e2) lhs = k2*e2 + k1*e3 | rhs = k2*e2 + k1*e3" in out


def test_verify_mutation_fails_with_counterexample(capsys):
    code, out, _ = run(capsys, "verify", "--input", str(MUTATIONS / "mutated_hss.def"), "--profile", "core")
    assert code == 1
    assert "counterexample E2 (nu, e1, e2)" in out
    assert out.splitlines()[-1] == "RESULT: FAIL"


def test_structured_record_counts(capsys):
    code, out, _ = run(capsys, "verify", "--catalog", "action_hss", "--profile", "crossed", "--format", "structured")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    counts = {}
    for r in records:
        counts[r["check"]] = counts.get(r["check"], 0) + 1
        assert set(r) == {"check", "tuple", "lhs", "rhs", "pass", "required"}
    assert counts == {"E1": 4, "E2": 64, "E3": 64, "E4": 16, "E5": 4, "E6": 64}


def test_verify_structures(capsys):
    assert run(capsys, "verify", "--catalog", "h4")[0] == 0
    for cid in ("hs", "hss", "h00"):
        assert run(capsys, "verify", "--catalog", cid)[0] == 0


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.def"
    bad.write_text("algebra a\n  basis 1 x\n  unit 1\n  mul x x = y\nend\n")
    code, _, err = run(capsys, "verify", "--input", str(bad))
    assert code == 2
    assert "bad.def:4:" in err and "'y'" in err


def test_unknown_catalog_and_missing_file(capsys, tmp_path):
    assert run(capsys, "verify", "--catalog", "nope")[0] == 2
    assert run(capsys, "verify", "--input", str(tmp_path / "missing.def"))[0] == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 2


def test_crossed_basis(capsys):
    code, out, _ = run(capsys, "crossed", "--catalog", "action_hss", "--emit", "basis")
    assert code == 0
    assert "rank 8" in out
    assert "  e2#gnu = l1*e2@g + e2@gnu - l2*e3@g" in out


def test_crossed_table_contains_worked_product(capsys):
    code, out, _ = run(capsys, "crossed", "--catalog", "action_hss", "--emit", "table")
    assert code == 0
    assert "(e1#nu) * (e2#nu) = (k1^2 - k2^2)*e3#1" in out


def test_crossed_table_structured(capsys):
    code, out, _ = run(capsys, "crossed", "--catalog", "action_hss", "--emit", "table",
                       "--over", "basis", "--format", "structured")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 64
    (rec,) = [r for r in records if r["left"] == ["e1", "1"] and r["right"] == ["e2", "1"]]
    assert rec["product"] == [["e3#1", "1"]]


def test_crossed_h00_reports_rank(capsys):
    code, out, _ = run(capsys, "crossed", "--catalog", "action_h00", "--emit", "basis")
    assert code == 0 and "rank 8" in out


def test_crossed_refuses_failing_core(capsys):
    code, out, err = run(capsys, "crossed", "--input", str(MUTATIONS / "mutated_hss.def"))
    assert code == 1 and not out
    assert "core axioms fail" in err


def test_crossed_check_flag(capsys):
    code, _, err = run(capsys, "crossed", "--catalog", "action_hs", "--emit", "basis", "--check")
    assert code == 0
    assert "crossed-associativity: PASS (512/512)" in err


def test_eval(capsys):
    assert run(capsys, "eval", "--catalog", "action_hss", "act(nu, e3)")[1] == "k2*e2 + k1*e3\n"
    assert run(capsys, "eval", "--catalog", "action_hss", "act(nu, e3)", "--set", "k1=1,k2=0")[1] == "e3\n"
    assert run(capsys, "eval", "--catalog", "action_hs", "omega(gnu, nu)")[1] == "l4*1 + l3*e1 - l2*e2 + l1*e3\n"


def test_eval_basis_coordinates(capsys):
    code, out, _ = run(capsys, "eval", "--catalog", "action_hss", "smash(e1,nu)*smash(e2,nu)",
                       "--basis", "--set", "k1=2", "--set", "k2=1/2", "--format", "structured")
    assert code == 0
    rec = json.loads(out)
    assert rec["kind"] == "crossed"
    assert rec["coords"] == [["e3#1", "15/4"]]


def test_eval_errors(capsys):
    assert run(capsys, "eval", "--catalog", "action_hss", "act(nu, e5)")[0] == 2
    assert run(capsys, "eval", "--catalog", "action_hss", "act(nu, e3)", "--set", "k1=1")[0] == 2
    assert run(capsys, "eval", "--catalog", "action_hss", "e1", "--set", "zz=1")[0] == 2
    assert run(capsys, "eval", "--catalog", "action_hss", "e1", "--set", "k1")[0] == 2
    assert run(capsys, "eval", "--catalog", "hss", "e1")[0] == 2


def test_eval_not_in_span(capsys):
    code, _, err = run(capsys, "eval", "--catalog", "action_hss", "tensor(1, g)", "--basis")
    assert code == 3
    assert "not in the span" in err


def test_catalog_list_and_show(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    assert [line.split()[0] for line in out.splitlines()] == list(catalog.CATALOG_IDS)
    code, out, _ = run(capsys, "catalog", "show", "h4")
    assert code == 0 and out == catalog.catalog_text("h4")


def test_workers_env_gives_same_output(monkeypatch, capsys):
    _, serial, _ = run(capsys, "verify", "--catalog", "action_hss", "--profile", "crossed")
    monkeypatch.setenv("PARTIALHOPF_WORKERS", "2")
    _, parallel, _ = run(capsys, "verify", "--catalog", "action_hss", "--profile", "crossed")
    assert serial == parallel


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "partialhopf", "verify", "--catalog", "action_hss"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.endswith("RESULT: PASS\n")


@pytest.mark.parametrize("golden,argv", [
    ("hss_basis.jsonl", ["crossed", "--catalog", "action_hss", "--emit", "basis", "--format", "structured"]),
    ("hss_table.jsonl", ["crossed", "--catalog", "action_hss", "--emit", "table", "--format", "structured"]),
    ("hss_verify.jsonl", ["verify", "--catalog", "action_hss", "--profile", "crossed", "--format", "structured"]),
])
def test_structured_golden_files(capsys, golden, argv):
    _, out, _ = run(capsys, *argv)
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")
