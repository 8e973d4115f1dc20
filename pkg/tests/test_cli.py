"""Command-line interface: formats, exit codes, guards."""
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from liejordan.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rdim_text(capsys):
    code, out, err = run_cli(capsys, "rdim", "--family", "G", "--rank", "2")
    assert (code, out, err) == (0, "7\n", "")


def test_rdim_accepts_lowercase_family(capsys):
    code, out, _ = run_cli(capsys, "rdim", "--family", "g", "--rank", "2")
    assert (code, out) == (0, "7\n")


def test_rdim_json(capsys):
    code, out, _ = run_cli(
        capsys, "rdim", "--family", "E", "--rank", "6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "family": "E", "rank": 6, "rdim": 27,
        "witness": [[0, 0, 0, 0, 1, 0]], "per_weight_dims": [27],
    }


def test_rdim_csv(capsys):
    code, out, _ = run_cli(
        capsys, "rdim", "--family", "D", "--rank", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family,rank,rdim,witness"
    assert lines[1] == 'D,4,16,"0,0,0,1;0,0,1,0"'


def test_table_text(capsys):
    code, out, _ = run_cli(capsys, "table", "--max-rank", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("type")
    assert "rdim" in lines[0]
    assert len(lines) == 15  # header + 14 types of rank <= 4
    g2 = next(ln for ln in lines if ln.startswith("G2"))
    assert " 7 " in g2 or g2.rstrip().endswith(" 7") or "7" in g2.split()


def test_table_deterministic(capsys):
    first = run_cli(capsys, "table", "--max-rank", "5", "--format", "csv")
    second = run_cli(capsys, "table", "--max-rank", "5", "--format", "csv")
    assert first == second
    assert first[0] == 0


def test_table_csv_quotes_witness(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--max-rank", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family,rank,rdim,witness"
    assert 'B,2,4,"0,1"' in lines


def test_table_json_matches_rdim_json(capsys):
    code, table_out, _ = run_cli(
        capsys, "table", "--max-rank", "3", "--format", "json")
    assert code == 0
    rows = {(r["family"], r["rank"]): r for r in json.loads(table_out)}
    code, rdim_out, _ = run_cli(
        capsys, "rdim", "--family", "B", "--rank", "3", "--format", "json")
    assert code == 0
    single = json.loads(rdim_out)
    assert rows[("B", 3)] == single


def test_dim(capsys):
    code, out, _ = run_cli(
        capsys, "dim", "--family", "A", "--rank", "1", "--weight", "1")
    assert (code, out) == (0, "2\n")
    code, out, _ = run_cli(
        capsys, "dim", "--family", "B", "--rank", "3", "--weight", "0,0,1",
        "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "family": "B", "rank": 3, "weight": [0, 0, 1], "dim": 8}


def test_dim_rejects_malformed_weight(capsys):
    code, _, err = run_cli(
        capsys, "dim", "--family", "A", "--rank", "2", "--weight", "1,x")
    assert code == 2
    assert "comma-separated integers" in err
    code, _, err = run_cli(
        capsys, "dim", "--family", "A", "--rank", "2", "--weight", "1")
    assert code == 2
    assert "rank" in err


def test_center(capsys):
    code, out, _ = run_cli(capsys, "center", "--family", "E", "--rank", "7")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "order 2"
    assert len(lines) == 2
    code, out, _ = run_cli(
        capsys, "center", "--family", "E", "--rank", "8", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "family,rank,center_order,class", "E,8,1,"]
    code, out, _ = run_cli(
        capsys, "center", "--family", "A", "--rank", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["order"] == 3
    assert len(payload["classes"]) == 2


def test_faithful(capsys):
    code, out, _ = run_cli(
        capsys, "faithful", "--family", "B", "--rank", "3",
        "--weights", "1,0,0")
    assert (code, out) == (0, "false\n")
    code, out, _ = run_cli(
        capsys, "faithful", "--family", "B", "--rank", "3",
        "--weights", "0,0,1")
    assert (code, out) == (0, "true\n")
    code, out, _ = run_cli(
        capsys, "faithful", "--family", "D", "--rank", "4",
        "--weights", "1,0,0,0;0,0,0,1", "--format", "json")
    assert code == 0
    assert json.loads(out)["faithful"] is True


def test_faithful_rejects_empty_weights(capsys):
    code, _, err = run_cli(
        capsys, "faithful", "--family", "A", "--rank", "1", "--weights", ";")
    assert code == 2
    assert "no weights" in err


def test_bound_text_symbolic(capsys):
    code, out, _ = run_cli(
        capsys, "bound", "--family-of-groups", "lie-connected", "--n", "3")
    assert (code, out) == (0, "J(54)\n")
    code, out, _ = run_cli(
        capsys, "bound", "--family-of-groups", "lie", "--n", "3",
        "--components", "2")
    assert (code, out) == (0, "2 * J(54)^2\n")


def test_bound_text_big_integer_gets_magnitude_tag(capsys):
    code, out, _ = run_cli(
        capsys, "bound", "--family-of-groups", "algebraic", "--n", "2")
    assert code == 0
    value = str(math.factorial(105))
    assert out == f"{value} ({len(value)} digits, ~1.08139e168)\n"


def test_bound_text_small_integer_plain(capsys):
    code, out, _ = run_cli(
        capsys, "bound", "--family-of-groups", "lie", "--n", "0")
    assert (code, out) == (0, "1\n")


def test_bound_json(capsys):
    code, out, _ = run_cli(
        capsys, "bound", "--family-of-groups", "lie", "--n", "3",
        "--components", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["family_of_groups"] == "lie"
    assert payload["n"] == 3
    assert payload["components"] == 2
    assert payload["rendered"] == "2 * J(54)^2"
    assert payload["conventions"] == []
    assert payload["bound"] == {
        "kind": "product",
        "operands": [
            {"kind": "exact", "value": "2"},
            {"kind": "power",
             "operands": [{"kind": "symbolic_j", "arg": 54}],
             "exponent": 2},
        ]}


def test_bound_json_full_precision(capsys):
    code, out, _ = run_cli(
        capsys, "bound", "--family-of-groups", "algebraic", "--n", "2",
        "--format", "json")
    payload = json.loads(out)
    assert payload["bound"] == {
        "kind": "exact", "value": str(math.factorial(105))}
    assert payload["rendered"] == str(math.factorial(105))


def test_bound_zero_convention_flagged(capsys):
    code, out, _ = run_cli(
        capsys, "bound", "--family-of-groups", "compact-complex", "--n", "0",
        "--format", "json")
    payload = json.loads(out)
    assert payload["conventions"] == ["J(0)=1"]
    assert payload["bound"] == {"kind": "exact", "value": "1"}


def test_bound_csv(capsys):
    code, out, _ = run_cli(
        capsys, "bound", "--family-of-groups", "riemannian", "--n", "2",
        "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "family_of_groups,n,components,bound", "riemannian,2,,J(54)"]


def test_bound_rejects_bad_usage(capsys):
    code, _, err = run_cli(
        capsys, "bound", "--family-of-groups", "riemannian", "--n", "2",
        "--components", "2")
    assert code == 2
    assert "does not apply" in err
    code, _, err = run_cli(
        capsys, "bound", "--family-of-groups", "lie", "--n", "2",
        "--components", "0")
    assert code == 2
    code, _, err = run_cli(
        capsys, "bound", "--family-of-groups", "lie", "--n", "-1")
    assert code == 2


def test_bad_family_exits_2(capsys):
    code, _, err = run_cli(capsys, "rdim", "--family", "H", "--rank", "2")
    assert code == 2
    assert "error:" in err


def test_rank_budget_exits_3(capsys):
    code, _, err = run_cli(capsys, "rdim", "--family", "A", "--rank", "10")
    assert code == 3
    assert "error:" in err
    code, _, _ = run_cli(capsys, "table", "--max-rank", "10")
    assert code == 3


def test_rank_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("LIEJORDAN_MAX_RANK", "12")
    code, out, _ = run_cli(capsys, "rdim", "--family", "C", "--rank", "12")
    assert (code, out) == (0, "24\n")


def test_bad_env_value_exits_2(capsys, monkeypatch):
    monkeypatch.setenv("LIEJORDAN_MAX_RANK", "many")
    code, _, err = run_cli(capsys, "rdim", "--family", "A", "--rank", "2")
    assert code == 2


def test_argparse_rejects_unknown_input():
    with pytest.raises(SystemExit) as exc:
        main(["rdim", "--family", "A", "--rank", "2", "--format", "yaml"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["bound", "--family-of-groups", "unknown", "--n", "1"])
    assert exc.value.code == 2


def test_jordan_finite_text(capsys):
    code, out, _ = run_cli(
        capsys, "jordan-finite", "--input", str(FIXTURES / "s4.grp"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "order 24"
    assert lines[1] == "jordan_constant 6"
    assert lines[2].startswith("witness_subgroup ")
    assert lines[3] == "b 24"


def test_jordan_finite_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "jordan-finite", "--input", str(FIXTURES / "s4.grp"),
        "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert list(payload) == ["order", "jordan_constant", "witness_subgroup", "b"]
    assert payload["order"] == 24
    assert payload["jordan_constant"] == 6
    assert payload["b"] == 24
    assert payload["witness_subgroup"] == list(range(24))


def test_jordan_finite_table_input(capsys):
    code, out, _ = run_cli(
        capsys, "jordan-finite",
        "--input", str(FIXTURES / "corpus" / "o08_q8.grp"),
        "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "order,jordan_constant,witness_subgroup,b"
    assert lines[1] == "8,2,0;1;2;3;4;5;6;7,8"


def test_jordan_finite_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "jordan-finite", "--input", str(tmp_path / "nope.grp"))
    assert code == 2
    assert "cannot read" in err


def test_jordan_finite_bad_table_exits_2(capsys, tmp_path):
    bad = tmp_path / "loop.grp"
    bad.write_text(
        "table 5\n0 1 2 3 4\n1 0 3 4 2\n2 3 4 0 1\n3 4 1 2 0\n4 2 0 1 3\n")
    code, _, err = run_cli(capsys, "jordan-finite", "--input", str(bad))
    assert code == 2
    assert "associativity" in err


def test_jordan_finite_guards_exit_3(capsys):
    a5 = str(FIXTURES / "a5.grp")
    code, _, err = run_cli(
        capsys, "jordan-finite", "--input", a5, "--closure-limit", "59")
    assert code == 3
    code, _, err = run_cli(
        capsys, "jordan-finite", "--input", a5, "--jordan-limit", "50")
    assert code == 3
    assert "error:" in err


def test_module_entry_point_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "liejordan", "rdim", "--family", "A",
         "--rank", "1"],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert proc.stdout == "2\n"
