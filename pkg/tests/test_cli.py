import json
import subprocess
import sys

import pytest

from kcrank.cli import main
from kcrank.formats import table_from_csv, table_from_json
from kcrank.tables import build


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "--k", "2", "--order", "3")
    assert code == 0
    assert out.splitlines()[1:] == ["0: 1", "1: 0 1", "2: 1 1 1", "3: 2 2 1 1"]


def test_table_csv_and_json_round_trip(capsys):
    _, out, _ = run(capsys, "table", "--k", "3", "--order", "8", "--format", "csv")
    assert table_from_csv(out, 3) == build(3, 8)
    _, out, _ = run(capsys, "table", "--k", "3", "--order", "8", "--format", "json")
    assert table_from_json(out) == build(3, 8)


def test_table_cache(capsys, tmp_path):
    code, _, _ = run(capsys, "table", "--k", "2", "--order", "5", "--cache", "--cache-dir", str(tmp_path))
    assert code == 0
    assert (tmp_path / "kcrank_k2_N5.txt").exists()


def test_table_output_file(capsys, tmp_path):
    dest = tmp_path / "t.txt"
    code, out, _ = run(capsys, "table", "--k", "2", "--order", "2", "--output", str(dest))
    assert code == 0 and out == ""
    assert dest.read_text().endswith("2: 1 1 1\n")


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--order", "4", "1/((-q;q)^2)")
    assert code == 0
    assert out.split() == ["1", "-2", "1", "-2", "4"]


def test_eval_syntax_error(capsys):
    text = "J(12,27)/J(3) - q*J(6,27)/J(3)"
    code, _, err = run(capsys, "eval", "--order", "4", text)
    assert code == 1
    lines = err.splitlines()
    assert "syntax error" in lines[0]
    assert lines[2].index("^") - 2 == text.index("q*")


def test_eval_not_divisible(capsys):
    code, _, err = run(capsys, "eval", "--order", "3", "(q;q)/2")
    assert code == 1 and "kcrank:" in err


def test_residues_and_moments(capsys):
    code, out, _ = run(capsys, "residues", "--k", "2", "--order", "4", "--mod", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["values"][4] == ["12", "8"]
    code, out, _ = run(capsys, "moments", "--k", "2", "--order", "3", "--j", "1", "--route", "gf1")
    assert code == 0 and out.split() == ["0", "-1", "3", "-7"]
    code, _, _ = run(capsys, "residues", "--k", "2", "--order", "4", "--mod", "1")
    assert code == 1


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--k", "2", "--order", "3")
    assert code == 0 and out.splitlines()[-1] == "3: 2 2 1 1"
    code, _, err = run(capsys, "oracle", "--k", "2", "--order", "30")
    assert code == 1 and "budget" in err.lower()


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "mod4", "--order", "30", "--kmax", "4", "--records", "nonpass")
    assert code == 0
    assert out.splitlines()[-1].startswith("summary: pass=")
    assert all(not line.startswith("pass") for line in out.splitlines())
    code, out, _ = run(capsys, "verify", "--suite", "mod3", "--order", "10", "--kmax", "2", "--format", "json")
    assert code == 1
    assert json.loads(out)["summary"]["violation"] == 1


def test_bad_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--k", "0", "--order", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["table", "--k", "2", "--order", "-1"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kcrank", "eval", "--order", "2", "(q;q)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.split() == ["1", "-1", "-1"]
