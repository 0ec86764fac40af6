import csv
import io
import json
import subprocess
import sys

import pytest

from tensor_orbit import counting
from tensor_orbit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_examples(capsys):
    assert run(capsys, "count", "--rank", "3", "--tensors", "6") == (0, "16\n", "")
    assert run(capsys, "count", "--rank", "3", "--tensors", "4", "--method", "kronecker")[1] == "5\n"
    assert run(capsys, "count", "--rank", "3", "--tensors", "4", "--method", "brute")[1] == "5\n"
    assert run(capsys, "count", "--rank", "3", "--tensors", "6", "--connected")[1] == "11\n"


def test_sequence_oeis(capsys):
    code, out, _ = run(capsys, "sequence", "--rank", "4", "--max-n", "4", "--format", "oeis")
    assert code == 0
    assert out.splitlines() == ["1 1", "2 14", "3 132", "4 4154"]


def test_sequence_json_uses_strings(capsys):
    code, out, _ = run(capsys, "sequence", "--rank", "4", "--max-n", "10", "--format", "json")
    data = json.loads(out)
    values = data["values"]
    assert [v["n"] for v in values] == list(range(1, 11))
    assert all(isinstance(v["value"], str) for v in values)
    assert values[-1]["value"] == str(counting.count_invariants(4, 10))


def test_sequence_csv_and_connected(capsys):
    _, out, _ = run(capsys, "sequence", "--rank", "3", "--max-n", "5", "--format", "csv")
    rows = [r for r in csv.reader(io.StringIO(out)) if r and r[0].isdigit()]
    assert [r[1] for r in rows] == ["1", "5", "16", "86", "448"]
    _, a, _ = run(capsys, "connected", "--rank", "3", "--max-n", "5")
    _, b, _ = run(capsys, "sequence", "--rank", "3", "--max-n", "5", "--connected")
    assert a == b
    assert a.splitlines()[-1] == "5 318"


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys, "count", "--rank", "3", "--tensors", "5")[0] == 1
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "count", "--rank", "3")[0] == 1
    assert run(capsys, "--threads", "0", "count", "--rank", "3", "--tensors", "2")[0] == 1
    assert run(capsys, "count", "--rank", "3", "--tensors", "8", "--method", "brute")[0] == 2
    monkeypatch.setattr(counting, "count_read", lambda d, n: 0)
    assert run(capsys, "count", "--rank", "3", "--tensors", "4", "--method", "read")[0] == 3


def test_tables(capsys):
    code, out, _ = run(capsys, "character-table", "--size", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["rows"]["[3]"] == ["1", "1", "1"]
    _, out, _ = run(capsys, "kronecker-table", "--size", "4", "--even", "--format", "json")
    rows = json.loads(out)
    assert all(isinstance(r["value"], str) for r in rows)
    assert all(int(r["value"]) > 0 for r in rows)
    _, text, _ = run(capsys, "kronecker-table", "--size", "2")
    assert text.splitlines()[0] == "[2] [2] [2] 1"


def test_correlator_command(capsys):
    code, out, _ = run(capsys, "correlator", "--rank", "3", "--sigma", "(),(),()", "--tau", "(),(),()",
                       "--degree", "2", "--at", "2")
    assert code == 0
    assert out.splitlines()[-1] == "16"
    code, out, _ = run(capsys, "correlator", "--rank", "3", "--sigma", "(),(),()", "--degree", "2",
                       "--one-point", "--at", "3")
    assert out.splitlines()[-1] == "27"
    assert run(capsys, "correlator", "--rank", "3", "--sigma", "(),(),()", "--degree", "2")[0] == 1


def test_symplectic_command(capsys):
    _, out, _ = run(capsys, "symplectic-k4", "--coeff", "T_000,T_032,T_212,T_220")
    assert out == "4\n"
    _, out, _ = run(capsys, "symplectic-k4", "--coeff", "T_000^2")
    assert out == "0\n"
    assert run(capsys, "symplectic-k4", "--coeff", "T_00")[0] == 1


def test_algebra_check(capsys):
    code, out, _ = run(capsys, "algebra-check", "--rank", "3", "--tensors", "2", "--samples", "2")
    report = json.loads(out)
    assert code == 0 and report["dimension"] == 1
    assert report["unit_check"]["c"] == "16"


def test_deterministic_output(capsys):
    argv = ["sequence", "--rank", "5", "--max-n", "6", "--method", "read", "--format", "json"]
    first = run(capsys, *argv)
    second = run(capsys, "--threads", "1", *argv)
    assert first == second


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "--quick")
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.startswith("PASS ") for line in lines)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "tensor_orbit", "count", "--rank", "4", "--tensors", "4"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "14\n"
