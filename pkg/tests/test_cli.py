import json
import subprocess
import sys

import pytest

from octarray.cli import main

ARRAY = {"type": "array", "rows": [[2, 3, 1], [1, 1, 5], [1, 2, 2]]}


@pytest.fixture
def cli(capsys, monkeypatch):
    def run(argv, payload=None):
        if payload is not None:
            import io

            monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(payload)))
        code = main(argv)
        out, err = capsys.readouterr()
        return code, out, err

    return run


def test_condense(cli):
    code, out, err = cli(["condense", "down"], ARRAY)
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"] == [[4, 3, 4], [0, 3, 3], [0, 0, 1]]
    assert doc["shape"] == [11, 6, 1]


def test_rsk_and_inverse(cli):
    code, out, _ = cli(["rsk"], ARRAY)
    assert code == 0
    doc = json.loads(out)
    code, out, _ = cli(["rsk", "--inverse"], doc)
    assert code == 0
    assert json.loads(out)["rows"] == ARRAY["rows"]


def test_propagate(cli):
    code, out, _ = cli(["propagate"], ARRAY)
    assert code == 0
    doc = json.loads(out)
    assert doc["polarized"] is True
    assert doc["top"][-1] == [0, 4, 10, 18]


def test_hive_round_trip(cli, f4):
    code, out, _ = cli(["hive", "--to-pair"], f4["triangle"])
    assert code == 0
    pair = json.loads(out)
    code, out, _ = cli(["hive", "--from-pair"], pair)
    assert code == 0
    assert json.loads(out)["rows"] == f4["triangle"]["rows"]


def test_hive_report(cli, f4):
    code, out, _ = cli(["hive"], f4["triangle"])
    assert code == 0
    doc = json.loads(out)
    assert doc["concave"] is True
    assert doc["increments"]["lam"] == [3, 2, 0]


def test_commute(cli, f3):
    code, out, _ = cli(["commute"], f3["pair"])
    assert code == 0
    assert json.loads(out)["a"]["rows"] == f3["expected"]["commute"]["a"]["rows"]


def test_commute_functional(cli, f4):
    code, out, _ = cli(["commute", "--functional"], f4["triangle"])
    assert code == 0
    assert json.loads(out)["rows"] == f4["expected"]["com_prime"]["rows"]


def test_lr(cli):
    code, out, _ = cli(["lr", "2,1,0", "2,1,0", "3,2,1", "--oracle"])
    assert code == 0
    doc = json.loads(out)
    assert doc["coefficient"] == 2 == doc["oracle"]


def test_tableau(cli, f1, f1_array):
    code, out, _ = cli(["tableau"], f1["array"])
    assert code == 0
    rows = [[int(x) for x in line.split()] for line in out.splitlines()]
    assert rows == f1["expected"]["ssyt_rows"][::-1]


def test_tableau_pair(cli, f3):
    pair = dict(f3["pair"])
    pair = json.loads(json.dumps(pair))
    pair["kind"] = "antistandard"
    code, out, err = cli(["tableau"], pair)
    assert code == 1  # anti-standard pairs are rejected
    code, out, err = cli(["verify", "thm4", "--cases", "3"])
    assert code == 0


def test_malformed_input_exit_2(cli):
    code, out, err = cli(["condense", "down"], {"rows": "nope"})
    assert code == 2
    assert json.loads(err)["error"] == "malformed input"


def test_validation_error_exit_1(cli):
    code, out, err = cli(["condense", "down"],
                         {"type": "array", "rows": [[1, -2]]})
    assert code == 1
    assert json.loads(err)["error"] == "validation"


def test_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "octarray.cli", "lr", "1", "1", "1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coefficient"] == 1
