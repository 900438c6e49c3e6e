import io
import json
import subprocess
import sys

import pytest

from tutteclosure import cli
from tutteclosure.errors import Counterexample
from tutteclosure.graph import complete, parse_graph6


def run(argv, stdin="", monkeypatch=None):
    out = io.StringIO()
    if monkeypatch is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.run(argv, out)
    return code, [json.loads(line) for line in out.getvalue().splitlines()]


def test_closure_of_six_cycle_is_complete(monkeypatch):
    code, recs = run(["closure", "tutte"], "EhEG\n", monkeypatch)
    assert code == 0
    assert parse_graph6(recs[0]["closure_graph6"]) == complete(6)
    assert recs[0]["closure_trace"]["terminal"] == "completed-to-K_n"
    assert recs[-1]["summary"] and recs[-1]["ok"] == 1


def test_k_closure_mode(monkeypatch):
    code, recs = run(["closure", "k=2"], "EhEG\n", monkeypatch)
    assert code == 0 and recs[0]["closure_graph6"] == "EhEG"  # C_6 neighbourhoods are not connected
    code, _ = run(["closure", "k=x"], "EhEG\n", monkeypatch)
    assert code == 2


def test_malformed_line_gives_record_and_exit_2(monkeypatch):
    code, recs = run(["check-clawfree"], "Bw\nnot graph6!\n\nCF\n", monkeypatch)
    assert code == 2
    assert [r["status"] for r in recs[:-1]] == ["ok", "input-error", "ok"]
    assert recs[1]["line"] == 2
    assert recs[2]["claw_free"] is False and recs[2]["witness"] == [0, 1, 2, 3]
    assert recs[-1]["input_errors"] == 1


def test_tutte_path_and_krausz(monkeypatch):
    code, recs = run(["tutte-path", "0", "3"], "EhEG\n", monkeypatch)
    assert code == 0 and recs[0]["path"] == [0, 1, 2, 3]
    code, recs = run(["krausz", "--rank", "2"], "CF\n", monkeypatch)
    assert code == 0 and recs[0]["cover"] is None
    code, _ = run(["krausz", "--rank", "0"], "CF\n", monkeypatch)
    assert code == 2


def test_derive_forbidden_prints_seven():
    code, recs = run(["derive-forbidden"])
    assert code == 0
    assert len(recs) == 8 and sum(1 for r in recs if "graph6" in r) == 7


def test_counterexample_exit_code(monkeypatch):
    def broken(g, opts):
        raise Counterexample("forced", {"graph6": "Bw"})

    monkeypatch.setitem(cli.HANDLERS, "check-clawfree", broken)
    code, recs = run(["check-clawfree"], "Bw\nnot graph6!\n", monkeypatch)
    assert code == 1  # counterexamples outrank input errors
    assert recs[0]["status"] == "counterexample" and recs[0]["counterexample"]["check"] == "forced"


def test_neighbourhood_suite_small():
    code, recs = run(["verify-lemmas", "--suite", "neighbourhood", "--nmax", "5"])
    assert code == 0 and recs[-1]["verified"] == recs[-1]["instances"]


def test_budget_exceeded_exit_code(monkeypatch):
    code, recs = run(["tutte-connected", "--budget", "1"], "Fhdhw\n", monkeypatch)
    assert code == 3 and recs[0]["status"] == "budget-exceeded"


def test_bad_flags_exit_2(capsys):
    assert cli.run(["nonsense"], io.StringIO()) == 2
    assert cli.run(["closure", "--budget", "0"], io.StringIO()) == 2
    assert cli.run(["cover-closure", "--source", "enum"], io.StringIO()) == 2
    assert "error" in capsys.readouterr().err


def test_env_overrides_and_flag_precedence(monkeypatch):
    monkeypatch.setenv("TUTTECLOSURE_NMAX", "4")
    code, recs = run(["cover-closure", "--source", "enum"])
    assert code == 0 and recs[-1]["instances"] == 1 + 1 + 2 + 5
    code, recs = run(["cover-closure", "--source", "enum", "--nmax", "3"])
    assert recs[-1]["instances"] == 1 + 1 + 2
    monkeypatch.setenv("TUTTECLOSURE_NMAX", "many")
    assert cli.run(["cover-closure", "--source", "enum"], io.StringIO()) == 2


def test_file_source(tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("Bw\nEhEG\n")
    code, recs = run(["tutte-connected", "--input", str(f)])
    assert code == 0 and [r["tutte_connected"] for r in recs[:-1]] == [True, True]
    assert cli.run(["tutte-connected", "--input", str(tmp_path / "missing")], io.StringIO()) == 2


def test_jobs_keep_order():
    serial = io.StringIO()
    parallel = io.StringIO()
    cli.run(["cover-closure", "--source", "enum", "--nmax", "5"], serial)
    cli.run(["cover-closure", "--source", "enum", "--nmax", "5", "--jobs", "2"], parallel)
    assert serial.getvalue() == parallel.getvalue()


@pytest.mark.parametrize("argv", [
    ["verify-lemmas", "--count", "40", "--seed", "11"],
    ["verify-theorem5", "--nmax", "5", "--random-count", "10", "--random-n", "7", "--seed", "4"],
])
def test_console_runs_are_byte_identical(argv):
    cmd = [sys.executable, "-m", "tutteclosure", *argv]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
