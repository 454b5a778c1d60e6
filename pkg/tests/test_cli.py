from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from hws.cli import run


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_spectra_brute_json():
    code, text = _run("spectra", "--q", "2", "--method", "brute", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert doc["q"] == 2 and doc["command"] == "spectra"
    assert doc["data"]["A"]["2"] == {"2": 6, "3": 16, "4": 13}
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_betti_table_q5():
    code, text = _run("betti", "--q", "5", "--elongation", "0", "--format", "table")
    assert code == 0
    assert "3000" in text and "2160" in text


def test_verify_q3_full():
    code, text = _run("verify", "--q", "3", "--level", "full")
    assert code == 0
    assert "[fail]" not in text


@pytest.mark.parametrize("argv", [("spectra", "--q", "6"), ("betti", "--q", "3", "--elongation", "9"),
                                  ("gwp", "--q", "3", "--method", "brute"),
                                  ("spectra", "--q", "3", "--threads", "0")])
def test_usage_errors(argv):
    assert _run(*argv)[0] == 2


def test_closed_forms_below_seven_is_usage_error():
    assert _run("gwp", "--q", "5", "--method", "closed")[0] == 2


def test_deterministic_output():
    a = _run("conics", "--q", "4", "--format", "json")
    b = _run("conics", "--q", "4", "--format", "json")
    assert a == b and a[0] == 0


def test_timestamp_header():
    code, text = _run("hamming", "--q", "3", "--timestamp")
    assert code == 0 and text.startswith("# generated ")


@pytest.mark.parametrize("cmd", [["gwp", "--q", "7"], ["hamming", "--q", "4", "--method", "pipeline"],
                                 ["correspondence", "--q", "3", "--d", "1", "--m", "2"],
                                 ["spectra", "--q", "3", "--format", "csv", "--r-max", "2"]])
def test_commands_succeed(cmd):
    assert _run(*cmd)[0] == 0


def test_r_max_does_not_corrupt_cache():
    _run("spectra", "--q", "3", "--r-max", "1")
    code, text = _run("spectra", "--q", "3", "--format", "json")
    assert set(json.loads(text)["data"]["A"]) == {str(r) for r in range(7)}


def test_console_entry_point():
    p = subprocess.run([sys.executable, "-m", "hws", "hamming", "--q", "5", "--format", "json"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["data"]["d"] == [15, 19, 20, 23, 24, 25]


def test_failed_check_exit_code(monkeypatch):
    from hws import formulas
    monkeypatch.setattr(formulas, "hamming_weights", lambda q: (0,) * 6)
    assert _run("hamming", "--q", "3", "--method", "pipeline")[0] == 1
