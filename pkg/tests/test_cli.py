import json
import subprocess
import sys

import pytest

from sl3jones.cli import main
from sl3jones.serialize import from_obj
from sl3jones.tails import tail_psi

M2_TEXT = "1 - q - q^2 + q^3 + q^4 + q^5 - q^6 - q^7 - q^8 - q^9 + q^10"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tail_text(capsys):
    code, out, _ = run(capsys, "tail", "--m", "2", "--order", "10", "--format", "text")
    assert code == 0
    assert out.strip() == M2_TEXT


def test_tail_json_round_trips(capsys):
    code, out, _ = run(capsys, "tail", "--m", "3", "--order", "60", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["metadata"]["command"] == "tail"
    assert rec["metadata"]["parameters"] == {"m": 3, "order": 60, "method": "psi"}
    assert "version" in rec["metadata"] and "elapsed_seconds" in rec["metadata"]
    assert from_obj(rec["payload"]["value"]) == tail_psi(3, 60).series


def test_tail_tex_matches_table(capsys, table_rows):
    for m in (1, 4):
        code, out, _ = run(capsys, "tail", "--m", str(m), "--order", "150", "--format", "tex")
        assert out.strip() == table_rows[m]


def test_tail_csv(capsys):
    _, out, _ = run(capsys, "tail", "--m", "1", "--order", "3", "--format", "csv")
    assert out.splitlines() == ["degree,coefficient", "0,1", "1,0", "2,0", "3,0"]


def test_tail_deterministic(capsys):
    outs = {run(capsys, "tail", "--m", "5", "--order", "150")[1] for _ in range(2)}
    assert len(outs) == 1


def test_tail_methods_agree(capsys):
    a = run(capsys, "tail", "--m", "3", "--order", "100", "--method", "psi")[1]
    b = run(capsys, "tail", "--m", "3", "--order", "100", "--method", "g")[1]
    assert a == b


def test_jones_trivial(capsys):
    code, out, _ = run(capsys, "jones", "--word", "1", "--color", "0")
    assert (code, out.strip()) == (0, "1")


def test_jones_hopf_json(capsys):
    _, out, _ = run(capsys, "jones", "--word", "1", "--color", "1", "--format", "json")
    assert json.loads(out)["payload"]["value"]["terms"] == [[-10, "1"], [2, "1"], [8, "1"]]


def test_torus_methods(capsys):
    outs = {run(capsys, "torus", "--m", "2", "--n", "3", "--method", meth)[1]
            for meth in ("closed", "fulltwist", "recoupling")}
    assert len(outs) == 1


def test_verify_true(capsys):
    code, out, _ = run(capsys, "verify", "--m", "1", "--order", "150", "--format", "json")
    assert code == 0
    assert json.loads(out)["payload"]["verdict"] is True


def test_verify_negative_control(capsys):
    code, out, _ = run(capsys, "verify", "--m", "2", "--order", "50", "--drop-chain", "1,0", "--format", "json")
    assert code == 1
    payload = json.loads(out)["payload"]
    assert payload["verdict"] is False and payload["mismatch"]["degree"] == 3


def test_stability(capsys):
    code, out, _ = run(capsys, "stability", "--m", "2", "--nmax", "6")
    assert code == 0 and "psi: true" in out and "g: true" in out


def test_pattern(capsys):
    assert run(capsys, "pattern", "--m", "3", "--order", "150")[0] == 0
    code, out, _ = run(capsys, "pattern", "--m", "1", "--order", "20")
    assert code == 1 and "not applicable" in out


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--link", "torus", "--m", "1", "--color", "1")
    assert code == 0 and "agrees with formula: true" in out
    code, out, _ = run(capsys, "oracle", "--link", "two-bridge", "--word", "1,-1", "--color", "1", "--format", "json")
    assert code == 0 and json.loads(out)["payload"]["agrees_with_formula"] is True


def test_oracle_dump_goes_to_stderr(capsys):
    code, out, err = run(capsys, "oracle", "--link", "unknot", "--color", "1", "--dump")
    assert code == 0 and out.strip() == "q + 1 + q^(-1)"
    assert "loops" in err


@pytest.mark.parametrize("argv", [
    ["tail", "--m", "0"],
    ["tail", "--m", "2", "--order", "-1"],
    ["tail", "--m", "2", "--order", "2001"],
    ["jones", "--word", "1,0", "--color", "1"],
    ["verify", "--m", "2", "--drop-chain", "1"],
    ["oracle", "--link", "torus", "--color", "4"],
    ["oracle", "--link", "two-bridge", "--color", "1"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == "" and err


def test_cache_command(capsys, tmp_path, monkeypatch):
    path = tmp_path / "six.json"
    monkeypatch.setenv("SL3JONES_CACHE", str(path))
    code, out, _ = run(capsys, "cache", "--nmax", "3")
    assert code == 0 and path.exists() and "written" in out
    code, out, _ = run(capsys, "cache")
    assert code == 0 and "validated" in out


def test_corrupt_cache_is_internal_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"1": "garbage"}')
    code, _, err = run(capsys, "cache", "--path", str(path))
    assert code == 3 and "internal" in err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "sl3jones.cli", "jones", "--word", "1", "--color", "0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
