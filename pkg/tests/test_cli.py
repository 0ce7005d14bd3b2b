import json
import subprocess
import sys

import pytest

from codegree import cli, verifier
from codegree.chartab.groups import alternating, symmetric


@pytest.fixture(autouse=True)
def cache_dir(tmp_path, monkeypatch):
    path = tmp_path / "cache"
    monkeypatch.setenv("CODEGREE_CACHE_DIR", str(path))
    return path


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_q_values():
    assert cli.parse_q_values("9") == [9]
    assert cli.parse_q_values("2,3,4") == [2, 3, 4]
    assert cli.parse_q_values("2..10") == [2, 3, 4, 5, 7, 8, 9]
    for bad in ("6", "1", "10..9", "14..15"):
        with pytest.raises(cli.ParamError):
            cli.parse_q_values(bad)


def test_default_cache_dir(cache_dir, monkeypatch):
    assert cli.default_cache_dir() == str(cache_dir)
    monkeypatch.delenv("CODEGREE_CACHE_DIR")
    assert cli.default_cache_dir().endswith("codegree")


def test_order_and_sylow(capsys):
    code, out, _ = run(capsys, "order", "--family", "G2", "--q", "3")
    assert code == cli.EXIT_OK and "4245696" in out
    code, out, _ = run(capsys, "sylow", "--family", "E8", "--q", "3", "--r", "2")
    assert code == 0 and "1073741824" in out and "(q^2-1)_2^8" in out


def test_zsigmondy(capsys):
    code, out, _ = run(capsys, "zsigmondy", "--q", "2", "--n", "6")
    assert code == 0 and "none (exception case)" in out
    code, out, _ = run(capsys, "zsigmondy", "--q", "2", "--n", "10")
    assert out.strip().endswith("11")


def test_verify_json_summary_and_certificates(capsys, tmp_path):
    out_dir = tmp_path / "certs"
    code, out, _ = run(capsys, "verify", "--family", "PSL", "--n", "5", "--q", "2,3", "--out", str(out_dir))
    assert code == cli.EXIT_OK and "L5(2)" in out and "L5(3)" in out
    files = sorted(p.name for p in out_dir.iterdir())
    assert files == ["PSL_5_2.cert.json", "PSL_5_3.cert.json"]
    data = json.loads((out_dir / files[0]).read_text())
    assert data["verdict"] == "PASS" and data["step4"]["verdict"] == "PASS"


def test_verify_markdown(capsys):
    code, out, _ = run(capsys, "verify", "--family", "2B2", "--q", "8", "--format", "markdown")
    assert code == 0
    assert out.startswith("## 2B2")
    for step in ("#### Step 1", "#### Step 2", "#### Step 3"):
        assert step in out
    assert "witness 40" in out


def test_verify_jobs(capsys):
    code, out, _ = run(capsys, "verify", "--family", "E6", "--q", "2..5", "--jobs", "2")
    assert code == 0 and out.count("PASS") >= 4


def test_symbolic_only(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--family", "E8", "--symbolic", "--out", str(tmp_path))
    assert code == 0 and "PASS" in out
    assert json.loads((tmp_path / "E8__symbolic.json").read_text())["verdict"] == "PASS"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--family", "PSL", "--n", "4", "--q", "2"],
        ["verify", "--family", "B3", "--q", "2"],
        ["order", "--family", "E8", "--q", "6"],
        ["order", "--family", "E8"],
        ["sylow", "--family", "E8", "--q", "3"],
        ["zsigmondy", "--q", "2"],
        ["verify", "--family", "E8"],
    ],
)
def test_parameter_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == cli.EXIT_PARAMS and err.startswith("error:")


def test_gate_failure_exits_1(capsys, monkeypatch):
    real = verifier.step4_psl_gate

    def failing(n, q):
        rec = real(n, q)
        rec.verdict = verifier.GATE_FAIL
        return rec

    monkeypatch.setattr(verifier, "step4_psl_gate", failing)
    code, out, err = run(capsys, "verify", "--family", "PSL", "--n", "5", "--q", "2")
    assert code == cli.EXIT_FAIL and "GATE-FAIL" in out
    assert "GATE-FAIL in L5(2)" in err and '"n": 5' in err


def test_cod_for_a5(capsys, tmp_path, cache_dir):
    path = tmp_path / "a5.txt"
    path.write_text(alternating(5).to_text())
    out_json = tmp_path / "a5.json"
    code, out, _ = run(capsys, "cod", str(path), "--out", str(out_json))
    assert code == 0 and "cod = {1, 12, 15, 20}" in out
    assert json.loads(out_json.read_text())["codegrees"] == [1, 12, 15, 20]
    assert list(cache_dir.glob("table-*.json"))


def test_cod_cap_refusal_exits_3(capsys, tmp_path):
    path = tmp_path / "s10.txt"
    path.write_text(symmetric(10).to_text())
    code, _, err = run(capsys, "cod", str(path))
    assert code == cli.EXIT_CAP and "refused" in err
    path = tmp_path / "s6.txt"
    path.write_text(symmetric(6).to_text())
    assert run(capsys, "cod", str(path), "--cap-order", "100")[0] == cli.EXIT_CAP


def test_cod_bad_file_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("degree 3\ngen (1,5)\n")
    assert run(capsys, "cod", str(path))[0] == cli.EXIT_PARAMS


def test_catalog(capsys, tmp_path):
    out = tmp_path / "catalog.json"
    assert run(capsys, "catalog", "--out", str(out))[0] == 0
    assert "families" in json.loads(out.read_text())


def test_console_entry_point(tmp_path, cache_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "codegree.cli", "order", "--family", "2B2", "--q", "8"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "29120" in proc.stdout
