import json
import shutil
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from latinburn.cli import main
from latinburn.fixtures import ORDER3_SQUARE
from latinburn.latin import cyclic, intercalate_power, parse, serialize

DOCS = Path(__file__).parents[1] / "docs"
REPORT_SCHEMA = json.loads((DOCS / "report_schema.json").read_text())
TRACE_SCHEMA = json.loads((DOCS / "burn_trace_schema.json").read_text())


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def c3(tmp_path):
    p = tmp_path / "c3.ls"
    p.write_text(serialize(ORDER3_SQUARE))
    return p


class TestGen:
    def test_cyclic(self, capsys, tmp_path):
        out = tmp_path / "c5.ls"
        assert run(capsys, "gen", "cyclic", 5, "-o", out)[0] == 0
        assert parse(out.read_text()) == cyclic(5)

    def test_ipow_and_cayley(self, capsys, tmp_path):
        run(capsys, "gen", "ipow", 2, "-o", tmp_path / "i2.ls")
        assert parse((tmp_path / "i2.ls").read_text()) == intercalate_power(2)
        run(capsys, "gen", "cayley", "s3", "-o", tmp_path / "s3.ls")
        assert parse((tmp_path / "s3.ls").read_text()).order == 6

    def test_product_and_random_to_stdout(self, capsys):
        code, out, _ = run(capsys, "gen", "product", "cyclic:2", "cyclic:3")
        assert code == 0 and parse(out).order == 6
        code, out, _ = run(capsys, "gen", "random", 5, 123)
        assert code == 0 and parse(out).order == 5

    def test_bad_params(self, capsys):
        assert run(capsys, "gen", "cyclic", 0)[0] == 2
        assert run(capsys, "gen", "cyclic", "x")[0] == 2
        assert run(capsys, "gen", "product", "cyclic:2")[0] == 2
        assert run(capsys, "gen", "cayley", "q8")[0] == 2
        assert run(capsys, "gen", "nope", 3)[0] == 2


class TestAnalyze:
    def test_cyclic5_text(self, capsys, tmp_path):
        p = tmp_path / "c5.ls"
        p.write_text(serialize(cyclic(5)))
        code, out, _ = run(capsys, "analyze", p)
        assert code == 0
        lines = dict(l.split(None, 1) for l in out.splitlines() if l.strip())
        assert lines["scc"] == "2" and lines["bl_HL"] == "13" and lines["bl_H3L"] == "3"
        assert lines["duality_ok"] == "true"

    def test_intercalate_oracle(self, capsys, tmp_path):
        p = tmp_path / "i2.ls"
        p.write_text(serialize(intercalate_power(2)))
        code, out, _ = run(capsys, "analyze", p, "--oracle", "--json")
        rep = json.loads(out)
        assert code == 0
        assert rep["scc"] == 3 and rep["bl_HL"] == rep["bl_HL_oracle"] == 8
        assert rep["mcs"] == rep["mcs_exhaustive"] == 8
        jsonschema.validate(rep, REPORT_SCHEMA)

    def test_json_c3(self, capsys, c3):
        code, out, _ = run(capsys, "--json", "analyze", c3)
        rep = json.loads(out)
        assert code == 0 and rep["scc"] == 2 and rep["bl_HL"] == 3
        jsonschema.validate(rep, REPORT_SCHEMA)
        assert rep["chain"]["kind"] == "connected_chain"
        assert rep["cover_sequence"]["kind"] == "cover_sequence"

    def test_order_one(self, capsys, tmp_path):
        p = tmp_path / "c1.ls"
        p.write_text("1\n0\n")
        code, out, _ = run(capsys, "analyze", p, "--oracle", "--json")
        rep = json.loads(out)
        jsonschema.validate(rep, REPORT_SCHEMA)
        assert code == 0 and rep["degenerate"] and rep["duality_ok"] is None
        assert (rep["bl_HL"], rep["bl_H3L"]) == (rep["bl_HL_oracle"], rep["bl_H3L_oracle"]) == (1, 2)

    def test_as_group(self, capsys, tmp_path):
        p = tmp_path / "s3.ls"
        run(capsys, "gen", "cayley", "s3", "-o", p)
        code, out, _ = run(capsys, "analyze", p, "--as-group", "--json")
        rep = json.loads(out)
        jsonschema.validate(rep, REPORT_SCHEMA)
        assert code == 0 and rep["generators"] == 2 and rep["scc"] == 3

    def test_as_group_rejects_loop(self, capsys, tmp_path):
        p = tmp_path / "loop.ls"
        p.write_text("3\n0 2 1\n2 1 0\n1 0 2\n")
        assert run(capsys, "analyze", p, "--as-group")[0] == 2

    def test_human_shift(self, capsys, c3):
        _, out0, _ = run(capsys, "analyze", c3)
        _, out1, _ = run(capsys, "analyze", c3, "--human")
        assert "cell r0 c0" in out0 and "cell r1 c1" in out1

    def test_oracle_guard_warning(self, capsys, tmp_path):
        p = tmp_path / "c6.ls"
        p.write_text(serialize(cyclic(6)))
        code, out, _ = run(capsys, "analyze", p, "--oracle", "--json")
        rep = json.loads(out)
        assert code == 0 and rep["bl_HL_oracle"] is None and rep["warnings"]

    def test_io_and_parse_errors(self, capsys, tmp_path):
        assert run(capsys, "analyze", tmp_path / "missing.ls")[0] == 2
        bad = tmp_path / "bad.ls"
        bad.write_text("2\n0 1\n1\n")
        code, _, err = run(capsys, "analyze", bad)
        assert code == 2 and "line 3" in err
        bad.write_text("2\n0 1\n0 1\n")
        assert run(capsys, "analyze", bad)[0] == 2


class TestBurn:
    def test_order3_trace(self, capsys, c3):
        code, out, _ = run(capsys, "burn", c3, "HL", "0,0;0,1;1,0")
        assert code == 0
        assert "round 1: (0,2,2) (2,0,2) (2,2,1)" in out
        assert out.strip().endswith("rounds 2, complete true")

    def test_empty_seed(self, capsys, c3):
        code, out, _ = run(capsys, "burn", c3, "HL", "")
        assert code == 0 and "rounds 0, complete false" in out

    def test_H3L_json(self, capsys, c3):
        code, out, _ = run(capsys, "burn", c3, "H3L", "R0;C0;S1", "--json")
        trace = json.loads(out)
        jsonschema.validate(trace, TRACE_SCHEMA)
        assert code == 0 and trace["complete"]

    @pytest.mark.parametrize("seed", ["0,0;x", "3,0", "R0;Q1", "R3", "0,0,0"])
    def test_malformed_seed(self, capsys, c3, seed):
        mode = "H3L" if seed.startswith("R") else "HL"
        assert run(capsys, "burn", c3, mode, seed)[0] == 2


class TestVerify:
    def test_cyclic(self, capsys):
        code, out, _ = run(capsys, "verify", "--cyclic", "--n-max", 16)
        assert code == 0 and "[PASS] cyclic squares 2..16: 15 checked" in out

    def test_groups_json(self, capsys):
        code, out, _ = run(capsys, "--json", "verify", "--groups")
        res = json.loads(out)
        assert code == 0 and res[0]["passed"]

    def test_several_suites(self, capsys):
        code, out, _ = run(capsys, "verify", "--examples", "--intercalate", "--roundtrip", "--n-max", 8)
        assert code == 0 and out.count("[PASS]") == 3

    def test_guard(self, capsys):
        assert run(capsys, "verify", "--exhaustive", "--max-order", 5)[0] == 2

    def test_failure_dumps_counterexample(self, capsys, tmp_path, monkeypatch):
        from latinburn import verify as suites

        def broken(**_):
            res = suites.SuiteResult("broken suite")
            res.checked = 1
            res.fail("forced", cyclic(2), note="x")
            return res

        monkeypatch.setitem(suites.SUITES, "cyclic", broken)
        code, out, _ = run(capsys, "verify", "--cyclic", "--dump-dir", tmp_path)
        assert code == 1 and "[FAIL]" in out
        assert parse((tmp_path / "broken.ls").read_text()) == cyclic(2)
        assert json.loads((tmp_path / "broken.json").read_text())["message"] == "forced"


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


@pytest.mark.skipif(shutil.which("latinburn") is None, reason="console script not installed")
def test_console_script(tmp_path):
    out = tmp_path / "c4.ls"
    subprocess.run(["latinburn", "gen", "cyclic", "4", "-o", str(out)], check=True)
    res = subprocess.run(["latinburn", "analyze", str(out), "--json"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["bl_HL"] == 7


def test_module_entry(tmp_path):
    res = subprocess.run([sys.executable, "-m", "latinburn.cli", "gen", "cyclic", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "2\n0 1\n1 0\n"
