import json
import subprocess
import sys

import pytest

from monotri.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_count(capsys):
    code, out = run(capsys, "count", "--bottom", "1,2,3")
    assert code == 0 and json.loads(out) == {"count": "7"}
    code, out = run(capsys, "count", "--bottom", "1,2,3", "--top", "2")
    assert json.loads(out) == {"count": "3"}


def test_count_listing(capsys):
    code, out = run(capsys, "count", "--bottom", "1,2,3", "--list")
    lines = out.splitlines()
    assert len(lines) == 7 and "1,2,3|1,3|2" in lines


def test_count_s_triangles(tmp_path, capsys):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({"S": [{"i": 0, "j": 0, "f": "-1"}]}))
    code, out = run(capsys, "count", "--file", str(f), "--bottom", "2,1")
    assert json.loads(out) == {"count": "0"}
    code, out = run(capsys, "count", "--file", str(f), "--bottom", "1,2,3,4", "--list")
    assert any("*(0,0)" in line for line in out.splitlines())


def test_genfun(capsys):
    code, out = run(capsys, "genfun", "--weight", "Q", "--bottom", "1,2,3")
    assert json.loads(out) == {"vars": ["P", "Q"], "terms": [
        {"exp": [0, 0], "coeff": "6/1"}, {"exp": [0, 1], "coeff": "1/1"}]}
    code, out = run(capsys, "genfun", "--weight", "P", "--bottom", "1,3")
    assert [t["exp"] for t in json.loads(out)["terms"]] == [[0, 0], [1, 0], [2, 0]]


def test_alpha(tmp_path, capsys):
    f = tmp_path / "a.json"
    f.write_text(json.dumps({"n": 2, "m": [0], "spec": {"S": [{"i": 0, "j": 0, "f": "-1"}]}}))
    code, out = run(capsys, "alpha", "--file", str(f), "--bottom", "1,2", "--at", "P=1,Q=1")
    assert code == 0 and json.loads(out) == {"value": "2"}
    code, out = run(capsys, "alpha", "--file", str(f), "--bottom", "1,3", "--at", "Q=1", "--method", "recursive")
    assert len(json.loads(out)["value"]["terms"]) == 3
    code, out = run(capsys, "alpha", "--file", str(f))
    assert json.loads(out)["xvars"] == ["X1", "X2"]


def test_asm(capsys):
    code, out = run(capsys, "asm", "--size", "3")
    assert json.loads(out) == {"by_minus_ones": {"0": 6, "1": 1}, "total": 7}
    code, out = run(capsys, "asm", "--size", "5", "--symmetric")
    assert json.loads(out)["total"] == 3
    code, out = run(capsys, "asm", "--size", "3", "--top", "2", "--list")
    assert out.count("\n\n") == 2 and "1 -1 1\n" in out


@pytest.mark.parametrize("argv", [
    ["count", "--bottom", "2,1"],
    ["count", "--bottom", "1,x"],
    ["count"],
    ["genfun", "--bottom", "3,1", "--weight", "P"],
    ["asm", "--size", "4", "--symmetric"],
    ["verify", "nope"],
    ["bogus"],
    ["count", "--bottom", "1,2", "--unknown"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_malformed_files_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SystemExit) as exc:
        main(["alpha", "--file", str(bad), "--bottom", "1"])
    assert exc.value.code == 2
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"S": [{"i": 0}]}))
    with pytest.raises(SystemExit) as exc:
        main(["count", "--file", str(spec), "--bottom", "1,2"])
    assert exc.value.code == 2
    a = tmp_path / "a.json"
    a.write_text(json.dumps({"n": 2, "m": [0]}))
    with pytest.raises(SystemExit) as exc:
        main(["alpha", "--file", str(a), "--bottom", "1,2,3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["alpha", "--file", str(a), "--bottom", "1,2", "--at", "R=2"])
    assert exc.value.code == 2


def test_verify_report_only_exits_zero(capsys):
    code, out = run(capsys, "verify", "conjecture")
    assert code == 0 and "report-only" in out
    code, out = run(capsys, "verify", "--suite", "ring", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["summary"]["fail"] == 0


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "monotri", "genfun", "--weight", "Q", "--bottom", "1,2,3,4"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
