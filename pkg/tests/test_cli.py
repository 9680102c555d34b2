import json
import subprocess
import sys

import pytest

import projorbit.oracle
from projorbit.cli import EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main
from projorbit.reduction import sp1_slH_torsion
from projorbit.satake import serialize, to_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _text_fields(out):
    fields = {}
    for line in out.splitlines():
        key, sep, val = line.partition(": ")
        if sep and not line.startswith(" "):
            try:
                fields[key] = json.loads(val)
            except ValueError:
                pass
    return fields


def test_reduce_split_a2(capsys):
    code, out, _ = run(capsys, "reduce", "A2 black=[] arrows=[] w=[1,1]")
    assert code == EXIT_OK
    f = _text_fields(out)
    assert f["k_summary"] == [] and f["w_dim_real"] == 1
    assert f["verdict"] == "unique"
    assert out.splitlines()[0] == "A2: x1 x1"


def test_reduce_coefficient_count_error(capsys):
    code, out, err = run(capsys, "reduce", "A2 w=[1]")
    assert code == EXIT_INPUT and not out
    assert "coefficient count" in err


@pytest.mark.parametrize("argv", [
    ["reduce", "A2 w=[1,1", ],
    ["reduce", "A2 w=[0,0]"],
    ["reduce"],
    ["reduce", "A2 w=[1,1]", "--form", "sl(3,R)", "--w", "1,1"],
    ["reduce", "--form", "sl(3,R)"],
    ["reduce", "--form", "nope(2)", "--w", "1"],
    ["reduce", "--file", "/nonexistent/diagram.txt"],
    ["grading", "A2 w=[1,1]", "--crossed", "3"],
    ["verify", "--case", "nope"],
    ["family", "nope"],
    ["family", "sp1-slH-torsion", "--range", "5..2"],
    ["family", "sp1-slH-torsion", "--range", "1..3"],
    ["bogus"],
])
def test_input_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INPUT
    assert err


def test_complex_type_flag(capsys):
    text = "A2 arrows=[(1,2)] w=[1,0]"
    code, _, err = run(capsys, "reduce", text)
    assert code == EXIT_INPUT and "(1,2)" in err
    code, out, _ = run(capsys, "reduce", text, "--allow-complex-type")
    assert code == EXIT_OK


def test_json_and_text_agree(capsys):
    text = serialize(sp1_slH_torsion(3))
    _, out, _ = run(capsys, "reduce", text)
    _, js, _ = run(capsys, "reduce", text, "--json")
    report = json.loads(js)
    fields = _text_fields(out)
    assert fields
    for k, v in fields.items():
        assert report[k] == v, k
    _, out, _ = run(capsys, "grading", text)
    _, js, _ = run(capsys, "grading", text, "--json")
    report = json.loads(js)
    fields = _text_fields(out)
    for k, v in fields.items():
        assert report[k] == v, k
    assert report["top_dim"] == 8 and report["top_level_check"]


def test_grading_explicit_crossing(capsys):
    code, out, _ = run(capsys, "grading", "A1 w=[2]", "--crossed", "1", "--json")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["levels"] == [["1", 1], ["0", 1], ["-1", 1]]


def test_file_and_form_inputs(capsys, tmp_path):
    dd = sp1_slH_torsion(2)
    p = tmp_path / "d.txt"
    p.write_text(serialize(dd) + "\n")
    q = tmp_path / "d.json"
    q.write_text(json.dumps(to_json(dd)))
    outs = [run(capsys, "reduce", "--file", str(p), "--json")[1], run(capsys, "reduce", "--file", str(q), "--json")[1],
            run(capsys, "reduce", serialize(dd), "--json")[1]]
    assert outs[0] == outs[1] == outs[2]
    code, out, _ = run(capsys, "reduce", "--form", "sl(3,R)", "--w", "1,1", "--json")
    assert code == EXIT_OK and json.loads(out)["w_dim_real"] == 1


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    rep = json.loads(out)
    assert code == EXIT_OK and "sl(3,R)" in rep["forms"] and "so(1,2)" in rep["oracle_forms"]


def test_family(capsys):
    code, out, _ = run(capsys, "family", "sp1-slH-torsion", "--range", "2..6", "--json")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["stable"] and len(rep["rows"]) == 5


def test_verify_single_case(capsys):
    code, out, _ = run(capsys, "verify", "--case", "so12-wedge2")
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("[PASS] so12-wedge2")
    assert "no sampled orbit smaller" in out


def test_verify_byte_identical(capsys):
    a = run(capsys, "verify", "--case", "sl2-sym3", "--seed", "11", "--json")[1]
    b = run(capsys, "verify", "--case", "sl2-sym3", "--seed", "11", "--json")[1]
    assert a == b and json.loads(a)["seed"] == 11
    c = run(capsys, "verify", "--case", "sl2-sym3", "--seed", "11")[1]
    d = run(capsys, "verify", "--case", "sl2-sym3", "--seed", "11")[1]
    assert c == d


def test_verify_failure_exit_2(capsys, monkeypatch):
    def failing(seed, names=None):
        return [{"case": "x", "description": "forced", "crossed": [], "k_summary": [], "w_dim_real": 0,
                 "verdict": "unknown", "checks": [{"name": "c", "value": 1.0, "pass": False}], "seed": seed,
                 "pass": False}]
    monkeypatch.setattr(projorbit.oracle, "verify_all", failing)
    code, out, _ = run(capsys, "verify")
    assert code == EXIT_VERIFY and "[FAIL] x" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "projorbit", "reduce", "A1 w=[3]"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verdict" in proc.stdout
