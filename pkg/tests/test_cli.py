import csv
import io
import json
import subprocess
import sys

import pytest

from modpjl.cli import EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classes(capsys):
    code, out, _ = run(capsys, "classes", "--p", "3", "--f", "1")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["q"] == 3
    assert data["classes"] == [
        {"kind": "central", "x": 0},
        {"kind": "central", "x": 1},
        {"kind": "split", "x": 0, "y": 1},
        {"kind": "elliptic", "z": 1},
        {"kind": "elliptic", "z": 2},
        {"kind": "elliptic", "z": 5},
    ]


def test_classes_csv(capsys):
    code, out, _ = run(capsys, "classes", "--p", "2", "--f", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == EXIT_OK and rows[0] == ["kind", "x", "y", "z"] and len(rows) == 1 + 12


def test_jl_char_exp(capsys):
    code, out, _ = run(capsys, "jl", "--p", "3", "--f", "1", "--char-exp", "1")
    assert code == EXIT_OK
    assert json.loads(out)["coeffs"] == [{"label": {"r": [1], "m": 1}, "value": 1}]
    code, out, _ = run(capsys, "jl", "--p", "3", "--char-exp", "0")
    assert json.loads(out)["coeffs"] == [
        {"label": {"r": [0], "m": 0}, "value": -1},
        {"label": {"r": [2], "m": 0}, "value": 1},
    ]


def test_jl_as_classfn(capsys):
    code, out, _ = run(capsys, "jl", "--p", "3", "--char-exp", "0", "--as", "classfn", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert code == EXIT_OK
    assert [r[1] for r in rows] == ["(2;0;0;0)", "(2;0;0;0)", "(0;0;0;0)", "(-2;0;0;0)", "(-2;0;0;0)", "(-2;0;0;0)"]


def test_jl_from_file_and_jl_star(capsys, tmp_path):
    src = tmp_path / "v.json"
    src.write_text(json.dumps({"group": "LX", "q": 3, "basis": "l-characters", "coeffs": [{"label": {"exp": 0}, "value": 2}]}))
    code, out, _ = run(capsys, "jl", "--p", "3", "--in", str(src))
    assert code == EXIT_OK
    assert [e["value"] for e in json.loads(out)["coeffs"]] == [-2, 2]
    code, out, _ = run(capsys, "jl-star", "--p", "3", "--label", "1:1")
    assert code == EXIT_OK
    assert json.loads(out)["coeffs"] == [{"label": {"exp": 1}, "value": 1}, {"label": {"exp": 3}, "value": 1}]


def test_dl_and_decompose_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "dl", "--p", "3", "--char-exp", "1")
    assert code == EXIT_OK
    path = tmp_path / "dl.json"
    path.write_text(out)
    code, out, _ = run(capsys, "decompose", "--p", "3", "--in", str(path))
    assert code == EXIT_OK
    # R_{T,theta} = -Theta(theta), and Theta(psi) reduces to (r=1, m=1)
    assert json.loads(out)["coeffs"] == [{"label": {"r": [1], "m": 1}, "value": -1}]


def test_tables(capsys):
    code, out, _ = run(capsys, "brauer-table", "--p", "3")
    assert code == EXIT_OK and len(json.loads(out)["characters"]) == 6
    code, out, _ = run(capsys, "ordinary-table", "--p", "3", "--format", "csv")
    assert code == EXIT_OK and len(out.strip().splitlines()) == 1 + 8


@pytest.mark.parametrize("suite", ["thm42", "adjoint", "sign", "jl-agreement", "dimension", "orthogonality"])
def test_verify_passes_q3(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--p", "3", "--f", "1")
    assert code == EXIT_OK
    assert json.loads(out)["passed"] is True


def test_verify_span_q5_and_q3(capsys):
    assert run(capsys, "verify", "--suite", "span", "--p", "5")[0] == EXIT_OK
    code, out, _ = run(capsys, "verify", "--suite", "span", "--p", "3")
    assert code == EXIT_VERIFY
    assert json.loads(out)["suites"][0]["details"][0] == "rank 5 of 6"


def test_verify_single_type(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm42", "--p", "5", "--type", "cuspidal", "--char-exp", "1")
    assert code == EXIT_OK and json.loads(out)["suites"][0]["checked"] == 2 * 15
    assert run(capsys, "verify", "--suite", "thm42", "--p", "5", "--type", "ps", "--char-exp", "0", "1")[0] == EXIT_INPUT


def test_transport_and_serre_weights(capsys, tmp_path):
    mu = tmp_path / "mu.json"
    mu.write_text(json.dumps({"group": "GL2", "q": 3, "entries": [{"label": {"r": [0], "m": 0}, "value": 1}]}))
    out_path = tmp_path / "iotaD.json"
    code, _, _ = run(capsys, "transport-iota", "--p", "3", "--in", str(mu), "--out", str(out_path))
    assert code == EXIT_OK
    iota_d = json.loads(out_path.read_text())
    assert iota_d["group"] == "LX"
    assert iota_d["entries"] == [
        {"label": {"exp": 0}, "value": -1},
        {"label": {"exp": 2}, "value": 1},
        {"label": {"exp": 6}, "value": 1},
    ]
    code, out, _ = run(capsys, "serre-weights", "--p", "3", "--in", str(out_path))
    assert code == EXIT_OK
    assert json.loads(out)["weights"] == [{"exp": 2}, {"exp": 6}]


@pytest.mark.parametrize(
    "argv",
    [
        ["classes", "--p", "4"],
        ["classes", "--p", "2", "--f", "6"],
        ["jl", "--p", "3"],
        ["jl", "--p", "3", "--char-exp", "1", "--in", "x.json"],
        ["jl-star", "--p", "3", "--label", "3:0"],
        ["jl-star", "--p", "3", "--label", "nonsense"],
        ["decompose", "--p", "3", "--in", "/nonexistent.json"],
        ["verify", "--p", "3", "--suite", "span", "--type", "scalar", "--char-exp", "0"],
        ["verify", "--p", "3", "--suite", "bogus"],
        ["classes"],
    ],
)
def test_input_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == EXIT_INPUT


def test_schema_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"group": "GL2", "q": 3, "values": [{"class": {"kind": "central", "x": 0}, "value": [1, 0, 0, 0]}]}))
    assert run(capsys, "decompose", "--p", "3", "--in", str(bad))[0] == EXIT_INPUT
    bad.write_text(json.dumps({"group": "GL2", "q": 5, "entries": []}))
    assert run(capsys, "transport-iota", "--p", "3", "--in", str(bad))[0] == EXIT_INPUT
    bad.write_text("{not json")
    assert run(capsys, "serre-weights", "--p", "3", "--in", str(bad))[0] == EXIT_INPUT


def test_module_entry_point_deterministic():
    argv = [sys.executable, "-m", "modpjl", "verify", "--suite", "roundtrip", "--p", "3", "--seed", "11"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["passed"] is True
