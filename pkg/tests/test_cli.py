import io
import json
import subprocess
import sys

import pytest

from toroidal_fullerene.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_verify_embeddings():
    code, text = run("verify-embeddings")
    assert code == 0
    assert text.count("PASS") == 4


def test_verify_embeddings_json():
    code, text = run("verify-embeddings", "--json")
    doc = json.loads(text)
    assert code == 0 and doc["command"] == "verify-embeddings" and doc["lattice"] is None
    sigma1 = doc["result"][0]
    assert sigma1["witnesses"]["bc"]["translation"] == [2, 1]


def test_graph():
    code, text = run("graph", "--pq", "5,10")
    assert code == 0
    assert "V: 200" in text and "E: 300" in text and "F: 100" in text and "valid: True" in text


def test_graph_json_keys():
    code, text = run("graph", "--basis", "1,0,-1,2", "--json")
    doc = json.loads(text)
    assert set(doc) == {"command", "lattice", "result"}
    assert doc["lattice"]["hnf"] == [[1, 0], [0, 2]]
    assert doc["result"]["simple"] is False


def test_spectrum_with_oracle():
    code, text = run("spectrum", "--basis", "1,0,-1,2", "--oracle")
    assert code == 0
    lines = text.splitlines()
    assert lines[:4] == ["3.000000", "1.000000", "-1.000000", "-3.000000"]
    assert float(lines[-1].split(":")[1]) < 1e-8


def test_spectrum_oracle_mismatch_exit_code():
    code, _ = run("spectrum", "--pq", "2,1", "--oracle", "--tol", "-1")
    assert code == 4


def test_gap_pq():
    code, text = run("gap", "--pq", "5,10")
    assert code == 0
    values = dict(line.split(": ") for line in text.splitlines())
    assert values["gap"] == "0.763932"
    assert values["asymptote"] == "0.725520"


def test_gap_json_full_precision():
    _, text = run("gap", "--pq", "5,10", "--json")
    result = json.loads(text)["result"]
    assert abs(result["gap"] - 0.7639320225002102) < 1e-15


def test_scan_csv():
    code, text = run("scan", "--p-max", "3", "--q", "1", "--csv")
    assert code == 0
    rows = [line.split(",") for line in text.splitlines()]
    assert rows[0] == ["p", "q", "vertices", "gap", "asymptote", "deviation"]
    assert rows[3][0] == "3" and rows[3][3] == "0.000000"


def test_scan_multiple_q_json():
    _, text = run("scan", "--p-max", "2", "--q", "1,4", "--json")
    rows = json.loads(text)["result"]
    assert [(r["p"], r["q"]) for r in rows] == [(1, 1), (1, 4), (2, 1), (2, 4)]


def test_embed_xyz_and_obj(tmp_path):
    xyz = tmp_path / "t.xyz"
    code, text = run("embed", "--pq", "5,10", "--out", str(xyz), "--bond-scale", "1")
    assert code == 0 and "edge ratio" in text
    assert xyz.read_text().splitlines()[0] == "200"
    obj = tmp_path / "t.obj"
    code, _ = run("embed", "--pq", "5,10", "--format", "obj", "--out", str(obj))
    assert code == 0 and obj.read_text().count("\nf ") == 100


def test_embed_invalid_graph(tmp_path):
    code, _ = run("embed", "--pq", "1,1", "--out", str(tmp_path / "x.xyz"))
    assert code == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["gap"],
        ["gap", "--pq", "5"],
        ["gap", "--pq", "5,10", "--basis", "1,0,0,1"],
        ["graph", "--basis", "1,2,2,4"],
        ["embed", "--basis", "5,0,-10,20", "--out", "x.xyz"],
        ["embed", "--pq", "5,10"],
        ["scan", "--p-max", "0"],
    ],
)
def test_usage_errors(argv):
    code, _ = run(*argv)
    assert code == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_deterministic_output():
    assert run("spectrum", "--pq", "4,3", "--json") == run("spectrum", "--pq", "4,3", "--json")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "toroidal_fullerene", "gap", "--pq", "3,2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "gap: 0.000000"
