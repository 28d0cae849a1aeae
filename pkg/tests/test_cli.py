import csv
import json
import os
import subprocess
import sys

import pytest

from hyperwalk.serialization import hypergraph_to_doc

CHAIN = "staggered_from_generalized_hyperwalk,generalized_coined_from_staggered,coined_from_generalized_coined,szegedy_from_coined"


def cli(*args, cwd=None):
    proc = subprocess.run([sys.executable, "-m", "hyperwalk.cli", *args], capture_output=True, text=True, cwd=cwd)
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture
def specs(tmp_path, example_h):
    grover = {
        "model": "hyperwalk",
        "structure": hypergraph_to_doc(example_h),
        "schedule": [{"coins": "grover", "shifts": "grover"}] * 2,
    }
    paths = {}
    for name, doc in {
        "grover": grover,
        "line": {"model": "coined-line", "positions": 5, "coin": "hadamard"},
        "idline": {"model": "coined-line", "positions": 6, "coin": "identity"},
        "stag": {
            "model": "staggered",
            "structure": {"vertices": 4, "edges": [[0, 1], [1, 2], [0, 2], [2, 3]]},
            "tessellations": [{"polygons": [[0, 1, 2], [3]]}, {"polygons": [[0], [1], [2, 3]]}],
        },
    }.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(doc))
        paths[name] = str(p)
    return paths


def rows(text):
    lines = text.splitlines()
    assert lines[0].startswith("# model=")
    return list(csv.DictReader(lines[1:]))


def test_simulate_identity_line(specs):
    code, out, _ = cli("simulate", "--spec", specs["idline"], "--state", "0,3", "--steps", "3")
    assert code == 0
    hits = [(int(r["step"]), int(r["vertex"])) for r in rows(out) if float(r["probability"]) == 1.0]
    assert hits == [(0, 3), (1, 2), (2, 1), (3, 0)]


def test_simulate_hadamard_one_step(specs):
    code, out, _ = cli("simulate", "--spec", specs["line"], "--state", "1,2", "--steps", "1")
    probs = [float(r["probability"]) for r in rows(out) if r["step"] == "1"]
    assert sorted(probs)[-2:] == pytest.approx([0.5, 0.5])
    assert sum(p > 0 for p in probs) == 2


def test_simulate_rows_sum_to_one_and_are_deterministic(specs, tmp_path):
    out = tmp_path / "a.csv"
    assert cli("simulate", "--spec", specs["grover"], "--steps", "5", "--seed", "4", "--out", str(out))[0] == 0
    text = out.read_text()
    assert "measurement=total" in text.splitlines()[0]
    totals = {}
    for r in rows(text):
        totals[r["step"]] = totals.get(r["step"], 0) + float(r["probability"])
    assert len(totals) == 6
    assert all(abs(t - 1) <= 1e-10 for t in totals.values())
    assert cli("simulate", "--spec", specs["grover"], "--steps", "5", "--seed", "4")[1] == text


def test_transform_reports_sizes(specs):
    code, out, _ = cli("transform", "--spec", specs["grover"], "--transform", "staggered_from_generalized_hyperwalk")
    assert code == 0
    assert json.loads(out)["sizes"]["target"]["vertices"] == 7


def test_transform_chain(specs, tmp_path):
    out = tmp_path / "chain.json"
    assert cli("transform", "--spec", specs["grover"], "--transform", CHAIN, "--out", str(out))[0] == 0
    docs = json.loads(out.read_text())["chain"]
    assert [d["sizes"]["target"]["vertices"] for d in docs] == [7, 21, 168, 336]


def test_chain_size(specs):
    code, out, _ = cli("chain-size", "--spec", specs["grover"], "--transform", CHAIN)
    sizes = json.loads(out)["sizes"]
    assert [s["vertices"] for s in sizes] == [4, 7, 21, 168, 336]
    assert sizes[2]["operators"] == 8


def test_single_hyperedge_verify_strong_pass(specs):
    code, out, _ = cli("verify", "--spec", specs["stag"], "--transform", "generalized_hyperwalk_from_staggered", "--strong", "--tol", "1e-12")
    assert code == 0
    assert json.loads(out)["verdict"] == "strong-pass"


def test_verify_zero_steps(specs):
    assert cli("verify", "--spec", specs["grover"], "--transform", "coined_from_hyperwalk", "--steps", "0")[0] == 0


def test_verify_corrupted_document(specs, tmp_path):
    code, out, _ = cli("transform", "--spec", specs["grover"], "--transform", "staggered_from_generalized_hyperwalk")
    doc = json.loads(out)
    doc["target"]["tessellations"][0]["unitaries"][0] = [[1, 0], [0, 1]]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = cli("verify", "--spec", specs["grover"], "--result", str(bad))
    assert code == 5
    assert json.loads(out)["verdict"] == "fail"


def test_exit_codes(specs, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert cli("info", "--spec", str(broken))[0] == 2
    assert cli("simulate", "--spec", specs["line"], "--state", "x,y")[0] == 2
    assert cli("simulate", "--spec", specs["line"], "--steps", "-1")[0] == 2
    nonclique = '{"model":"staggered","structure":{"vertices":3,"edges":[[0,1]]},"tessellations":[{"polygons":[[0,1,2]]}]}'
    assert cli("info", "--spec", nonclique)[0] == 3
    nonunitary = '{"model":"scattering-coined","structure":{"vertices":3,"edges":[[0,1],[1,2],[0,2]]},"rt":[0.5,0.5]}'
    assert cli("info", "--spec", nonunitary)[0] == 3
    assert cli("transform", "--spec", specs["line"], "--transform", "szegedy_from_coined")[0] == 4


def test_info(specs):
    code, out, _ = cli("info", "--spec", specs["grover"])
    doc = json.loads(out)
    assert doc["sizes"]["basis_size"] == 7
    assert max(doc["unitarity_deviation"]) <= 1e-10


def test_env_tolerance(specs):
    env = dict(os.environ, HYPERWALK_TOL="1e-3")
    proc = subprocess.run(
        [sys.executable, "-m", "hyperwalk.cli", "verify", "--spec", specs["grover"], "--transform", "coined_from_hyperwalk", "--steps", "1"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert json.loads(proc.stdout)["tolerance"] == 1e-3
