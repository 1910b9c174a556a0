import json
import os
import subprocess

import jsonschema
import pytest

import gentle_quivers as g

CLI = os.environ.get("GENTLE_CLI")
SCHEMA = os.environ.get("GENTLE_SCHEMA")


def test_fixtures_load():
    names = g.fixture_names()
    assert "ex3_2_I1" in names
    q = g.fixture("ex3_2_I1")
    assert len(q.vertices) == 14
    assert g.is_gentle(q)
    assert g.invariant_pair(q, 3) == (2, 14)


def test_round_trip_and_construction():
    q = g.BoundQuiver(["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z")], [("a", "b")], "chain")
    again = g.parse_quiver(q.serialize())
    assert again.digest() == q.digest()
    assert again.relations == [("a", "b")]
    with pytest.raises(ValueError):
        g.parse_quiver("vertex x\narrow a x -> y\n")


def test_phi_and_normal_forms():
    assert g.phi(g.normal_form(1, 1, 3)) == {(0, 3): 1, (3, 0): 1}
    assert g.phi(g.fixture("ex7_8_A")) == {(0, 3): 1, (6, 3): 1}


def test_hochschild_dimensions():
    q = g.normal_form(1, 1, 3)
    assert g.hh_dims(q, 13) == [1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1]
    assert g.hh_dims(q, 13, 2) == [1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1]


def test_cartan():
    c = g.cartan(g.fixture("ex7_8_Aprime"))
    assert c["determinant"] == 2


def test_mutation_and_reduction():
    q = g.fixture("ex3_2_I2")
    result = g.reduce(q, 3)
    assert result["complete"]
    assert g.is_A_branched(result["quiver"], 3)
    assert g.replay(result["log"]) == ""
    a3 = g.BoundQuiver(["1", "2", "3"], [("b", "3", "2"), ("a", "2", "1")])
    assert "2" in g.admissible_vertices(a3)
    mutated, step = g.mutate(a3, "2")
    assert step["kind"] == "tilt"
    assert g.phi(mutated) == g.phi(a3)


def test_equivalence():
    r = g.equivalent(g.fixture("ex3_2_I1"), g.fixture("ex3_2_I2"), 3)
    assert r["verdict"] == "equivalent"
    with pytest.raises(ValueError, match="disconnected"):
        g.equivalent(g.fixture("ex6_4_left"), g.fixture("ex6_4_right"), 2)


COMMANDS = [
    ["validate", "ex6_6"],
    ["classify", "ex6_6"],
    ["classify", "fixture:ex6_4_left"],
    ["phi", "ex7_8_A"],
    ["hh", "ex7_8_A", "--max-degree", "6", "--char", "2"],
    ["cartan", "ex7_8_A", "--snf"],
    ["mutate", "ex7_8_A", "--vertex", "t1", "--co"],
    ["mutate", "ex7_8_A", "--vertex", "p"],
    ["reduce", "ex3_2_I2", "--m", "3"],
    ["equivalent", "ex3_2_I1", "ex3_2_I2", "--m", "3"],
    ["equivalent", "ex7_8_A", "ex6_6", "--m", "1"],
    ["normal-form", "--m", "2", "--r", "1", "--s", "6"],
    ["fixture"],
    ["fixture", "ex7_8_A"],
]


@pytest.mark.skipif(not CLI or not SCHEMA, reason="CLI or schema path not provided")
@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: " ".join(a))
def test_cli_json_matches_schema(args):
    schema = json.load(open(SCHEMA))
    proc = subprocess.run([CLI, *args, "--json"], capture_output=True, text=True)
    assert proc.returncode in (0, 1), proc.stderr
    report = json.loads(proc.stdout)
    jsonschema.validate(report, schema, cls=jsonschema.Draft202012Validator)
    assert report["command"] == args[0]


@pytest.mark.skipif(not CLI or not SCHEMA, reason="CLI or schema path not provided")
def test_cli_reduce_log_replays(tmp_path):
    log = tmp_path / "log.json"
    subprocess.run([CLI, "reduce", "ex3_2_I2", "--m", "3", "--log", str(log)], check=True,
                   capture_output=True)
    proc = subprocess.run([CLI, "replay", str(log), "--json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["ok"]
    assert g.replay(json.load(open(log))) == ""
