"""CLI subcommands: JSON I/O, exit codes, golden outputs."""

import json

import pytest

from clusterlab.cli import main
from clusterlab.presets import seed_of_cartan, sl3_double_word_seed
from clusterlab.cartan_roots import cartan_of_type
from clusterlab.seed import seed_to_json


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text(json.dumps(seed_to_json(seed_of_cartan(cartan_of_type("A", 2)))))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- mutate ---------------------------------------------------------------------


def test_mutate_pentagon_returns_to_start(a2_file, capsys):
    code, out, _ = run(capsys, "mutate", a2_file, "1,2,1,2,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["v"] == 1
    assert sorted(payload["seed"]["cluster"]) == ["x1", "x2"]
    assert len(payload["steps"]) == 5
    assert payload["steps"][0]["variable"] == "x1^-1*x2 + x1^-1"
    assert payload["steps"][0]["delta"] == [1, 0]


def test_mutate_empty_sequence_is_identity(a2_file, capsys):
    code, out, _ = run(capsys, "mutate", a2_file, "")
    assert code == 0
    payload = json.loads(out)
    assert payload["steps"] == []
    assert payload["seed"]["cluster"] == ["x1", "x2"]


def test_mutate_rejects_frozen_direction(capsys, tmp_path):
    seed = sl3_double_word_seed()
    path = tmp_path / "sl3.json"
    path.write_text(json.dumps(seed_to_json(seed)))
    code, _, err = run(capsys, "mutate", str(path), "1")
    assert code == 2
    assert "valid" in err
    assert "[3, 4, 5, 6]" in err


def test_mutate_output_feeds_back(a2_file, tmp_path, capsys):
    code, out, _ = run(capsys, "mutate", a2_file, "1")
    intermediate = tmp_path / "step.json"
    intermediate.write_text(json.dumps(json.loads(out)["seed"]))
    code, out, _ = run(capsys, "mutate", str(intermediate), "1")
    assert code == 0
    assert json.loads(out)["seed"]["cluster"] == ["x1", "x2"]


# -- graph ----------------------------------------------------------------------


def test_graph_json_a2(a2_file, capsys):
    code, out, err = run(capsys, "graph", a2_file, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"]["kind"] == "finite"
    assert len(payload["vertices"]) == 5
    assert payload["cluster_variable_count"] == 5
    assert "Finite: 5 seeds, 5 cluster variables" in err


def test_graph_dot_a2(a2_file, capsys):
    code, out, _ = run(capsys, "graph", a2_file, "--format", "dot")
    assert code == 0
    assert out.startswith("graph exchange_graph {")
    assert out.count(" -- ") == 5


def test_graph_cap_exceeded(tmp_path, capsys):
    path = tmp_path / "bc4.json"
    path.write_text(
        json.dumps({"v": 1, "vars": ["x1", "x2"], "ex": [1, 2], "B": [[0, 2], [-2, 0]]})
    )
    code, out, err = run(
        capsys, "graph", str(path), "--cap-vertices", "10000", "--cap-depth", "8"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"]["kind"] == "exceeded-cap"
    assert "ExceededCap" in err and "growth profile" in err


def test_graph_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "graph", str(path))
    assert code == 2
    assert "line 1" in err


# -- classify -------------------------------------------------------------------


def test_classify_a2(a2_file, capsys):
    code, out, _ = run(capsys, "classify", a2_file)
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "finite"
    assert payload["types"] == ["A2"]


def test_classify_bc4_infinite(tmp_path, capsys):
    path = tmp_path / "bc4.json"
    path.write_text(
        json.dumps({"v": 1, "vars": ["x1", "x2"], "ex": [1, 2], "B": [[0, 2], [-2, 0]]})
    )
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0
    assert json.loads(out)["verdict"] == "infinite"


def test_classify_g2(tmp_path, capsys):
    seed = seed_of_cartan(cartan_of_type("G", 2))
    path = tmp_path / "g2.json"
    path.write_text(json.dumps(seed_to_json(seed)))
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0
    assert json.loads(out)["types"] == ["G2"]


def test_classify_sl3_word_seed_is_d4(tmp_path, capsys):
    path = tmp_path / "sl3.json"
    path.write_text(json.dumps(seed_to_json(sl3_double_word_seed())))
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0
    assert json.loads(out)["types"] == ["D4"]


def test_classify_undetermined_at_tiny_cap(tmp_path, capsys):
    path = tmp_path / "wild.json"
    path.write_text(
        json.dumps(
            {
                "v": 1,
                "vars": ["x1", "x2", "x3"],
                "ex": [1, 2, 3],
                "B": [[0, 2, 2], [-2, 0, 2], [-2, -2, 0]],
            }
        )
    )
    code, out, _ = run(capsys, "classify", str(path), "--cap-vertices", "40")
    assert code == 3
    assert json.loads(out)["verdict"] == "undetermined (cap)"


# -- dbc ------------------------------------------------------------------------


def test_dbc_golden(capsys):
    code, out, _ = run(capsys, "dbc", "2", "1,2,1,2,1,-1,-2,-1")
    assert code == 0
    payload = json.loads(out)
    assert payload["ex"] == [3, 4, 5, 6]
    assert payload["btilde"] == [
        [-1, 0, 0, 0],
        [1, -1, 0, 0],
        [0, 1, -1, 0],
        [-1, 0, 1, -1],
        [1, -1, 0, 1],
        [0, 1, -1, 0],
        [0, -1, 0, 1],
        [0, 0, 0, -1],
    ]
    minors = {entry["k"]: entry for entry in payload["minors"]}
    assert minors[1]["rows"] == [1] and minors[1]["cols"] == [3]
    vers = {entry["k"]: entry for entry in payload["verifications"]}
    assert vers[5]["status"] == "exact" and vers[5]["quotient"] == "x22"
    assert vers[4]["status"] == "mod_det"
    assert all(entry["numeric_ok"] for entry in payload["verifications"])


def test_dbc_rank1(capsys):
    code, out, _ = run(capsys, "dbc", "1", "1,-1,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["btilde"] == [[1], [0], [1]]
    assert payload["ex"] == [2]


def test_dbc_non_reduced_word(capsys):
    code, _, err = run(capsys, "dbc", "2", "1,2,1,1,2,1")
    assert code == 2
    assert "not reduced" in err


# -- denoms ---------------------------------------------------------------------


def test_denoms_a2(a2_file, capsys):
    code, out, _ = run(capsys, "denoms", a2_file)
    assert code == 0
    payload = json.loads(out)
    assert payload["type"] == "A2"
    assert len(payload["variables"]) == 5
    deltas = sorted(tuple(v["delta"]) for v in payload["variables"])
    assert deltas == [(-1, 0), (0, -1), (0, 1), (1, 0), (1, 1)]
    assert all(item["passed"] for item in payload["report"])


def test_denoms_undetermined_for_infinite_seed(tmp_path, capsys):
    path = tmp_path / "bc4.json"
    path.write_text(
        json.dumps({"v": 1, "vars": ["x1", "x2"], "ex": [1, 2], "B": [[0, 2], [-2, 0]]})
    )
    code, out, _ = run(capsys, "denoms", str(path), "--cap-depth", "6")
    assert code == 3
    assert json.loads(out)["verdict"] == "undetermined (cap)"


# -- misc -----------------------------------------------------------------------


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "mutate", "/nonexistent/seed.json", "1")
    assert code == 2
    assert "error:" in err
