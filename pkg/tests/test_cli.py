import io
import json
import os
from contextlib import redirect_stderr, redirect_stdout

import pytest

from exoticcone.cli import run
from exoticcone.config import ENV_VAR, Config, load_config
from exoticcone.errors import DomainError

DATA = os.path.join(os.path.dirname(__file__), "data")
PAIR = os.path.join(DATA, "pair_n6.json")
PAIR_FORM = os.path.join(DATA, "pair_n6_with_form.json")


def invoke(*args):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(list(args))
    return code, out.getvalue(), err.getvalue()


def invoke_json(*args):
    code, out, err = invoke(*args)
    assert code == 0, err
    return json.loads(out)


def test_mult_both_routes():
    doc = invoke_json(
        "mult", "--n", "2", "--mu", "[1,0]", "--lambda", "[0,0]",
        "--route", "both",
    )
    assert doc == {"a": 2, "b": 2, "agree": True}
    assert invoke_json("mult", "--mu", "[1,0]", "--lambda", "[0,0]") == {
        "a": 2
    }
    assert invoke_json(
        "mult", "--mu", "[1,0]", "--lambda", "[0,0]", "--route", "b"
    ) == {"b": 2}


def test_kostant_kinds():
    assert invoke_json("kostant", "--kind", "p", "--mu", "[2,0]") == {
        "value": 3
    }
    assert invoke_json("kostant", "--kind", "p'", "--mu", "[1,0]") == {
        "value": 2
    }


def test_bwb_outputs():
    assert invoke_json("bwb", "--lambda", "[-1,-3]") == {
        "zero": False,
        "sign": 1,
        "mu": [0, 0],
    }
    assert invoke_json("bwb", "--lambda", "[-2,1]") == {"zero": True}


def test_weights_table():
    doc = invoke_json("weights", "--mu", "[1,1]")
    assert doc["dim"] == 5
    assert doc["highest"] == [1, 1]
    assert [[0, 0], 1] in doc["entries"]
    assert len(doc["entries"]) == 5


def test_poset_json_and_dot():
    doc = invoke_json("poset", "--n", "2")
    assert len(doc["nodes"]) == 5
    assert len(doc["edges"]) == 5
    code, out, _ = invoke("poset", "--n", "1", "--dot")
    assert code == 0
    assert out.count("->") == 1
    assert out.strip().startswith("digraph")


def test_bipartition_commands():
    assert invoke_json("phic", "--mu", "[1,1,1]", "--nu", "[3]") == {
        "lambda": [4, 4, 2, 1, 1]
    }
    assert invoke_json("collapse", "--mu", "[1,1,1]", "--nu", "[3]") == {
        "mu": [2, 1, 1],
        "nu": [2],
    }
    doc = invoke_json("filtration-dims", "--mu", "[1,1,1]", "--nu", "[3]")
    assert doc["dims"]["3"] == 2
    assert doc["dims"]["1"] == 5
    assert doc["dims"]["0"] == 7
    assert doc["dims"]["-2"] == 10


def test_orbit_identify_and_adapted():
    doc = invoke_json("orbit-identify", "--file", PAIR)
    assert doc == {"mu": [1, 1, 1], "nu": [3]}
    doc = invoke_json("adapted", "--file", PAIR_FORM)
    assert doc["verified"] is True
    assert doc["omega_solved"] is False
    assert doc["mu"] == [1, 1, 1]
    assert set(doc["subspaces"]) == {str(a) for a in range(-3, 5)}
    doc2 = invoke_json("adapted", "--file", PAIR)
    assert doc2["omega_solved"] is True
    assert doc2["verified"] is True
    assert "omega" in doc2


def test_representative_round_trip(tmp_path):
    doc = invoke_json("representative", "--mu", "[1]", "--nu", "[1]")
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(doc))
    out = invoke_json("orbit-identify", "--file", str(path))
    assert out == {"mu": [1], "nu": [1]}


def test_sweep_ok():
    doc = invoke_json("sweep", "--n", "2", "--bound", "2")
    assert doc["ok"] is True
    assert doc["violations"] == []
    assert doc["cells"] == 16


def test_malformed_json_is_positioned():
    code, _, err = invoke("mult", "--mu", "[1,", "--lambda", "[0,0]")
    assert code == 1
    assert "line" in err and "column" in err


def test_rank_cap_names_knob():
    code, _, err = invoke("poset", "--n", "99")
    assert code == 1
    assert "rank_cap" in err
    code, _, err = invoke("sweep", "--n", "2", "--bound", "99")
    assert code == 1
    assert "degree_cap" in err


def test_rank_cap_flag_override():
    code, _, err = invoke("poset", "--n", "9")
    assert code == 1
    code, out, _ = invoke("--rank-cap", "9", "poset", "--n", "9")
    assert code == 0


def test_adapted_depth_cap_names_knob(tmp_path):
    doc = invoke_json("representative", "--mu", "[2,2]", "--nu", "[]")
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(doc))
    code, _, err = invoke(
        "--closure-depth", "1", "adapted", "--file", str(path)
    )
    assert code == 1
    assert "closure_depth" in err
    code, out, _ = invoke("adapted", "--file", str(path))
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_n_flag_must_match_lengths():
    code, _, err = invoke("mult", "--n", "3", "--mu", "[1,0]",
                          "--lambda", "[0,0]")
    assert code == 1
    assert "--n" in err


def test_mismatched_bipartition_rejected():
    code, _, err = invoke("phic", "--mu", "[1,2]", "--nu", "[]")
    assert code == 1
    assert "partition" in err


def test_missing_pair_file():
    code, _, err = invoke("orbit-identify", "--file", "/nonexistent.json")
    assert code == 1


def test_config_file_and_env(tmp_path, monkeypatch):
    cfg = tmp_path / "knobs.cfg"
    cfg.write_text("rank_cap = 9\n# comment\nthreads = 2\n")
    monkeypatch.setenv(ENV_VAR, str(cfg))
    code, _, _ = invoke("poset", "--n", "9")
    assert code == 0
    # flags beat the file
    code, _, err = invoke("--rank-cap", "3", "poset", "--n", "9")
    assert code == 1 and "rank_cap" in err
    monkeypatch.delenv(ENV_VAR)
    code, _, _ = invoke("poset", "--n", "9")
    assert code == 1


def test_config_validation(tmp_path):
    with pytest.raises(DomainError):
        Config(rank_cap=0)
    bad = tmp_path / "bad.cfg"
    bad.write_text("nonsense = 3\n")
    with pytest.raises(DomainError):
        load_config(str(bad))
    bad.write_text("rank_cap: 3\n")
    with pytest.raises(DomainError):
        load_config(str(bad))
    assert load_config(None, {"rank_cap": 5}).rank_cap == 5
    assert Config().cache_entries >= 1024


def test_outputs_deterministic():
    first = invoke("weights", "--mu", "[2,1]")
    second = invoke("weights", "--mu", "[2,1]")
    assert first == second
