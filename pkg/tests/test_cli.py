import io
import json
from contextlib import redirect_stderr, redirect_stdout
from importlib import resources

import jsonschema
import pytest

import mixbound as mb
from mixbound.cli import analyze_report, main
from mixbound.config import ExperimentConfig
from mixbound.errors import InputError


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def load_schema():
    ref = resources.files("mixbound") / "schemas" / "analyze.schema.json"
    return json.loads(ref.read_text())


# ---------------------------------------------------------------------------
# graph / chain subcommands
# ---------------------------------------------------------------------------

def test_graph_gen():
    code, out, _ = run_cli("graph", "gen", "--graph", "cycle:4")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 4
    assert sorted(map(tuple, doc["edges"])) == [(1, 2), (1, 4), (2, 3), (3, 4)]


def test_graph_gen_seeded_deterministic():
    runs = [run_cli("graph", "gen", "--graph", "random-regular:8,3", "--seed", "5")
            for _ in range(2)]
    assert runs[0] == runs[1]
    assert runs[0][0] == 0


def test_graph_gen_requires_seed_for_random():
    code, _, err = run_cli("graph", "gen", "--graph", "random-regular:8,3")
    assert code == 1
    assert "seed" in err


def test_chain_build_roundtrip(tmp_path):
    out_file = tmp_path / "chain.json"
    code, _, _ = run_cli("chain", "build", "--graph", "path:3",
                         "--chain", "max-degree", "--out", str(out_file))
    assert code == 0
    doc = json.loads(out_file.read_text())
    assert doc["rows"][0][0] == pytest.approx(0.75)
    # a chain file is accepted wherever a chain kind is
    code, out, _ = run_cli("chain", "analyze", "--graph", "path:3",
                           "--chain", str(out_file))
    assert code == 0
    assert json.loads(out)["sigma"] == pytest.approx(1.0)


def test_analyze_k2_values_and_schema():
    code, out, _ = run_cli("chain", "analyze", "--graph", "complete:2")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    assert doc["sigma"] == 1.0
    assert doc["lambda2"] == pytest.approx(0.0, abs=1e-12)
    assert doc["t_mix"] == 1
    assert doc["flags"] == {"lazy": True, "irreducible": True, "reversible": True}
    assert doc["omitted"] == {}


def test_analyze_omits_bruteforce_above_cap():
    code, out, _ = run_cli("chain", "analyze", "--graph", "barbell:30")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    assert "phi_star" not in doc
    assert "cap" in doc["omitted"]["phi_star"]
    assert "cap" in doc["omitted"]["beta"]


def test_analyze_reports_limited_for_nonreversible(tmp_path):
    chain_doc = {"n": 3, "rows": [[0.5, 0.5, 0.0], [0.0, 0.5, 0.5], [0.5, 0.0, 0.5]]}
    path = tmp_path / "biased.json"
    path.write_text(json.dumps(chain_doc))
    code, out, _ = run_cli("chain", "analyze", "--graph", "cycle:3",
                           "--chain", str(path))
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    assert doc["flags"]["reversible"] is False
    assert "lambda2" in doc["omitted"]
    assert "t_mix" in doc  # still computable


def test_analyze_report_reducible():
    import numpy as np
    g = mb.path_graph(3)
    P = mb.make_chain(g, np.eye(3))
    doc = analyze_report(P)
    jsonschema.validate(doc, load_schema())
    assert doc["omitted"]["sigma"] == "chain is reducible"


# ---------------------------------------------------------------------------
# instance sample
# ---------------------------------------------------------------------------

def test_instance_sample_hides_values_by_default():
    code, out, _ = run_cli("instance", "sample", "--graph", "complete:16",
                           "--chain", "lazy-simple", "--seed", "3")
    assert code == 0
    doc = json.loads(out)
    assert "f_values" not in doc
    assert doc["b"] in (0, 1)
    assert doc["walk"][0] == 1
    assert len(doc["walk"]) == doc["L"] + 1


def test_instance_sample_reveal_flag():
    code, out, _ = run_cli("instance", "sample", "--graph", "complete:3",
                           "--chain", "lazy-simple", "--seed", "1",
                           "--T", "1", "--L", "2", "--reveal")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["f_values"]) == 3


def test_instance_sample_requires_seed():
    code, _, err = run_cli("instance", "sample", "--graph", "complete:3")
    assert code == 1
    assert "input error" in err


def test_instance_sample_capability_exit():
    code, _, err = run_cli("instance", "sample", "--graph", "path:2",
                           "--chain", "lazy-simple", "--seed", "1",
                           "--T", "1", "--L", "2")
    assert code == 2
    assert "capability error" in err


def test_instance_sample_bad_graph_exit():
    code, _, err = run_cli("instance", "sample", "--graph", "blob:9", "--seed", "1")
    assert code == 1
    assert "input error" in err


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------

def test_bench_exhaustive_all_correct():
    code, out, err = run_cli("bench", "--graph", "hypercube:3",
                             "--chain", "lazy-simple", "--solver", "exhaustive",
                             "--trials", "4", "--seed", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "seed,solver,n,distinct,total,found_vertex,correct,error"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 4
    assert all(r[6] == "true" for r in rows)
    assert all(r[3] == "8" for r in rows)  # distinct = n
    summary = json.loads(err)
    assert summary["all_correct"] is True
    assert summary["solvers"]["exhaustive"]["mean_distinct"] == 8


def test_bench_deterministic_csv():
    runs = [run_cli("bench", "--graph", "complete:9", "--chain", "lazy-simple",
                    "--trials", "3", "--seed", "11") for _ in range(2)]
    assert runs[0] == runs[1]


def test_bench_config_roundtrip(tmp_path):
    config = ExperimentConfig(graph="complete:9", chain="lazy-simple", seed=5,
                              trials=2, solvers=("steepest",))
    assert ExperimentConfig.from_dict(config.to_dict()) == config
    cfg_path = tmp_path / "config.json"
    cfg_path.write_text(json.dumps(config.to_dict()))
    code, out, err = run_cli("bench", "--config", str(cfg_path))
    assert code == 0
    assert out.splitlines()[0].startswith("seed,solver")


def test_bench_json_format():
    code, out, _ = run_cli("bench", "--graph", "complete:9", "--chain",
                           "lazy-simple", "--trials", "2", "--seed", "1",
                           "--format", "json", "--solver", "steepest")
    assert code == 0
    doc = json.loads(out)
    assert {row["solver"] for row in doc["trials"]} == {"steepest"}
    assert doc["summary"]["all_correct"] is True
    assert "mixing" in doc["summary"]["bounds"]


def test_config_validation():
    with pytest.raises(InputError):
        ExperimentConfig(graph="cycle:5", chain="lazy-simple", seed=1, trials=0)
    with pytest.raises(InputError):
        ExperimentConfig(graph="cycle:5", chain="lazy-simple", seed=1,
                         solvers=("nope",))
    with pytest.raises(InputError):
        ExperimentConfig(graph="cycle:5", chain="lazy-simple", seed=1, T=3)


# ---------------------------------------------------------------------------
# bound
# ---------------------------------------------------------------------------

def test_bound_numeric():
    code, out, _ = run_cli("bound", "--n", "16", "--t-mix", "2", "--sigma", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["values"]["mixing"] == pytest.approx(0.09957, abs=5e-6)


def test_bound_from_graph():
    code, out, _ = run_cli("bound", "--graph", "complete:16",
                           "--chain", "lazy-simple")
    assert code == 0
    doc = json.loads(out)
    assert doc["inputs"]["n"] == 16
    assert set(doc["values"]) >= {"mixing", "spectral", "expansion"}


def test_bound_missing_inputs():
    code, _, err = run_cli("bound", "--n", "16")
    assert code == 1
    assert "input error" in err


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_single_check():
    code, out, err = run_cli("verify", "--checks", "A7_monotone_grid",
                             "--seed", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert [c["name"] for c in doc["checks"]] == ["A7_monotone_grid"]
    assert "PASS A7_monotone_grid" in err


def test_verify_unknown_check():
    code, _, err = run_cli("verify", "--checks", "A99", "--seed", "0")
    assert code == 1
    assert "unknown checks" in err


def test_verify_deterministic_output():
    runs = [run_cli("verify", "--checks", "A7_monotone_grid,B2_expansion_bound",
                    "--seed", "3") for _ in range(2)]
    assert runs[0][1] == runs[1][1]
