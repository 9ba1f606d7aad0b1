"""CLI contract: subcommands, exit codes, JSON schema, round trips."""

import json
from importlib import resources

import jsonschema
import pytest

from mexlab.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, main
from mexlab.constructions import norm_graph
from mexlab.graphs import (complete, format_edge_list, load_edge_list,
                           read_edge_list, save_edge_list)


@pytest.fixture(scope="module")
def schema():
    text = resources.files("mexlab").joinpath("report_schema.json").read_text()
    return json.loads(text)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, schema, *argv):
    code, out = run_cli(capsys, *argv)
    obj = json.loads(out)
    jsonschema.validate(obj, schema)
    return code, obj


def test_count(tmp_path, capsys, schema):
    p = tmp_path / "k5.el"
    save_edge_list(complete(5), p)
    code, obj = run_json(capsys, schema, "count", "--input", str(p), "--max-clique", "3")
    assert code == EXIT_OK
    assert obj == {"k1": 5, "k2": 10, "k3": 10}


def test_count_accepts_literals(capsys, schema):
    code, obj = run_json(capsys, schema, "count", "--input", "K2_2_2", "--max-clique", "3")
    assert code == EXIT_OK and obj["k3"] == 8


def test_participation(capsys, schema):
    code, obj = run_json(capsys, schema, "participation", "--input", "K4", "--r", "3")
    assert code == EXIT_OK
    assert all(row[2] == 2 for row in obj["participation"])


def test_pattern_count_and_free_check(capsys, schema):
    code, obj = run_json(capsys, schema, "pattern-count",
                         "--pattern", "C4", "--input", "K2_3")
    assert code == EXIT_OK and obj["count"] == 3
    code, obj = run_json(capsys, schema, "free-check",
                         "--pattern", "K3", "--input", "S5")
    assert code == EXIT_OK and obj["free"] is True


def test_bounds_report(capsys, schema):
    code, obj = run_json(capsys, schema, "bounds", "--formula", "cor14_kst",
                         "--params", "r=3,s=3")
    assert code == EXIT_OK
    assert obj["value"] == pytest.approx(1.2)
    assert obj["valueRational"] == "6/5"
    code, obj = run_json(capsys, schema, "bounds", "--formula", "thm43_multipartite",
                         "--params", "r=3,s=2+2+2")
    assert code == EXIT_OK and obj["valueRational"] == "22/15"
    code, obj = run_json(capsys, schema, "bounds", "--formula", "cor17_classifier",
                         "--params", "f=K4,t=3")
    assert code == EXIT_OK and obj["value"] is True
    code, obj = run_json(capsys, schema, "bounds", "--formula", "lemma21_constant",
                         "--params", "u=1,r=2")
    assert code == EXIT_OK and obj["value"] == 0.5


def test_bounds_unknown_formula(capsys, schema):
    code, obj = run_json(capsys, schema, "bounds", "--formula", "nope", "--params", "")
    assert code == EXIT_VALIDATION and obj["code"] == "invalid-params"


def test_extract_cli(tmp_path, capsys, schema):
    g = complete(8)
    src = tmp_path / "k8.el"
    save_edge_list(g, src)
    report_path = tmp_path / "rep.json"
    out_path = tmp_path / "out.el"
    code, out = run_cli(capsys, "extract", "--input", str(src), "--r", "3",
                        "--alpha", "1", "--C", "0.2",
                        "--report", str(report_path), "--out", str(out_path))
    assert code == EXIT_OK
    obj = json.loads(report_path.read_text())
    jsonschema.validate(obj, schema)
    assert obj["hypothesisMet"] is True and obj["e1Count"] == 0
    assert load_edge_list(out_path) == g


def test_construct_norm_graph_round_trip(tmp_path, capsys, schema):
    out = tmp_path / "h.el"
    code, obj = run_json(capsys, schema, "construct", "norm-graph",
                         "--q", "5", "--s", "2", "--out", str(out))
    assert code == EXIT_OK
    assert obj["n"] == 20 and obj["m"] == 38
    assert load_edge_list(out) == norm_graph(5, 2)


def test_construct_deletion_cli(tmp_path, capsys, schema):
    out = tmp_path / "g.el"
    code, obj = run_json(capsys, schema, "construct", "deletion",
                         "--pattern", "K3_4", "--u", "2", "--r", "3",
                         "--n", "40", "--seed", "1", "--out", str(out))
    assert code == EXIT_OK
    assert obj["fFree"] is True and obj["seed"] == 1
    assert load_edge_list(out).m == obj["kuAfter"]


def test_construct_deletion_condition_failure(capsys, schema):
    code, obj = run_json(capsys, schema, "construct", "deletion",
                         "--pattern", "K3_3", "--u", "2", "--r", "3",
                         "--n", "60", "--seed", "1")
    assert code == EXIT_VALIDATION
    assert obj["failedCondition"] == "madc < (2e-r(r-1))/(v-2)"


def test_oracle_cli(capsys, schema):
    code, obj = run_json(capsys, schema, "oracle", "mex", "--m", "4",
                         "--target", "K1_2", "--forbidden", "K2_2")
    assert code == EXIT_OK and obj["value"] == 6
    witness = read_edge_list(
        f"{obj['witness']['n']} {len(obj['witness']['edges'])}\n"
        + "".join(f"{u} {v}\n" for u, v in obj["witness"]["edges"]))
    assert witness.m == 4
    code, obj = run_json(capsys, schema, "oracle", "ex", "--n", "5",
                         "--target", "K3", "--forbidden", "K2_2")
    assert code == EXIT_OK and obj["value"] == 2


def test_experiment_cli(tmp_path, capsys, schema):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"family": "tripartite", "n": [16, 32, 64]}))
    csv_path = tmp_path / "rows.csv"
    code, obj = run_json(capsys, schema, "experiment", str(spec),
                         "--csv", str(csv_path))
    assert code == EXIT_OK and obj["rows"] == 3
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "family,param,n,m,k2,k3,k4,predicted_exponent,fitted_slope"
    assert len(lines) == 4
    first = csv_path.read_bytes()
    assert main(["experiment", str(spec), "--csv", str(csv_path)]) == EXIT_OK
    capsys.readouterr()
    assert csv_path.read_bytes() == first  # byte-for-byte reproducible


def test_exit_codes(capsys, schema):
    code, obj = run_json(capsys, schema, "frobnicate")
    assert code == EXIT_USAGE and obj["code"] == "unknown-command"
    code, obj = run_json(capsys, schema, "count", "--input", "/no/such/file.el",
                         "--max-clique", "3")
    assert code == EXIT_IO and obj["code"] == "io-error"
    code, obj = run_json(capsys, schema, "count", "--input", "K5")
    assert code == EXIT_VALIDATION and obj["code"] == "usage"
    code, obj = run_json(capsys, schema, "count", "--input", "K5",
                         "--max-clique", "0")
    assert code == EXIT_VALIDATION
    code, obj = run_json(capsys, schema, "--threads", "0", "count",
                         "--input", "K5", "--max-clique", "3")
    assert code == EXIT_VALIDATION


def test_threads_flag_does_not_change_output(capsys, schema):
    _, a = run_json(capsys, schema, "count", "--input", "K5", "--max-clique", "4")
    _, b = run_json(capsys, schema, "--threads", "4", "count",
                    "--input", "K5", "--max-clique", "4")
    assert a == b
