import csv
import io
import json

import jsonschema
import pytest

from cyclechain.cli import EXIT_CAP, EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from cyclechain.families import sun
from cyclechain.graph import parse_graph6, to_edge_list
from cyclechain.report import load_schema

SCHEMA = load_schema()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_compute_family(capsys):
    code, out, _ = run(capsys, "compute", "--family", "double_star", "--n", "3")
    assert code == EXIT_OK
    [rec] = json_lines(out)
    jsonschema.validate(rec, SCHEMA)
    assert rec["parameters"]["beta_odd"] == 4 and rec["parameters"]["i_odd"] == 2
    assert rec["label"] == "double_star(3)"


def test_compute_edge_list_file(tmp_path, capsys):
    f = tmp_path / "sun.txt"
    f.write_text(to_edge_list(sun()))
    code, out, _ = run(capsys, "compute", "--in", str(f))
    assert code == EXIT_OK
    [rec] = json_lines(out)
    assert rec["parameters"]["gamma_odd"] == 3 and rec["parameters"]["i_odd"] == 4


def test_compute_csv_matches_json(tmp_path, capsys):
    g6 = tmp_path / "graphs.g6"
    g6.write_text("Bw\nCF\nD~{\n")
    _, out_json, _ = run(capsys, "compute", "--in", str(g6))
    _, out_csv, _ = run(capsys, "compute", "--in", str(g6), "--format", "csv")
    recs = json_lines(out_json)
    rows = list(csv.DictReader(io.StringIO(out_csv)))
    assert len(rows) == len(recs) == 3
    for rec, row in zip(recs, rows):
        assert row["graph6"] == rec["graph6"]
        for k, v in rec["parameters"].items():
            assert int(row[k]) == v
        assert int(row["chi"]) == rec["invariants"]["chi"]


def test_verify_ok_and_schema(capsys):
    code, out, _ = run(capsys, "verify", "--family", "fan", "--n", "7", "--checks", "odd_strict,mop_beta")
    assert code == EXIT_OK
    [rec] = json_lines(out)
    jsonschema.validate(rec, SCHEMA)
    assert [c["status"] for c in rec["checks"]] == ["holds", "holds"]


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--family", "mop_random", "--n", "10", "--seed", "1",
                       "--count", "2", "--checks", "mop_beta")
    assert code == EXIT_FAIL
    recs = json_lines(out)
    bad = [r for r in recs if r["checks"][0]["status"] == "fails"]
    assert bad and bad[0]["graph6"] == "I|de@IAK?"


def test_verify_fail_fast_stops(capsys):
    code, out, _ = run(capsys, "verify", "--family", "mop_random", "--n", "10", "--seed", "1",
                       "--count", "5", "--checks", "mop_beta", "--fail-fast")
    assert code == EXIT_FAIL
    assert len(json_lines(out)) == 2


def test_input_error_has_line(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("3 2\n0 1\n1 7\n")
    code, _, err = run(capsys, "compute", "--in", str(f))
    assert code == EXIT_INPUT
    assert "line 3" in err


def test_missing_file_and_unknown_check(tmp_path, capsys):
    assert run(capsys, "compute", "--in", str(tmp_path / "nope.g6"))[0] == EXIT_INPUT
    assert run(capsys, "verify", "--family", "sun", "--checks", "bogus")[0] == EXIT_INPUT
    assert run(capsys, "compute")[0] == EXIT_INPUT


def test_cap_exceeded(capsys):
    code, _, err = run(capsys, "compute", "--family", "complete", "--n", "30")
    assert code == EXIT_CAP
    assert "cap" in err
    assert run(capsys, "compute", "--family", "sun", "--cap", "99")[0] == EXIT_INPUT


def test_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("CYCLECHAIN_CAP", "4")
    assert run(capsys, "compute", "--family", "sun")[0] == EXIT_CAP


def test_sweep_output_and_corpus(tmp_path, capsys):
    out = tmp_path / "sweep.json"
    corpus = tmp_path / "corpus"
    code, _, err = run(capsys, "sweep", "--family", "mop_random", "--n", "10", "--seed", "1", "--count", "4",
                       "--checks", "mop_beta,odd_chain", "--out", str(out), "--corpus", str(corpus))
    assert code == EXIT_FAIL
    assert "graphs/s" in err
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, SCHEMA)
    assert doc["graphs"] == 4
    assert doc["checks"]["odd_chain"]["fails"] == 0
    lines = (corpus / "mop_beta.g6").read_text().split()
    assert len(lines) == doc["checks"]["mop_beta"]["fails"] >= 1
    for line in lines:
        assert parse_graph6(line).n == 10
    # corpus files feed straight back into verify
    assert run(capsys, "verify", "--in", str(corpus / "mop_beta.g6"), "--checks", "cover_id")[0] == EXIT_OK


def test_sweep_config_file(tmp_path, capsys):
    cfg = tmp_path / "campaign.json"
    cfg.write_text(json.dumps({
        "seed": 3,
        "sources": [{"family": "all_labeled", "n": 3}, {"family": "gnp", "n": 6, "p": 0.4, "count": 5}],
        "checks": ["cy_chain", "odd_chain"],
        "output": {"format": "csv"},
    }))
    code, out, _ = run(capsys, "sweep", "--config", str(cfg))
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["check"] for r in rows] == ["cy_chain", "odd_chain"]
    assert all(int(r["holds"]) == 13 for r in rows)


def test_sweep_bad_config(tmp_path, capsys):
    cfg = tmp_path / "campaign.json"
    cfg.write_text("{not json")
    assert run(capsys, "sweep", "--config", str(cfg))[0] == EXIT_INPUT


def test_families_listing(capsys):
    code, out, _ = run(capsys, "families")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 10
    code, out, _ = run(capsys, "families", "--family", "gnp", "--n", "5", "--count", "3", "--seed", "2")
    assert len(out.splitlines()) == 3


def test_bad_argument_exits_via_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--family", "petersen"])
    assert exc.value.code == 2
