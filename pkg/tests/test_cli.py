import json

import pytest

from jgarside import BraidParams, MonoidContext, build_presentation
from jgarside.cli import export_dot, main

from independent_oracles import (oracle_cover_edge_counts,
                                 oracle_divisor_counts)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_present_star_flavor(capsys):
    code, out, _ = run(capsys, "present", "--flavor", "star",
                       "--kind", "classical", "-n", "2", "-m", "3")
    assert code == 0
    assert out == ("letter x1\n"
                   "letter x2\n"
                   "letter y\n"
                   "rel x1.x2.y.x1 = x2.y.x1.x2\n"
                   "rel x2.y.x1.x2.y = y.x1.x2.y.x1\n")


def test_present_preset_and_conflict(capsys):
    code, out, _ = run(capsys, "present", "--preset", "G15-classical")
    assert code == 0 and "letter" in out
    code, _, err = run(capsys, "present", "--preset", "G15-classical",
                       "-n", "1", "-m", "1")
    assert code == 3 and "excludes" in err


def test_eq_examples(capsys):
    code, out, _ = run(capsys, "eq", "-n", "1", "-m", "1",
                       "--flavor", "star-star", "x.y.z", "z.x.y")
    assert (code, out) == (0, "equal\n")
    code, out, _ = run(capsys, "eq", "-n", "1", "-m", "1", "x.y", "y.x")
    assert (code, out) == (1, "different\n")


def test_input_errors_exit_3(capsys):
    code, _, err = run(capsys, "present", "-n", "2", "-m", "1")
    assert code == 3 and "n <= m" in err
    code, _, _ = run(capsys, "present", "-n", "2", "-m", "4")
    assert code == 3
    code, _, _ = run(capsys, "eq", "-n", "1", "-m", "1", "x.q", "x")
    assert code == 3
    code, _, _ = run(capsys, "no-such-command")
    assert code == 3
    code, _, _ = run(capsys, "iso", "nope", "-n", "1", "-m", "2")
    assert code == 3


def test_budget_exit_2(capsys):
    code, _, err = run(capsys, "certify", "-n", "1", "-m", "3",
                       "--bfs-nodes", "5")
    assert code == 2 and "budget" in err.lower()


def test_certify_text_and_json(capsys):
    code, out, _ = run(capsys, "certify", "-n", "1", "-m", "1")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out
    code, out, _ = run(capsys, "certify", "-n", "1", "-m", "1",
                       "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert json.loads(json.dumps(rep)) == rep
    assert rep["scenario"] == "certify"
    assert rep["params"] == {"n": 1, "m": 1, "flavor": "star-star",
                             "kind": "classical"}
    assert all(c["pass"] for c in rep["checks"])
    assert isinstance(rep["elapsed_ms"], int)
    assert rep["budgets"]["bfs_nodes"] > 0


def test_certify_cache(tmp_path, capsys):
    cache = tmp_path / "certs"
    code, first, err = run(capsys, "certify", "-n", "1", "-m", "2",
                           "--cache-dir", str(cache), "--format", "json")
    assert code == 0 and "cache hit" not in err
    assert list(cache.glob("cert-*.json"))
    code, second, err = run(capsys, "certify", "-n", "1", "-m", "2",
                            "--cache-dir", str(cache), "--format", "json")
    assert code == 0 and "cache hit" in err
    assert json.loads(first) == json.loads(second)
    # different budgets miss the cache
    code, _, err = run(capsys, "certify", "-n", "1", "-m", "2",
                       "--cache-dir", str(cache), "--theta-steps", "999999")
    assert code == 0 and "cache hit" not in err


def test_nf_output(capsys):
    code, out, _ = run(capsys, "nf", "-n", "1", "-m", "1", "x.y.z.x")
    assert (code, out) == (0, "x.y.z | x\n")
    code, out, _ = run(capsys, "nf", "-n", "1", "-m", "1", "1")
    assert (code, out) == (0, "1\n")


def test_geq(capsys):
    code, out, _ = run(capsys, "geq", "-n", "1", "-m", "1",
                       "x.y.z.z^-1.y^-1.x^-1", "1")
    assert (code, out) == (0, "equal\n")
    code, out, _ = run(capsys, "geq", "-n", "1", "-m", "1", "x.y^-1", "1")
    assert (code, out) == (1, "different\n")


def test_simples_counts(capsys):
    code, out, _ = run(capsys, "simples", "-n", "1", "-m", "1")
    assert code == 0
    assert out.splitlines()[0] == f"{oracle_divisor_counts()[0]} simples"
    code, out, _ = run(capsys, "simples", "-n", "1", "-m", "2",
                       "--flavor", "star", "--list")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == f"{oracle_divisor_counts()[1]} simples"
    assert len(lines) == 1 + oracle_divisor_counts()[1]
    assert lines[1] == "1"


def test_dot_export_matches_oracle(tmp_path, capsys):
    dot = tmp_path / "simples.dot"
    code, _, _ = run(capsys, "simples", "-n", "1", "-m", "1",
                     "--dot", str(dot))
    assert code == 0
    text = dot.read_text()
    nodes = [ln for ln in text.splitlines()
             if ln.endswith('";') and "->" not in ln]
    edges = [ln for ln in text.splitlines() if "->" in ln]
    assert len(nodes) == oracle_divisor_counts()[0]
    assert len(edges) == oracle_cover_edge_counts()[0]
    assert text.startswith("digraph")


def test_dot_identity_only(tmp_path):
    ctx = MonoidContext(build_presentation(
        BraidParams(1, 1, variant="enlarged")))
    ds = ctx.left_divisors(b"")
    path = tmp_path / "unit.dot"
    export_dot(ds, path, ctx.presentation)
    text = path.read_text()
    assert '"1";' in text
    assert "->" not in text


def test_iso_subcommand(capsys):
    code, out, _ = run(capsys, "iso", "g33", "-n", "1", "-m", "2",
                       "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["scenario"] == "g33"
    assert {c["name"] for c in rep["checks"]} >= {
        "phi-preserves-relations", "phi-garside-is-center"}


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "certify", "-n", "1", "-m", "1",
                       "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    rep = json.loads(target.read_text())
    assert rep["scenario"] == "certify"


def test_config_file_and_env(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "json", "bfs_nodes": 60000}))
    monkeypatch.setenv("JGAR_CONFIG", str(cfg))
    code, out, _ = run(capsys, "certify", "-n", "1", "-m", "1")
    assert code == 0
    assert json.loads(out)["budgets"]["bfs_nodes"] == 60000
    monkeypatch.setenv("JGAR_BFS_NODES", "70000")
    code, out, _ = run(capsys, "certify", "-n", "1", "-m", "1")
    assert json.loads(out)["budgets"]["bfs_nodes"] == 70000
    code, out, _ = run(capsys, "certify", "-n", "1", "-m", "1",
                       "--bfs-nodes", "80000")
    assert json.loads(out)["budgets"]["bfs_nodes"] == 80000


def test_bad_config_values(tmp_path, capsys, monkeypatch):
    code, _, _ = run(capsys, "certify", "-n", "1", "-m", "1",
                     "--bfs-nodes", "-4")
    assert code == 3
    cfg = tmp_path / "cfg.json"
    cfg.write_text("[1, 2]")
    monkeypatch.setenv("JGAR_CONFIG", str(cfg))
    code, _, err = run(capsys, "certify", "-n", "1", "-m", "1")
    assert code == 3 and "config" in err
    cfg.write_text("{nope")
    code, _, _ = run(capsys, "certify", "-n", "1", "-m", "1")
    assert code == 3


def test_sweep_small(capsys):
    code, out, _ = run(capsys, "sweep", "--max", "2", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["params"] == {"max": 2}
    names = [c["name"] for c in rep["checks"]]
    assert "(1,1) certify-classical" in names
    assert "(1,2) dihedral" in names
    assert "(1,1) dihedral" not in names
    assert all(c["pass"] for c in rep["checks"])
