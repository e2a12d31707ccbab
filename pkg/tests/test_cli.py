import json
import subprocess
import sys

import pytest

from rainbowdom.cli import main


def run_cli(*argv, cwd=None):
    """Run in-process; returns (exit_code, stdout, stderr)."""
    import contextlib
    import io

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def gap_files(tmp_path):
    code, _o, _e = run_cli(
        "generate", "rainbow_gap", "--out", str(tmp_path / "gap")
    )
    assert code == 0
    return tmp_path / "gap.graph", tmp_path / "gap.cotree"


def test_solve_rainbow_cograph_model(gap_files):
    _graph, cotree = gap_files
    code, out, _ = run_cli(
        "solve", "--problem", "rainbow", "--k", "3",
        "--class", "cograph", "--model", str(cotree),
    )
    assert code == 0 and out.strip() == "6"


def test_solve_weak_oracle_c6(tmp_path):
    run_cli("generate", "cycle", "6", "--out", str(tmp_path / "c6"))
    code, out, _ = run_cli(
        "solve", "--problem", "weak", "--k", "2",
        "--class", "oracle", "--graph", str(tmp_path / "c6.graph"),
    )
    assert code == 0 and out.strip() == "3"


def test_solve_auto_picks_cograph(gap_files):
    graph, _ = gap_files
    code, out, err = run_cli(
        "solve", "--problem", "rainbow", "--k", "3",
        "--class", "auto", "--graph", str(graph),
    )
    assert code == 0 and out.strip() == "6"
    assert "cograph" in err


def test_solve_jkdom_tree_model(tmp_path):
    (tmp_path / "star.tree").write_text("0 -1\n1 0\n2 0\n3 0\n")
    code, out, _ = run_cli(
        "solve", "--problem", "jkdom", "--j", "1", "--k", "2",
        "--class", "trivially-perfect", "--model", str(tmp_path / "star.tree"),
    )
    assert code == 0 and out.strip() == "4"


def test_solve_weakL_bipartite_instance(tmp_path):
    (tmp_path / "inst.bip").write_text("2 2 2\n2 1\n1 1\n")
    code, out, _ = run_cli(
        "solve", "--problem", "weakL", "--k", "2",
        "--class", "complete-bipartite", "--model", str(tmp_path / "inst.bip"),
    )
    assert code == 0 and out.strip() == "2"


def test_witness_json_schema(tmp_path):
    run_cli("generate", "cycle", "6", "--out", str(tmp_path / "c6"))
    wpath = tmp_path / "w.json"
    code, out, _ = run_cli(
        "solve", "--problem", "rainbow", "--k", "2", "--class", "oracle",
        "--graph", str(tmp_path / "c6.graph"), "--witness", str(wpath),
    )
    assert code == 0
    doc = json.loads(wpath.read_text())
    assert doc["problem"] == "rainbow" and doc["k"] == 2 and doc["value"] == 4
    assert set(doc) == {"problem", "k", "value", "labels"}
    assert sum(len(v) for v in doc["labels"].values()) == 4


def test_incompatible_class_exit_2(tmp_path):
    code, _o, err = run_cli(
        "solve", "--problem", "kdom", "--k", "2",
        "--class", "interval", "--model", "whatever",
    )
    assert code == 2 and "cannot be solved" in err


def test_parse_failure_exit_2(tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("not a graph\n")
    code, _o, err = run_cli(
        "solve", "--problem", "weak", "--k", "2",
        "--class", "oracle", "--graph", str(bad),
    )
    assert code == 2


def test_oracle_cap_exit_3(tmp_path):
    run_cli("generate", "random", "30", "0.5", "--out", str(tmp_path / "big"))
    code, _o, err = run_cli(
        "solve", "--problem", "rainbow", "--k", "3",
        "--class", "oracle", "--graph", str(tmp_path / "big.graph"),
    )
    assert code == 3


def test_interval_requires_k2(tmp_path):
    (tmp_path / "m.ivl").write_text("0 0 1\n1 1 2\n")
    code, _o, err = run_cli(
        "solve", "--problem", "rainbow", "--k", "3",
        "--class", "interval", "--model", str(tmp_path / "m.ivl"),
    )
    assert code == 2 and "k=2" in err


def test_solve_interval_and_permutation_models(tmp_path):
    (tmp_path / "m.ivl").write_text("\n".join(f"{i} {i} {i+1}" for i in range(6)) + "\n")
    code, out, _ = run_cli(
        "solve", "--problem", "weak", "--k", "2",
        "--class", "interval", "--model", str(tmp_path / "m.ivl"),
    )
    assert code == 0 and out.strip().isdigit()
    (tmp_path / "pi.perm").write_text("4 3 2 1\n")
    code, out, _ = run_cli(
        "solve", "--problem", "rainbow", "--k", "2",
        "--class", "permutation", "--model", str(tmp_path / "pi.perm"),
    )
    assert code == 0 and out.strip() == "2"


def test_generate_and_convert_roundtrip(tmp_path):
    run_cli("generate", "thin_spider", "3", "1", "--out", str(tmp_path / "sp"))
    code, out, _ = run_cli(
        "convert", "--kind", "p4tree", str(tmp_path / "sp.p4tree")
    )
    assert code == 0
    assert out == (tmp_path / "sp.graph").read_text()


def test_verify_quick_plan(tmp_path):
    out_path = tmp_path / "report.json"
    code, out, err = run_cli(
        "verify", "--seed", "5", "--out", str(out_path)
    )
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["all_passed"] is True
    # determinism: same seed, byte-identical report
    out2 = tmp_path / "report2.json"
    run_cli("verify", "--seed", "5", "--out", str(out2))
    assert out_path.read_text() == out2.read_text()


def test_verify_custom_plan(tmp_path):
    plan = {
        "seed": 1,
        "checks": [{"name": "reference_constants", "params": {}}],
    }
    p = tmp_path / "plan.json"
    p.write_text(json.dumps(plan))
    code, _o, err = run_cli("verify", "--plan", str(p))
    assert code == 0


def test_verify_unknown_check(tmp_path):
    p = tmp_path / "plan.json"
    p.write_text(json.dumps({"seed": 0, "checks": [{"name": "nope"}]}))
    code, _o, err = run_cli("verify", "--plan", str(p))
    assert code == 2


def test_bench_smoke(capsys):
    code, out, _ = run_cli(
        "bench", "--class", "cograph", "--sizes", "100,1000", "--k", "3"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3  # header + two rows


def test_weakL_tree_model_with_assignment(tmp_path):
    (tmp_path / "star.tree").write_text("0 -1\n1 0\n2 0\n3 0\n")
    (tmp_path / "L.assign").write_text("0 0 2\n1 0 2\n2 0 2\n3 0 2\n")
    code, out, _ = run_cli(
        "solve", "--problem", "weakL", "--k", "2",
        "--class", "trivially-perfect",
        "--model", str(tmp_path / "star.tree"),
        "--assignment", str(tmp_path / "L.assign"),
    )
    assert code == 0 and out.strip() == "2"
    # oracle on the derived graph agrees
    (tmp_path / "star.graph").write_text("4 3\n0 1\n0 2\n0 3\n")
    code, out, _ = run_cli(
        "solve", "--problem", "weakL", "--k", "2", "--class", "oracle",
        "--graph", str(tmp_path / "star.graph"),
        "--assignment", str(tmp_path / "L.assign"),
    )
    assert code == 0 and out.strip() == "2"


def test_weakL_auto_detects_complete_bipartite(tmp_path):
    (tmp_path / "k23.graph").write_text("5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n")
    (tmp_path / "L.assign").write_text("0 0 2\n1 0 1\n2 0 1\n3 0 1\n4 0 0\n")
    code, out, err = run_cli(
        "solve", "--problem", "weakL", "--k", "2", "--class", "auto",
        "--graph", str(tmp_path / "k23.graph"),
        "--assignment", str(tmp_path / "L.assign"),
    )
    assert code == 0 and out.strip() == "2"
    assert "complete-bipartite" in err


def test_oracle_cap_env_override(tmp_path, monkeypatch):
    (tmp_path / "k23.graph").write_text("5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n")
    monkeypatch.setenv("RAINBOWDOM_ORACLE_CAP", "10")
    code, _o, _e = run_cli(
        "solve", "--problem", "rainbow", "--k", "3", "--class", "oracle",
        "--graph", str(tmp_path / "k23.graph"),
    )
    assert code == 3
    monkeypatch.setenv("RAINBOWDOM_ORACLE_CAP", "24")
    code, out, _e = run_cli(
        "solve", "--problem", "rainbow", "--k", "3", "--class", "oracle",
        "--graph", str(tmp_path / "k23.graph"),
    )
    assert code == 0
