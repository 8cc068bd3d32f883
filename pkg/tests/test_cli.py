import json
import os
import subprocess
import sys
from pathlib import Path

from nilgraph.checks import CheckResult
from nilgraph.cli import main
from nilgraph.graphs import parse_graph

DATA = Path(__file__).parent / "data"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_star(capsys):
    code, out, _ = run_cli(capsys, "info", str(DATA / "star.graph"))
    assert code == 0
    rep = json.loads(out)
    assert rep["dims"]["abelian_factor"] == 3
    assert rep["dims"]["V"] == 7
    assert rep["abelian_support"] == ["v1_1", "v1_2", "v1_3", "v2_1", "v2_2"]
    assert rep["diagnostics"]["simple"] is True


def test_info_trivial_factor(capsys):
    code, out, _ = run_cli(capsys, "info",
                           str(DATA / "four_cycle_flipped.graph"))
    assert code == 0
    assert json.loads(out)["dims"]["abelian_factor"] == 0


def test_info_malformed_exits_2(capsys):
    code, _, err = run_cli(capsys, "info", str(DATA / "bad.graph"))
    assert code == 2
    assert "line 2" in err


def test_info_missing_file_exits_2(capsys):
    code, _, err = run_cli(capsys, "info", str(DATA / "nope.graph"))
    assert code == 2
    assert "cannot read" in err


def test_info_disconnected_exits_2(capsys):
    code, _, err = run_cli(capsys, "info", str(DATA / "disconnected.graph"))
    assert code == 2
    assert "disconnected" in err


def test_classify_c8(capsys):
    code, out, _ = run_cli(capsys, "classify", str(DATA / "c8.graph"))
    assert code == 0
    verdict = json.loads(out)
    assert verdict["status"] == "AlmostNonsingularCertified"
    assert verdict["witnesses"][0]["coeffs"] == ["1", "0", "0", "0"]
    assert verdict["witnesses"][1]["coeffs"] == ["1", "0", "1", "0"]
    assert verdict["char_poly"][0] == "1"


def test_classify_seed_flag(capsys):
    code, out, _ = run_cli(capsys, "classify", str(DATA / "k33.graph"),
                           "--samples", "10", "--seed", "3")
    assert code == 0
    assert json.loads(out)["seed"] == 3


def test_family_star_round_trip(capsys):
    code, out, _ = run_cli(capsys, "family", "star", "--m", "3,2,1",
                           "--delta", "+-++-+")
    assert code == 0
    g = parse_graph(out)
    assert len(g.vertices) == 7
    assert g.labels == ("Z1", "Z2", "Z3")


def test_family_cycle_flags(capsys):
    code, out, _ = run_cli(capsys, "family", "cycle", "--n", "4",
                           "--orient", "+++-")
    assert code == 0
    g = parse_graph(out)
    assert ("v1", "v4", "Z1") in [tuple(e) for e in g.edges]


def test_family_cycle_labels(capsys):
    code, out, _ = run_cli(capsys, "family", "cycle", "--n", "4",
                           "--labels", "Z1,Z2,Z1,Z2")
    assert code == 0
    assert parse_graph(out).labels == ("Z1", "Z2")


def test_family_double_star(capsys):
    code, out, _ = run_cli(capsys, "family", "double-star",
                           "--m1", "2,2", "--m2", "2",
                           "--bridge-label", "Z1")
    assert code == 0
    g = parse_graph(out)
    assert "w0" in g.vertices


def test_family_path_emit(tmp_path, capsys):
    target = tmp_path / "path.graph"
    code, out, _ = run_cli(capsys, "family", "path", "--n", "3",
                           "--label", "Q", "--emit", str(target))
    assert code == 0
    assert out == ""
    assert parse_graph(target.read_text()).labels == ("Q",)


def test_family_emit_dot(capsys):
    code, out, _ = run_cli(capsys, "family", "path", "--n", "2",
                           "--emit-dot")
    assert code == 0
    assert out.startswith("digraph")


def test_family_spec_json(tmp_path, capsys):
    doc = {"family": "double_star",
           "star1": {"multiplicities": [2, 2]},
           "star2": {"multiplicities": [2]},
           "bridge_label": "Z1"}
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "family", "double-star",
                           "--spec-json", str(path))
    assert code == 0
    g = parse_graph(out)
    assert len(g.vertices) == 8


def test_family_spec_json_mismatch(tmp_path, capsys):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps({"family": "path", "n": 3}))
    code, _, err = run_cli(capsys, "family", "star", "--spec-json",
                           str(path))
    assert code == 2
    assert "path" in err


def test_family_bad_spec_exits_2(capsys):
    code, _, err = run_cli(capsys, "family", "star", "--m", "2",
                           "--delta", "+")
    assert code == 2
    assert "delta" in err


def test_schreier_classes(capsys):
    code, out, _ = run_cli(capsys, "schreier", "classes",
                           str(DATA / "schreier.graph"))
    assert code == 0
    assert json.loads(out)["classes"] == [["v1", "v2", "v5"], ["v3", "v4"]]


def test_schreier_xi(capsys):
    code, out, _ = run_cli(capsys, "schreier", "xi",
                           str(DATA / "schreier.graph"))
    assert code == 0
    doc = json.loads(out)
    assert doc["xi"] == [[["1", "v1"], ["1", "v2"], ["1", "v5"]],
                         [["1", "v3"], ["1", "v4"]]]


def test_schreier_rejects_ordinary_graph(capsys):
    code, _, err = run_cli(capsys, "schreier", "classes",
                           str(DATA / "star.graph"))
    assert code == 2
    assert "per label" in err


def test_census_cycle_rows(capsys):
    code, out, _ = run_cli(capsys, "census", "--family", "cycle",
                           "--max-n", "4")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 8 + 16
    assert all(r["agree"] for r in rows)


def test_census_star_with_flags(capsys):
    code, out, _ = run_cli(capsys, "census", "--family", "star",
                           "--max-k", "2", "--max-m", "2",
                           "--count", "6", "--seed", "1", "--classify")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) >= 6
    assert all("status" in r for r in rows)


def test_census_size_cap(capsys):
    code, _, err = run_cli(capsys, "census", "--family", "cycle",
                           "--max-n", "30")
    assert code == 2
    assert "rows" in err and "--force" in err


def test_census_pretty(capsys):
    code, out, _ = run_cli(capsys, "--pretty", "census", "--family",
                           "cycle", "--max-n", "3")
    assert code == 0
    assert out.count("ok ") == 8


def test_verify_passes(capsys):
    for name in ("schreier.graph", "k33.graph", "triangle.graph"):
        code, out, _ = run_cli(capsys, "verify", str(DATA / name))
        assert code == 0
        assert json.loads(out)["passed"] is True


def test_verify_failure_exits_1(capsys, monkeypatch):
    import nilgraph.cli as cli_mod

    monkeypatch.setattr(
        cli_mod, "run_checks",
        lambda g: [CheckResult("skew_symmetry", False, "forced")])
    code, out, _ = run_cli(capsys, "verify", str(DATA / "k33.graph"))
    assert code == 1
    doc = json.loads(out)
    assert doc["passed"] is False
    assert doc["checks"][0]["detail"] == "forced"


def test_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("NILGRAPH_SEED", "17")
    import importlib
    import nilgraph.cli as cli_mod
    importlib.reload(cli_mod)
    try:
        code = cli_mod.main(["classify", str(DATA / "k33.graph"),
                             "--samples", "5"])
        out = capsys.readouterr().out
        assert code == 0
        assert json.loads(out)["seed"] == 17
    finally:
        monkeypatch.delenv("NILGRAPH_SEED")
        importlib.reload(cli_mod)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nilgraph.cli", "info",
         str(DATA / "star.graph")],
        capture_output=True, text=True,
        env={**os.environ, "PYTHONPATH": str(Path(__file__).parents[1] /
                                             "src")})
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dims"]["abelian_factor"] == 3
