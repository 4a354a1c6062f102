import json
import subprocess
import sys

import pytest

from flowtension.cli import main
from flowtension.families import FamilySpecError, complete_graph, generate_family, path_graph
from flowtension.graph import disjoint_union
from flowtension.verify import CHECK_NAMES, jsonable, verify_graph


def test_k3_report(k3):
    rep = verify_graph(k3, spec="complete:3")
    assert rep.ok
    assert all(c.status == "pass" for c in rep.checks.values())
    assert rep.hstar["tension"].entries == (1, 4, 1)
    comp = rep.checks["tension_sandwich"].details["components"][0]
    assert list(comp["lower"]) == list(comp["hstar"]) == [1, 4, 1]


def test_k4_report(k4):
    rep = verify_graph(k4, spec="complete:4")
    assert rep.ok
    comp = rep.checks["flow_sandwich"].details["components"][0]
    assert list(comp["lower"]) == [1, 3, 3, 1] and list(comp["upper"]) == [1, 23, 23, 1]
    assert list(comp["hstar"]) == [1, 11, 11, 1]


def test_path_report(p3):
    rep = verify_graph(p3, spec="path:3")
    assert rep.ok
    for name in CHECK_NAMES:
        status = rep.checks[name].status
        if name.endswith("flow") or name == "flow_sandwich":
            assert status == "skipped" and rep.checks[name].details["reason"] == "bridge"
        else:
            assert status == "pass", name
    assert rep.hstar["tension"].entries == (1, 6, 1)


def test_guard_becomes_skip():
    rep = verify_graph(complete_graph(5), guard=1000)
    assert any(c.status == "skipped" and c.details["reason"] == "guard" for c in rep.checks.values())
    assert not rep.failed


def test_disconnected_sandwich_is_per_component(k3):
    rep = verify_graph(disjoint_union(k3, complete_graph(4)))
    assert rep.ok
    det = rep.checks["tension_sandwich"].details
    assert det["per_component"] and det["product_rule"] and len(det["components"]) == 2


def test_check_selection(k3):
    rep = verify_graph(k3, checks=["chromatic_identity"])
    assert list(rep.checks) == ["chromatic_identity"]


def test_json_schema_and_determinism(k3):
    a = verify_graph(k3, spec="complete:3").dumps()
    b = verify_graph(k3, spec="complete:3").dumps()
    assert a == b
    data = json.loads(a)
    assert set(data) >= {"graph", "classification", "polynomials", "hstar", "checks"}
    assert set(data["polynomials"]) == {"mflow", "mtension", "iflow", "itension"}
    assert set(data["hstar"]) == {"flow", "tension"}
    assert data["polynomials"]["itension"] == ["6/1", "-9/1", "3/1"]
    assert data["classification"]["cyclomatic_number"] == "1"
    for c in data["checks"].values():
        assert c["status"] in ("pass", "fail", "skipped")


def test_jsonable_big_integers():
    assert jsonable({"x": 2 ** 80, "y": [True, None]}) == {"x": str(2 ** 80), "y": [True, None]}


def test_generate_family_examples():
    k4 = generate_family("complete:4")
    assert k4.edges == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    b = generate_family("bouquet:3")
    assert b.n_vertices == 1 and b.n_edges == 3
    assert generate_family("cycle:5").edges[-1] == (5, 1)
    t = generate_family("theta:1:2:3")
    assert t.n_edges == 6 and t.n_vertices == 5


@pytest.mark.parametrize("spec", ["wheel:4", "complete", "complete:0", "theta:1:2", "cycle:x", "file:"])
def test_generate_family_errors(spec):
    with pytest.raises(FamilySpecError):
        generate_family(spec)


def test_generate_family_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("# triangle\n1 2\n2 3\n3 1\n")
    assert generate_family(f"file:{p}").n_edges == 3


def test_cli_analyze_json(capsys):
    assert main(["analyze", "--graph", "complete:3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["graph"]["spec"] == "complete:3"


def test_cli_analyze_path_table(capsys):
    assert main(["analyze", "--graph", "path:3"]) == 0
    out = capsys.readouterr().out
    assert "flow_sandwich" in out and "skipped (bridge)" in out


def test_cli_out_file(tmp_path):
    out = tmp_path / "r.json"
    assert main(["analyze", "--graph", "cycle:3", "--format", "json", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["checks"]["palindromic_flow"]["status"] == "pass"


@pytest.mark.parametrize("argv", [
    [],
    ["analyze"],
    ["analyze", "--graph", "wheel:3"],
    ["analyze", "--graph", "complete:3", "--checks", "nonsense"],
    ["analyze", "--graph", "complete:3", "--bogus"],
    ["tables"],
    ["tables", "--eulerian", "0"],
])
def test_cli_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as err:
        main(argv)
    assert err.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_cli_failure_exit_code(monkeypatch, capsys):
    from flowtension import cli
    from flowtension.verify import CheckResult

    real = cli.verify_graph

    def broken(*a, **kw):
        rep = real(*a, **kw)
        rep.checks["chromatic_identity"] = CheckResult.of(False, note="injected")
        return rep

    monkeypatch.setattr(cli, "verify_graph", broken)
    assert main(["analyze", "--graph", "complete:3"]) == 1


def test_cli_tables(capsys):
    assert main(["tables", "--eulerian", "4", "--macmahon", "3"]) == 0
    out = capsys.readouterr().out
    assert "n=2: 0 1 1" in out
    assert "n=3: 0 1 4 1" in out
    assert "n=4: 0 1 11 11 1" in out
    assert "n=3: 0 1 6 1" in out


def test_cli_corpus_small(tmp_path, capsys):
    assert main(["corpus", "--max-vertices", "3", "--max-edges", "4", "--out", str(tmp_path)]) == 0
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary and all(not s["failed"] for s in summary)
    assert len(list(tmp_path.glob("0*.json"))) == len(summary)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "flowtension", "tables", "--eulerian", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "n=2: 0 1 1" in res.stdout
