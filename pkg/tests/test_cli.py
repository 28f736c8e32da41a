import json
import subprocess
import sys

import pytest

from edgedepth.cli import EXIT_BUDGET, EXIT_DISAGREE, EXIT_OK, EXIT_USAGE, cmd_formula, cmd_verify, main, verify_status
from edgedepth.config import DEFAULT_CAPS, Caps, load_caps
from edgedepth.errors import InvalidArgument, UnsupportedFamily
from edgedepth.sweeps import RunReport, build_cases, run_cases


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def as_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_cmd_formula_examples():
    assert cmd_formula("cycle:7", 3).formula_depth == 2
    assert cmd_formula("star:3,4,5", 1).formula_depth == 5


def test_cmd_formula_unsupported(tmp_path):
    p = tmp_path / "some_tree.txt"
    p.write_text("4 3\n1 2\n2 3\n2 4\n")
    assert cmd_formula(f"file:{p}", 1).formula_depth == 1
    with pytest.raises(UnsupportedFamily):
        cmd_formula(f"file:{p}", 2)


def test_formula_command(capsys):
    code, doc = as_json(capsys, "formula", "--graph", "cycle:7", "--power", "3")
    assert code == EXIT_OK and doc["schema"] == 1 and doc["command"] == "formula"
    assert doc["records"][0]["formula_depth"] == 2


def test_formula_tsv(capsys):
    code, out, _ = run(capsys, "formula", "--graph", "path:5", "--power", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0].split("\t")[:3] == ["spec", "power", "formula_depth"]
    assert lines[1].split("\t")[:3] == ["path:5", "2", "2"]


def test_unsupported_exit_code(capsys, tmp_path):
    p = tmp_path / "t.txt"
    p.write_text("3 2\n1 2\n2 3\n")
    code, _, err = run(capsys, "formula", "--graph", f"file:{p}", "--power", "2")
    assert code == EXIT_USAGE and "oracle" in err


def test_usage_errors(capsys):
    assert run(capsys, "formula", "--graph", "path:4")[0] == EXIT_USAGE
    assert run(capsys, "formula", "--graph", "blob:4", "--power", "1")[0] == EXIT_USAGE
    assert run(capsys, "nonsense")[0] == EXIT_USAGE
    assert run(capsys, "--help")[0] == EXIT_OK


@pytest.mark.parametrize("spec,t,expected", [
    ("star:3,3,5", 9, [4, 4, 4, 3, 3, 2, 2, 2, 1]),
    ("cycle:6", 5, [2, 2, 2, 1, 1]),
    ("path:5", 5, [2, 2, 1, 1, 1]),
])
def test_profile(capsys, spec, t, expected):
    code, doc = as_json(capsys, "profile", "--graph", spec, "--max-power", str(t))
    assert code == 0
    assert [r["depth"] for r in doc["records"]] == expected
    assert all(r["source"] == "formula" for r in doc["records"])


def test_profile_with_oracle(capsys):
    code, doc = as_json(capsys, "profile", "--graph", "cycle:5", "--max-power", "4", "--oracle")
    assert code == 0
    oracle = [r["depth"] for r in doc["records"] if r["source"] == "oracle"]
    assert oracle == [2, 2, 0, 0]
    assert doc["dstab"] == 3 and doc["stable_value"] == 0


def test_profile_budget(capsys):
    code, doc = as_json(capsys, "profile", "--graph", "cycle:6", "--max-power", "3", "--oracle",
                        "--max-lattice", "100")
    assert code == EXIT_BUDGET
    assert any(r.get("status") == "budget" for r in doc["records"])


def test_oracle_command(capsys):
    code, doc = as_json(capsys, "oracle", "--graph", "cycle:6", "--power", "4")
    assert code == 0 and doc["records"][0]["depth"] == 1
    code, doc = as_json(capsys, "oracle", "--graph", "path:3", "--table")
    assert doc["betti"]["totals"] == {"0": 2, "1": 1}
    code, _, err = run(capsys, "oracle", "--graph", "path:8", "--power", "3", "--max-generators", "3")
    assert code == EXIT_BUDGET and "minimal generators" in err


def test_colon_command(capsys):
    code, doc = as_json(capsys, "colon", "--graph", "path:5", "--edges", "2", "--verify")
    assert code == 0 and doc["verified"] is True
    edges = {(r["u"], r["v"]) for r in doc["records"]}
    assert edges == {(1, 2), (2, 3), (3, 4), (4, 5), (1, 4)}
    code, doc = as_json(capsys, "colon", "--graph", "cycle:3", "--edges", "1", "--verify")
    assert doc["squares"] == [3] and doc["verified"] is True
    assert run(capsys, "colon", "--graph", "path:5", "--edges", "x")[0] == EXIT_USAGE


def test_pd_command(capsys):
    code, doc = as_json(capsys, "pd", "--graph", "cycle:4")
    assert code == 0 and doc["records"][0]["pd"] == 3 and doc["records"][0]["depth"] == 1
    code, doc = as_json(capsys, "pd", "--graph", "cycle:4", "--via", "oracle")
    assert doc["records"][0]["pd"] == 3
    assert run(capsys, "pd", "--graph", "cycle:5")[0] == EXIT_USAGE    # not weakly chordal


def test_dstab_command(capsys):
    code, doc = as_json(capsys, "dstab", "--graph", "cycle:8", "--oracle")
    rec = doc["records"][0]
    assert code == 0 and rec["dstab"] == 5 and rec["stable_value"] == 1 and rec["agreement"] is True
    code, doc = as_json(capsys, "dstab", "--graph", "star:1,1,2", "--oracle")
    rec = doc["records"][0]
    assert rec["dstab"] == 2 and rec["oracle_profile"] == [2, 1, 1]
    code, doc = as_json(capsys, "dstab", "--graph", "path:2")
    assert doc["records"][0]["dstab"] == 1


def test_verify_cycles(capsys):
    code, doc = as_json(capsys, "verify", "cycles", "--max-n", "7", "--max-t", "4")
    assert code == 0
    assert doc["summary"]["disagreements"] == 0 and doc["summary"]["cases"] == len(doc["records"])
    assert all(r["agreement"] is True for r in doc["records"])


def test_verify_colon():
    reports = cmd_verify("colon", DEFAULT_CAPS, max_n=8, max_t=3)
    assert reports and all(r.agreement is True for r in reports)


def test_verify_single_path():
    reports = cmd_verify("paths", DEFAULT_CAPS, max_n=2, max_t=1)
    assert len(reports) == 1 and reports[0].agreement is True


def test_verify_budget_marked_not_fatal(capsys):
    code, doc = as_json(capsys, "verify", "cycles", "--max-n", "6", "--max-t", "4", "--max-lattice", "2000")
    assert code == EXIT_BUDGET
    statuses = {r["status"] for r in doc["records"]}
    assert statuses == {"ok", "budget"}


def test_verify_status_codes():
    ok = RunReport("a", 1, 1, 1)
    bad = RunReport("b", 1, 1, 2)
    budget = RunReport("c", 1, status="budget")
    assert verify_status([ok]) == EXIT_OK
    assert verify_status([ok, budget]) == EXIT_BUDGET
    assert verify_status([ok, bad, budget]) == EXIT_DISAGREE


def test_run_report_agreement():
    assert RunReport("x", 1, 2, 2).agreement is True
    assert RunReport("x", 1, 2, 1).agreement is False
    assert RunReport("x", 1, 2).agreement is None
    rec = RunReport("x", 1, 2, timing_ms=3.0).record()
    assert "timing_ms" not in rec and "agreement" not in rec


def test_worker_pool_order_is_canonical():
    cases = build_cases("paths", DEFAULT_CAPS, max_n=6, max_t=3)
    serial = [r.record() for r in run_cases(cases, DEFAULT_CAPS)]
    pooled = [r.record() for r in run_cases(list(reversed(cases)), DEFAULT_CAPS, workers=3)]
    assert serial == pooled


def test_deterministic_output(capsys):
    argv = ("verify", "paths", "--max-n", "5", "--max-t", "3", "--json")
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second


def test_config_file_and_env(tmp_path):
    cfg = tmp_path / "caps.conf"
    cfg.write_text("# caps\nmax_lattice = 1_000\nmax-faces=77\n")
    caps = load_caps(cfg, environ={"EDGEDEPTH_MAX_FACES": "88"}, max_generators=5)
    assert caps == Caps(max_generators=5, max_lattice=1000, max_faces=88)
    with pytest.raises(InvalidArgument):
        load_caps(None, environ={"EDGEDEPTH_MAX_LATTICE": "lots"})
    bad = tmp_path / "bad.conf"
    bad.write_text("colour = blue\n")
    with pytest.raises(InvalidArgument):
        load_caps(bad, environ={})


def test_flag_overrides_config(capsys, tmp_path):
    cfg = tmp_path / "caps.conf"
    cfg.write_text("max_generators = 2\n")
    assert run(capsys, "oracle", "--graph", "path:4", "--config", str(cfg))[0] == EXIT_BUDGET
    assert run(capsys, "oracle", "--graph", "path:4", "--config", str(cfg),
               "--max-generators", "10")[0] == EXIT_OK


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "edgedepth", "formula", "--graph", "cycle:9",
                          "--power", "4"], capture_output=True, text=True, check=True)
    assert out.stdout.splitlines()[1].split("\t")[2] == "2"
