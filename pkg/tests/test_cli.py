import json
import shutil
import subprocess
import sys

import pytest

from planarpalf import catalog, cli, kirby
from planarpalf.cli import Report, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def data_copy(tmp_path):
    dst = tmp_path / "data"
    shutil.copytree(catalog.default_data_dir(), dst)
    return dst


def test_invariants_of_reduced_a(capsys):
    code, out, _ = run(capsys, "invariants", "kirby", "catalog:A.reduced", "--json")
    assert code == 0
    data = json.loads(out)["invariants"]
    assert data["parity"] == "even" and data["det"] == 15 and data["gram"] == [[-8, 1], [1, -2]]


def test_invariants_of_w12(capsys):
    code, out, _ = run(capsys, "invariants", "palf", "catalog:W(1,2)")
    assert code == 0
    assert "chi: 2" in out and "b2: 1" in out and "monodromy: t_a5 t_a4 t_a3 t_a2 t_a1" in out


@pytest.mark.parametrize("ref", ["catalog:A", "catalog:B.kirby", "catalog:W(2,3).kirby", "catalog:W(2,3).reduced", "catalog:A.palf"])
def test_kirby_catalog_refs(capsys, ref):
    code, out, _ = run(capsys, "invariants", "kirby", ref)
    assert code == 0 and "H1: 0" in out


def test_palf_ref_to_a_diagram_is_rejected(capsys):
    code, _, err = run(capsys, "invariants", "palf", "catalog:A.kirby")
    assert code == 1 and "not a PALF" in err


def test_unknown_catalog_ref(capsys):
    assert run(capsys, "invariants", "palf", "catalog:C")[0] == 1


def test_malformed_file(capsys, tmp_path):
    bad = tmp_path / "bad.palf"
    bad.write_text("holes 4\ncycle {}\n")
    code, _, err = run(capsys, "invariants", "palf", str(bad))
    assert code == 1
    assert "line 2, column 7" in err and "empty curve" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "invariants", "palf", str(tmp_path / "none.palf"))[0] == 1


def test_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "verify-theorem1", "--m", "1")[0] == 1


def test_run_script_on_a_and_b(capsys):
    for name, gram in (("A", [[-8, 1], [1, -2]]), ("B", [[-8, -3], [-3, -3]])):
        code, out, _ = run(capsys, "run-script", f"catalog:{name}", f"catalog:reduce_{name}", "--json", "--trace")
        assert code == 0
        data = json.loads(out)["invariants"]
        assert data["gram"] == gram
        assert data["congruent_to_start"] == "yes"
        assert len(data["trace"]) >= 1


def test_run_script_text_output_is_a_diagram(capsys):
    code, out, _ = run(capsys, "run-script", "catalog:A", "catalog:reduce_A")
    assert code == 0
    assert out.split("final diagram:\n")[1] == "dotted 0\nhandle f=-8\nhandle f=-2\nL -8 1\nL 1 -2\n"


def test_run_script_precondition_failure(capsys, tmp_path):
    (tmp_path / "d.kirby").write_text("dotted 1\nhandle f=0\nL 0\nN 2\n")
    (tmp_path / "s.script").write_text("cancel 1 with 1\n")
    code, _, err = run(capsys, "run-script", str(tmp_path / "d.kirby"), str(tmp_path / "s.script"))
    assert code == 2 and "step 1" in err


def test_run_script_invariant_violation(capsys, monkeypatch):
    real = kirby.slide

    def bad(dgm, i, j, sign):
        out = real(dgm, i, j, sign)
        N = [list(r) for r in out.N]
        N[i][0] += 1
        return kirby.KirbyDiagram(out.dotted, out.L, N, out.tags)

    monkeypatch.setattr(kirby, "slide", bad)
    assert run(capsys, "run-script", "catalog:A", "catalog:reduce_A")[0] == 3


def test_verify_theorem1(capsys):
    code, out, _ = run(capsys, "verify-theorem1", "--m", "1", "--n", "2")
    assert code == 0
    code, out, _ = run(capsys, "verify-theorem1", "--m", "3", "--n", "4", "--json")
    assert code == 0
    rep = Report.from_json(out)
    assert rep.passed and rep.invariants["cycles"] == 11
    assert run(capsys, "verify-theorem1", "--m", "1", "--n", "1")[0] == 1


def test_verify_theorem2(capsys):
    code, out, _ = run(capsys, "verify-theorem2", "--json")
    assert code == 0
    items = json.loads(out)
    assert len(items) == 6 and all(i["passed"] for i in items)
    for c in (c for i in items for c in i["comparisons"]):
        assert c["source"] in ("claim", "derived")


def test_verify_theorem2_fault_injection(capsys, data_copy):
    path = data_copy / "B.kirby"
    path.write_text(path.read_text().replace("handle f=-2", "handle f=-3").replace("L 0 0 -2", "L 0 0 -3"))
    code, out, _ = run(capsys, "verify-theorem2", "--json", "--data-dir", str(data_copy))
    assert code == 3
    items = json.loads(out)
    assert items[4]["object"].startswith("item (5)") and not items[4]["passed"]


def test_verify_theorem2_survives_unreadable_data(capsys, data_copy):
    (data_copy / "B.palf").write_text("holes 4\ncycle {}\n")
    code, out, _ = run(capsys, "verify-theorem2", "--data-dir", str(data_copy))
    assert code == 3 and "FAIL error" in out


def test_report_json_round_trip(capsys):
    for rep in cli.theorem2_reports() + [cli.theorem1_report(2, 3)]:
        again = Report.from_json(rep.to_json())
        assert again == rep
        assert again.to_json() == rep.to_json()


def test_selftest_is_reproducible(capsys):
    first = run(capsys, "selftest-relations", "--seed", "42", "--cases", "30", "--json")
    second = run(capsys, "selftest-relations", "--seed", "42", "--cases", "30", "--json")
    assert first[0] == 0 and first == second


def test_search_command(capsys, tmp_path):
    c = tmp_path / "small.constraints"
    c.write_text("holes 2\ncycles 3\nh1 trivial\nb2 1\nform -3\n")
    code, out, _ = run(capsys, "search", "--constraints", str(c))
    assert code == 0
    assert "holes 2\ncycle {1}\ncycle {2}\ncycle {1,2}\n" in out
    code, out, _ = run(capsys, "search", "--constraints", str(c), "--json")
    assert json.loads(out) == [{"holes": 2, "cycles": [[1], [2], [1, 2]]}]


def test_validate_command(capsys, data_copy):
    assert run(capsys, "validate")[0] == 0
    (data_copy / "A.palf").write_text("holes 4\ncycle {}\n")
    code, out, _ = run(capsys, "validate", "--data-dir", str(data_copy))
    assert code == 3 and "A.palf" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "planarpalf", "invariants", "kirby", "catalog:B.reduced"], capture_output=True, text=True)
    assert res.returncode == 0 and "parity: odd" in res.stdout
