"""End-to-end runs of the command surface; reports go to stdout as JSON."""
import json

from constadesign.main import run


def _run(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


def test_tower(capsys):
    code, out = _run(capsys, "tower", "--q", "9")
    report = json.loads(out)
    assert code == 0
    assert report["schema"] == 1
    assert report["tower"]["p"] == 3 and report["tower"]["m"] == 2
    assert report["level_sizes"]["F_q2"] == 81


def test_build_with_dual(capsys):
    code, out = _run(capsys, "build", "--q", "3", "--family", "B", "--r", "2", "--dual")
    report = json.loads(out)
    assert code == 0
    assert report["code"]["name"] == "C(1,7)"
    assert report["code"]["k"] == 4
    assert report["dual"]["k"] == 6
    assert report["dual"]["is_dual"]


def test_inadmissible_r_exits_2(capsys):
    code, out = _run(capsys, "build", "--q", "3", "--family", "A", "--r", "2")
    assert code == 2
    assert json.loads(out)["error"] == "InvalidR"


def test_missing_family_exits_2(capsys):
    code, out = _run(capsys, "build", "--q", "3")
    assert code == 2
    assert json.loads(out)["error"] == "UsageError"


def test_p_and_m_instead_of_q(capsys):
    code, out = _run(capsys, "tower", "--p", "2", "--m", "2", "--r", "5")
    report = json.loads(out)
    assert code == 0
    assert report["tower"]["q"] == 4
    assert report["lambda_log"] is not None


def test_analytic_wdist_q13(capsys):
    code, out = _run(capsys, "wdist", "--q", "13", "--family", "B", "--r", "4", "--analytic")
    report = json.loads(out)
    assert code == 0
    assert report["distribution"]["nonzero"] == [[156, 371280], [168, 376477920], [169, 62403600],
                                                 [170, 376477920]]
    assert report["dual_distance"] == 4
    assert report["moments"]["holds"]


def test_wdist_csv(capsys, tmp_path):
    out_file = tmp_path / "wdist.csv"
    code, out = _run(capsys, "wdist", "--q", "3", "--family", "A", "--format", "csv", "--out", str(out_file))
    assert code == 0
    assert out == ""
    assert out_file.read_text().splitlines() == ["weight,count", "0,1", "6,240", "8,2160", "9,2000", "10,2160"]


def test_designs(capsys):
    code, out = _run(capsys, "designs", "--q", "3", "--family", "B")
    report = json.loads(out)
    assert code == 0
    assert report["primal"]["eta"] == 5 and report["primal"]["b"] == 30
    assert report["dual"]["eta"] == 1
    assert report["steiner_complement"]
    assert report["assmus_mattson"]["holds"]


def test_subfield(capsys):
    code, out = _run(capsys, "subfield", "--q", "3", "--family", "B")
    report = json.loads(out)
    assert code == 0
    assert report["subcode"]["k_sub"] == 4
    assert report["ovoid"]["matches"]
    assert report["delsarte_agrees"]


def test_equations(capsys):
    code, out = _run(capsys, "equations", "--q", "3", "--k", "2")
    report = json.loads(out)
    assert code == 0
    assert report["conjecture"]["max_count"] == 4
    assert all(p["holds"] for p in report["preimages"])


def test_eaqecc_and_lrc(capsys):
    code, out = _run(capsys, "eaqecc", "--q", "3")
    pairs = json.loads(out)["pairs"]
    assert code == 0
    assert len(pairs) == 8
    code, out = _run(capsys, "lrc", "--q", "3")
    assert code == 0
    assert [c["locality"] for c in json.loads(out)["codes"]] == [5, 5]


def test_verify_all(capsys):
    code, out = _run(capsys, "verify-all", "--q", "3")
    report = json.loads(out)
    assert code == 0
    assert report["passed"]
    assert report["first_failure"] is None


def test_budget_exceeded_exits_2(capsys):
    code, out = _run(capsys, "wdist", "--q", "3", "--family", "A", "--budget", "100")
    assert code == 2
    assert json.loads(out)["error"] == "BudgetExceeded"
