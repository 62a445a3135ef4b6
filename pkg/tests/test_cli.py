import json

from gsmon.cli import main
from gsmon.jsonio import dump_json


KERNEL_CI = {
    "monad": "M*",
    "dom": {"name": "A", "elements": ["a0"]},
    "cod": {
        "factors": [
            {"name": "X", "elements": ["x0", "x1"]},
            {"name": "Y", "elements": ["y0", "y1"]},
        ]
    },
    "columns": {"a0": {"entries": {"x0,y0": "1", "x0,y1": "1", "x1,y0": "2", "x1,y1": "2"}}},
}

KERNEL_NOT_CI = {
    "monad": "M*",
    "dom": {"name": "A", "elements": ["a0"]},
    "cod": {
        "factors": [
            {"name": "X", "elements": ["x0", "x1"]},
            {"name": "Y", "elements": ["y0", "y1"]},
        ]
    },
    "columns": {"a0": {"entries": {"x0,y0": "1", "x1,y1": "1"}}},
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_classify_all(capsys):
    code, doc = run_json(capsys, "classify", "--all")
    assert code == 0
    kinds = {c["name"]: c["kind"] for c in doc["checks"]}
    assert kinds["classify[D]"] == "affine"
    assert kinds["classify[M*]"] == "weakly_affine_not_affine"
    assert kinds["classify[M]"] == "not_weakly_affine"
    assert kinds["classify[P*]"] == "affine"
    assert kinds["classify[writer:AND]"] == "not_weakly_affine"
    assert doc["summary"] == "pass"


def test_classify_single_monad(capsys):
    code, doc = run_json(capsys, "classify", "--monad", "M*")
    assert code == 0
    assert doc["checks"][0]["kind"] == "weakly_affine_not_affine"


def test_classify_unknown_monad_exits_2(capsys):
    assert main(["classify", "--monad", "bogus"]) == 2


def test_check_laws(capsys):
    code, doc = run_json(
        capsys, "check", "laws", "--monad", "writer:Z3", "--sizes", "2", "--mode", "exhaustive"
    )
    assert code == 0
    assert doc["checks"][0]["passed"]


def test_check_theorem_m_agreement(capsys):
    code, doc = run_json(
        capsys, "check", "theorem", "--monad", "M", "--mode", "random",
        "--trials", "100", "--seed", "5", "--sizes", "2,2,2",
    )
    assert code == 0  # all three conditions false, but in agreement
    assert "assoc_pullback=False" in doc["checks"][0]["note"]


def test_check_pullback_violation_exits_1(capsys):
    code, doc = run_json(
        capsys, "check", "pullback", "--square", "assoc", "--monad", "M",
        "--sizes", "2,2,2", "--mode", "random", "--trials", "50",
    )
    assert code == 1
    assert doc["summary"] == "fail"


def test_check_pullback_pass(capsys):
    code, doc = run_json(
        capsys, "check", "pullback", "--square", "strong-affine", "--monad", "D",
        "--sizes", "2,2", "--mode", "random", "--trials", "100",
    )
    assert code == 0


def test_check_prop21(capsys):
    code, doc = run_json(capsys, "check", "prop21")
    assert code == 0
    assert doc["checks"][0]["passed"]


def test_check_ci_holds(tmp_path, capsys):
    path = str(tmp_path / "f.json")
    dump_json(KERNEL_CI, path)
    code, doc = run_json(capsys, "check", "ci", "--kernel", path, "--partition", "X|Y")
    assert code == 0
    assert doc["checks"][0]["holds"]


def test_check_ci_fails_with_exit_1(tmp_path, capsys):
    path = str(tmp_path / "f.json")
    dump_json(KERNEL_NOT_CI, path)
    code, doc = run_json(capsys, "check", "ci", "--kernel", path, "--partition", "X|Y")
    assert code == 1
    assert not doc["checks"][0]["holds"]


def test_check_ci_bad_partition_exits_2(tmp_path, capsys):
    path = str(tmp_path / "f.json")
    dump_json(KERNEL_CI, path)
    assert main(["check", "ci", "--kernel", path, "--partition", "X|W"]) == 2


def test_check_ci_missing_file_exits_2(tmp_path):
    assert main(["check", "ci", "--kernel", str(tmp_path / "no.json"), "--partition", "X|Y"]) == 2


def test_report_merges_documents(tmp_path, capsys):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    assert main(["check", "prop21", "--out", a]) == 0
    assert main(["classify", "--monad", "Id", "--out", b]) == 0
    code, doc = run_json(capsys, "report", "--inputs", a, b)
    assert code == 0
    assert len(doc["checks"]) == 2
    assert "warning" not in doc


def test_report_empty_inputs(capsys):
    code, doc = run_json(capsys, "report")
    assert code == 0
    assert doc["checks"] == []


def test_markdown_output(capsys):
    code, out = run(capsys, "classify", "--monad", "D", "--format", "markdown")
    assert code == 0
    assert out.startswith("# gsmon")
    assert "| classify[D] | pass |" in out


def test_seed_env_default(monkeypatch, capsys):
    monkeypatch.setenv("GSMON_SEED", "99")
    code, doc = run_json(
        capsys, "check", "theorem", "--monad", "M*", "--mode", "random",
        "--trials", "50", "--sizes", "2,2,2",
    )
    assert code == 0
    assert doc["config"]["seed"] == 99


def test_seed_env_invalid(monkeypatch, capsys):
    monkeypatch.setenv("GSMON_SEED", "abc")
    assert main(["classify", "--monad", "Id"]) == 2


def test_reports_are_byte_identical(capsys):
    argv = [
        "check", "pullback", "--square", "assoc", "--monad", "M*",
        "--sizes", "2,2,2", "--mode", "random", "--trials", "100", "--seed", "17",
    ]
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second
