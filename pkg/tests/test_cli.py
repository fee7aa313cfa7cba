import io
import json
import subprocess
import sys

import pytest

from ribbonyd.cli import main
from ribbonyd.data import GROUPS, builtin
from ribbonyd.hopf import group_algebra
from ribbonyd.io import datum_to_json, hopf_to_json


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def s3_file(tmp_path):
    p = tmp_path / "s3.json"
    p.write_text(json.dumps(hopf_to_json(group_algebra(GROUPS["s3"]))))
    return str(p)


@pytest.fixture
def broken_file(tmp_path):
    obj = hopf_to_json(group_algebra(GROUPS["s3"]))
    # redirect one product: e2 e3 now lands on the wrong basis vector
    for row in obj["mul"]:
        if row[0] == 2 and row[1] == 3:
            row[2] = (row[2] + 1) % 6
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(obj))
    return str(p)


def test_check_hopf_file(s3_file):
    code, out, _ = run("check", "hopf", s3_file)
    assert code == 0
    assert "e12 associativity: PASS" in out and "e16 antipode left: PASS" in out
    assert "FAIL" not in out


def test_check_hopf_broken(broken_file):
    code, out, _ = run("check", "hopf", broken_file)
    assert code == 1
    assert "e12 associativity: FAIL at basis (" in out


@pytest.mark.parametrize("target,name", [("ribbon", "jones"), ("ribbon", "s3-transpositions"),
                                         ("yd", "s3-all"), ("hopf", "z3")])
def test_check_builtins(target, name):
    code, out, _ = run("check", target, "--builtin", name)
    assert code == 0, out
    assert "FAIL" not in out


def test_check_ribbon_jones_lists_checks():
    _, out, _ = run("check", "ribbon", "--builtin", "jones")
    for label in ("Yang-Baxter: PASS", "e11 ribbon condition c^R = c^L: PASS", "e19", "e20"):
        assert label in out


def test_check_multiple_targets():
    code, out, _ = run("check", "ribbon", "--builtin", "jones", "--builtin", "z3-nontrivial")
    assert code == 0
    assert "== builtin jones ==" in out and "== builtin z3-nontrivial ==" in out


def test_check_direct_ribbon_file(tmp_path):
    p = tmp_path / "d.json"
    p.write_text(json.dumps(datum_to_json(builtin("jones"))))
    assert run("check", "ribbon", str(p))[0] == 0


@pytest.mark.parametrize("argv,expected", [
    (["eval", "--datum", "jones", "--braid", "1 1 1", "--normalize"], "-v^-9 + v^-5 + v^-3 + v^-1"),
    (["eval", "--datum", "s3-transpositions", "--braid", "1 1 1"], "9"),
    (["eval", "--datum", "jones", "--tangle", "cup_l ; cap_r"], "v^-1 + v"),
    (["oracle", "count-homs", "--group", "s3", "--class", "transpositions", "--braid", "1 1 1"], "9"),
    (["oracle", "kauffman", "--braid", "1 1 1"], "-v^-9 + v^-5 + v^-3 + v^-1"),
    (["oracle", "count-homs", "--group", "s3", "--class", "transpositions", "--braid", ""], "3"),
])
def test_documented_outputs(argv, expected):
    code, out, _ = run(*argv)
    assert code == 0
    assert out == expected + "\n"


def test_eval_open_tangle_prints_matrix():
    code, out, _ = run("eval", "--datum", "jones", "--tangle", "id+ cup_l ; x++ id- ; id+ cap_r")
    assert code == 0
    assert out == "[v^3/2, 0]\n[0, v^3/2]\n"


def test_eval_raw_matrix_of_closed():
    code, out, _ = run("eval", "--datum", "jones", "--braid", "1 1 1", "--raw-matrix", "--normalize")
    assert code == 0 and out.startswith("[")


def test_eval_tangle_from_file(tmp_path):
    p = tmp_path / "t.tangle"
    p.write_text("# unknot\ncup_r ;\ncap_l\n")
    assert run("eval", "--datum", "s3-transpositions", "--tangle", "@" + str(p))[1] == "3\n"


def test_uncertified_datum_exit_1(tmp_path):
    obj = datum_to_json(builtin("s3-transpositions"))
    obj["braid"][0][2] = "2"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(obj))
    code, _, err = run("eval", "--datum", str(p), "--braid", "1")
    assert code == 1 and "not certified" in err
    assert run("check", "ribbon", str(p))[0] == 1
    assert run("eval", "--datum", str(p), "--braid", "1", "--unsafe")[0] == 0


@pytest.mark.parametrize("argv", [
    ["eval", "--datum", "jones", "--tangle", "id+ ; bogus"],
    ["eval", "--datum", "jones", "--tangle", "id+ ; cap_l"],
    ["eval", "--datum", "nosuch", "--braid", "1"],
    ["eval", "--datum", "jones", "--braid", "1 x"],
    ["eval", "--datum", "jones"],
    ["check", "hopf", "/nonexistent/file.json"],
    ["check", "hopf", "--builtin", "q8"],
    ["check", "ribbon"],
    ["oracle", "kauffman", "--braid", " ".join(["1"] * 13)],
    ["oracle", "count-homs", "--group", "s3", "--class", "odd", "--braid", "1"],
    ["frobnicate"],
])
def test_input_errors_exit_2(argv):
    code, _, err = run(*argv)
    assert code == 2
    assert err


def test_tangle_error_reports_position():
    _, _, err = run("eval", "--datum", "jones", "--tangle", "id+ ;\n  zz")
    assert "line 2, column 3" in err


def test_batch_with_jobs(tmp_path):
    p = tmp_path / "words.txt"
    p.write_text("1 1 1\n# comment\n1 -2 1 -2\n1 1\n\n-1 -1 -1\n")
    serial = run("eval", "--datum", "jones", "--batch", str(p), "--normalize")
    parallel = run("eval", "--datum", "jones", "--batch", str(p), "--normalize", "--jobs", "2")
    assert serial[0] == parallel[0] == 0
    assert serial[1] == parallel[1]
    lines = serial[1].splitlines()
    assert [ln.split("\t")[0] for ln in lines] == ["1 1 1", "1 -2 1 -2", "1 1", "-1 -1 -1"]
    assert lines[1].split("\t")[1] == "v^-5 + v^5"


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "ribbonyd", "eval", "--datum", "jones", "--braid", "1 -2 1 -2 1", "--normalize"]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(3)]
    assert runs[0] and runs[0] == runs[1] == runs[2]
