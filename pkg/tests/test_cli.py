import json
import subprocess
import sys

import pytest

from skewpm.cli import run
from skewpm.matrix_core import format_matrix, new_skew, parse_matrix

APEX_CYCLIC = new_skew(4, [1, 1, 1, 1, -1, 1])
APEX_TRANSITIVE = new_skew(4, [1] * 6)


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else format_matrix(obj))
        return str(p)
    return _write


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_help(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--help"])
    assert exc.value.code == 0
    assert "row-major" in capsys.readouterr().out


def test_no_command(capsys):
    with pytest.raises(SystemExit) as exc:
        run([])
    assert exc.value.code == 1


def test_pm_order(capsys, write):
    code, out, _ = call(capsys, "pm", "--order", "4", write("a.txt", APEX_CYCLIC))
    assert code == 0
    assert json.loads(out)["minors"] == [{"subset": [1, 2, 3, 4], "value": "9"}]


def test_pm_all_human(capsys, write):
    code, out, _ = call(capsys, "pm", "--format", "human", write("a.txt", APEX_CYCLIC))
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 16 and lines[-1] == "[1, 2, 3, 4]: 9"


def test_clans(capsys, write):
    A = new_skew(4, [1, -1, -1, -1, -1, 1])
    code, out, _ = call(capsys, "clans", write("a.txt", A))
    data = json.loads(out)
    assert code == 0
    assert {"subset": [1, 2], "trivial": False} in data


def test_invert(capsys, write):
    code, out, _ = call(capsys, "invert", "--subset", "1,2,3,4", write("a.txt", APEX_CYCLIC))
    assert code == 0 and parse_matrix(out) == -APEX_CYCLIC


def test_invert_bad_subset(capsys, write):
    code, _, err = call(capsys, "invert", "--subset", "1,x", write("a.txt", APEX_CYCLIC))
    assert code == 1 and "bad subset" in err
    code, _, _ = call(capsys, "invert", "--subset", "7", write("a.txt", APEX_CYCLIC))
    assert code == 1


def test_triples(capsys, write):
    code, out, _ = call(capsys, "triples", write("a.txt", APEX_CYCLIC), write("b.txt", APEX_TRANSITIVE))
    data = json.loads(out)
    assert code == 0 and data["status"] == "DIFFER" and data["first_mismatch"] == [2, 3, 4]
    assert data["triples"][-1] == {"triple": [2, 3, 4], "a": "TRIANGLE/CYCLIC", "b": "TRIANGLE/TRANSITIVE"}


def test_triples_different_graphs(capsys, write):
    code, out, _ = call(capsys, "triples", write("a.txt", APEX_CYCLIC),
                        write("b.txt", new_skew(4, [1, 1, 1, 0, 0, 0])))
    assert code == 0 and json.loads(out)["status"] == "DIFFERENT-GRAPHS"


def test_similar(capsys, write):
    code, out, _ = call(capsys, "similar", write("a.txt", APEX_CYCLIC), write("b.txt", -APEX_CYCLIC))
    data = json.loads(out)
    assert code == 0 and data["transposed"] is True


def test_similar_none(capsys, write):
    A = new_skew(4, [1, -1, -1, -1, -1, 1])
    B = new_skew(4, [-1, -1, -1, -1, -1, 1])
    code, out, _ = call(capsys, "similar", write("a.txt", A), write("b.txt", B))
    assert code == 0 and json.loads(out) == "none"


def test_loewy(capsys, write):
    code, out, _ = call(capsys, "loewy", write("a.txt", new_skew(4, [1, -1, -1, -1, -1, 1])))
    assert code == 0
    assert json.loads(out) == {"holds": False, "reason": "rank", "partition": [[1, 2], [3, 4]]}
    code, _, err = call(capsys, "loewy", write("c.txt", new_skew(3, [1, 1, 1])))
    assert code == 1 and "n >= 4" in err


def test_equiv_and_verify(capsys, write, tmp_path):
    a, b = write("a.txt", APEX_CYCLIC), write("b.txt", -APEX_CYCLIC)
    code, out, _ = call(capsys, "equiv", a, b)
    data = json.loads(out)
    assert code == 0 and data["status"] == "EQUIVALENT"
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(data["certificate"]))
    code, out, _ = call(capsys, "verify", a, str(cert), b)
    assert code == 0 and json.loads(out) == {"valid": True}
    code, out, _ = call(capsys, "verify", a, str(cert), a)
    assert code == 0 and json.loads(out)["valid"] is False


def test_equiv_not_equivalent_human_matches_json(capsys, write):
    a, b = write("a.txt", APEX_CYCLIC), write("b.txt", APEX_TRANSITIVE)
    _, out_json, _ = call(capsys, "equiv", a, b)
    code, out_human, _ = call(capsys, "equiv", "--format", "human", a, b)
    data = json.loads(out_json)
    assert code == 0 and data["status"] == "NOT_EQUIVALENT"
    assert out_human.strip() == "NOT_EQUIVALENT subset=[1, 2, 3, 4] minors 9 vs 1"


def test_equiv_undecided_exit(capsys, write):
    A = new_skew(5, [0, 1, 1, 1, 1, 1, 1, 1, 1, 1])
    code, out, _ = call(capsys, "equiv", "--budget", "1", write("a.txt", A), write("b.txt", -A))
    assert code == 2 and json.loads(out)["status"] == "UNDECIDED"


def test_verify_bad_json(capsys, write, tmp_path):
    bad = tmp_path / "cert.json"
    bad.write_text("{not json")
    a = write("a.txt", APEX_CYCLIC)
    code, _, err = call(capsys, "verify", a, str(bad), a)
    assert code == 1 and "not JSON" in err


def test_skew_violation_reported(capsys, write):
    code, _, err = call(capsys, "pm", write("bad.txt", "3\n0 1 0\n-1 0 2\n0 2 0\n"))
    assert code == 1 and "(2,3)" in err.replace(" ", "")


def test_missing_file(capsys, tmp_path):
    code, _, _ = call(capsys, "pm", str(tmp_path / "nope.txt"))
    assert code == 1


def test_dimension_mismatch(capsys, write):
    code, _, err = call(capsys, "equiv", write("a.txt", APEX_CYCLIC), write("b.txt", new_skew(2, [1])))
    assert code == 1 and "mismatch" in err


def test_scan(capsys):
    code, out, _ = call(capsys, "scan", "--n", "4", "--entries", "pm1", "--exhaustive")
    data = json.loads(out)
    assert code == 0 and data["matrices"] == 64 and data["counterexamples"] == []


def test_scan_samples_human(capsys):
    code, out, _ = call(capsys, "scan", "--n", "4", "--samples", "50", "--seed", "2", "--format", "human")
    assert code == 0 and "mode=random" in out and "counterexamples=0" in out


def test_scan_incomplete_exit(capsys):
    code, _, _ = call(capsys, "scan", "--n", "4", "--budget", "2")
    assert code == 2


def test_console_entry_point(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text(format_matrix(APEX_CYCLIC))
    res = subprocess.run([sys.executable, "-m", "skewpm", "pm", "--order", "2", str(p)],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and len(json.loads(res.stdout)["minors"]) == 6


def test_equiv_self_empty_certificate(capsys, write):
    a = write("a.txt", APEX_CYCLIC)
    code, out, _ = call(capsys, "equiv", a, a)
    data = json.loads(out)
    assert code == 0 and data["status"] == "EQUIVALENT" and data["certificate"] == {"steps": []}


def test_malformed_reports_location(capsys, write):
    code, _, err = call(capsys, "pm", write("bad.txt", "2\n0 1\n-1 x\n"))
    assert code == 1 and "line 3, column 4" in err


def test_invert_output_feeds_other_commands(capsys, write):
    _, out, _ = call(capsys, "invert", "--subset", "2,3,4", write("a.txt", APEX_CYCLIC))
    b = write("b.txt", out)
    code, out, _ = call(capsys, "equiv", write("a.txt", APEX_CYCLIC), b)
    assert code == 0 and json.loads(out)["status"] == "EQUIVALENT"
