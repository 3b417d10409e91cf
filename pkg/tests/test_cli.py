import io
import json

import pytest

from ecpoly.canon import canonical_code
from ecpoly.census import default_golden_path
from ecpoly.cli import run
from ecpoly.graph import complete_graph, cycle_graph, parse_graph6, petersen, to_edgelist, to_graph6


def call(argv, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def g6file(tmp_path):
    path = tmp_path / "in.g6"
    path.write_text(to_graph6(petersen()) + "\n" + to_graph6(cycle_graph(4)) + "\n")
    return str(path)


def test_compute_petersen(g6file):
    code, out, _ = call(["compute", "--in", g6file, "--engine", "dp"])
    assert code == 0
    first, second = out.splitlines()
    assert first.endswith(",2358,1245,445,105,15,1")
    assert first.startswith("rho=5 m=15 coeffs=6,215,1095,")
    assert second == "rho=2 m=4 coeffs=2,4,1"


def test_compute_json_edgelist(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(to_edgelist(complete_graph(4)))
    code, out, _ = call(["compute", "--in", str(path), "--format", "edgelist", "--json", "--engine", "brute"])
    assert code == 0
    assert json.loads(out) == {"m": 6, "rho": 2, "coeffs": [[2, "3"], [3, "16"], [4, "15"], [5, "6"], [6, "1"]]}


def test_engines_give_identical_bytes(g6file):
    outs = {call(["compute", "--in", g6file, "--engine", e])[1] for e in ("brute", "ie", "dp")}
    assert len(outs) == 1


def test_threads_do_not_change_output(g6file, monkeypatch):
    serial = call(["verify", "--in", g6file])[1]
    monkeypatch.setenv("ECP_THREADS", "2")
    assert call(["verify", "--in", g6file])[1] == serial


def test_bad_thread_count(g6file, monkeypatch):
    monkeypatch.setenv("ECP_THREADS", "zero")
    code, _, err = call(["compute", "--in", g6file])
    assert code == 2 and "ECP_THREADS" in err


def test_rhosets(g6file):
    code, out, _ = call(["rhosets", "--in", g6file])
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "# graph 0 rho=5 count=6"
    assert len(lines) == 1 + 6 + 1 + 2
    assert lines[-2:] == ["{1,2} {3,4}", "{1,4} {2,3}"]


def test_census_with_golden():
    code, out, err = call(["census", "--order", "10", "--degree", "3", "--golden", str(default_golden_path())])
    assert code == 0
    assert len(out.splitlines()) == 22
    assert "disputed cell G17 j=7: computed 1095" in err
    assert "contradicts [1101]" in err


def test_census_bad_golden(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text(default_golden_path().read_text().replace("G1,8,195", "G1,8,196"))
    code, _, err = call(["census", "--order", "10", "--golden", str(path)])
    assert code == 1
    assert "nearest G1" in err


def test_census_json():
    code, out, _ = call(["census", "--order", "6", "--json"])
    data = json.loads(out)
    assert code == 0 and len(data["graphs"]) == 2 and len(data["classes"]) == 2


def test_equiv(tmp_path):
    path = tmp_path / "c.g6"
    c4 = cycle_graph(4)
    path.write_text("\n".join(to_graph6(g) for g in [c4, c4.relabel([1, 3, 0, 2]), complete_graph(3)]) + "\n")
    code, out, err = call(["equiv", "--in", str(path)])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("1\trho=2 m=3 coeffs=3,1\t")
    assert "3 graphs, 2 classes" in err


def test_corona_check(tmp_path):
    path = tmp_path / "small.g6"
    path.write_text(to_graph6(complete_graph(3)) + "\n" + to_graph6(cycle_graph(4)) + "\n")
    code, out, err = call(["corona", "--in", str(path), "--i", "2", "--check"])
    assert code == 0
    h = parse_graph6(out.splitlines()[1])
    assert (h.n, h.m) == (12, 12)
    assert err.count("corona identity pass") == 2


def test_corona_check_large(g6file):
    # Petersen with two pendants per vertex has 30 vertices: fine for the
    # frontier DP, beyond the inclusion-exclusion limit
    assert call(["corona", "--in", g6file, "--i", "2", "--check"])[0] == 0
    code, _, err = call(["corona", "--in", g6file, "--i", "2", "--check", "--engine", "ie"])
    assert code == 2 and "n <= 26" in err


def test_corona_bad_i(g6file):
    assert call(["corona", "--in", g6file, "--i", "0"])[0] == 2


def test_verify(g6file):
    code, out, _ = call(["verify", "--in", g6file, "--engine", "ie"])
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    assert all(r["ok"] for r in reports)
    assert reports[0]["derived"]["delta"] == 3


def test_gen_cubic():
    code, out, _ = call(["gen-cubic", "--order", "4"])
    assert code == 0 and out == canonical_code(complete_graph(4)) + "\n"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["compute"],
        ["compute", "--in", "x", "--engine", "fast"],
        ["gen-cubic", "--order", "7"],
        ["compute", "--in", "/nonexistent/file"],
    ],
)
def test_usage_errors(argv):
    assert call(argv)[0] == 2


def test_parse_error(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("B~\n")
    code, out, err = call(["compute", "--in", str(path)])
    assert code == 2 and out == "" and "ecpoly compute" in err
