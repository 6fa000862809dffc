import json
import subprocess
import sys

import pytest

from bruhat_nbc import verify
from bruhat_nbc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_scan_a1(capsys):
    code, out, _ = run(capsys, "scan", "--type", "A", "--rank", "1")
    recs = records(out)
    assert code == 0
    assert len(recs) == 2 and all(r["star"] for r in recs)
    assert "seconds" not in recs[0]


def test_scan_a3_census(capsys):
    code, out, _ = run(capsys, "scan", "--type", "A3")
    recs = records(out)
    assert code == 0 and len(recs) == 24
    assert [r["form"] for r in recs if not r["star"]] == ["4231"]
    for r in recs:
        assert r["region_count"] == r["nbc_count"]
        assert r["right_hull"] == r["avoids_patterns"] == r["star"]


def test_scan_byte_stable_across_jobs(capsys, tmp_path):
    one, three = tmp_path / "one.jsonl", tmp_path / "three.jsonl"
    assert main(["scan", "--type", "B3", "--out", str(one)]) == 0
    assert main(["scan", "--type", "B3", "--jobs", "3", "--out", str(three)]) == 0
    assert one.read_bytes() == three.read_bytes()
    assert len(one.read_text().splitlines()) == 48


def test_scan_dihedral_and_timing(capsys):
    code, out, _ = run(capsys, "scan", "--type", "I2", "--m", "5", "--timing")
    recs = records(out)
    assert code == 0 and len(recs) == 10
    assert all("seconds" in r for r in recs)
    assert recs[0]["group"] == "I2(5)"


def test_element_report(capsys):
    code, out, _ = run(capsys, "element", "--type", "A3", "--perm", "3412", "--rhombi",
                       "--phi", "--json", "--word-strategy", "all")
    rep = json.loads(out)
    assert code == 0
    assert rep["interval_size"] == rep["nbc_count"] == rep["region_count"] == 14
    assert rep["length"] == 4 and rep["abs_length"] == rep["abs_length_carter"] == 2
    assert rep["star"] and not rep["regular_bg"] and rep["non_covering_edges"] == 2
    assert ["2314", "1324", "1342"] in rep["broken_rhombi"]
    assert ["1432", "1234", "2134"] in rep["broken_rhombi"]
    assert len(rep["nbc"]["phi"]) == 14
    assert len({row["image"] for row in rep["nbc"]["phi"]}) == 14
    assert {r["nbc_count"] for r in rep["nbc_by_word"]} == {14}


def test_element_text_and_word_input(capsys):
    code, out, _ = run(capsys, "element", "--type", "H3", "--word", "1,2,1,3")
    assert code == 0
    assert "interval_size" in out
    code, out, _ = run(capsys, "element", "--type", "B2", "--word", "e", "--json")
    assert json.loads(out)["form"] == "e"


def test_graph_dot(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "--type", "A2", "--perm", "321")
    assert code == 0
    assert out.count("[label=") == 6
    assert out.count("style=dashed") == 1  # e -> w0 in A2
    path = tmp_path / "g.dot"
    assert main(["graph", "--type", "A3", "--perm", "3412", "--dot", str(path)]) == 0
    text = path.read_text()
    assert text.startswith("digraph") and text.count("style=dashed") == 2


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "meet", "--type", "B2",
                       "--suite", "worked-example")
    assert code == 0
    assert out.count("PASS") == 2 and "OK" in out


def test_verify_census(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "census")
    assert code == 0 and "23/24" in out and "4231" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(W):
        return verify.SuiteResult("meet", W.name, checked=1, violations=["forced"])

    monkeypatch.setitem(verify.GROUP_SUITES, "meet", broken)
    code, out, _ = run(capsys, "verify", "--suite", "meet", "--type", "A2")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("argv", [
    ["scan", "--type", "E6"],                       # over the cap
    ["scan", "--type", "Q", "--rank", "3"],         # unknown type
    ["element", "--type", "A3", "--perm", "12345"],  # wrong size
    ["element", "--type", "A3", "--word", "1,9"],
    ["element", "--type", "A3", "--index", "99"],
    ["verify", "--suite", "nonsense"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scan"])
    assert exc.value.code == 2


def test_report(capsys, tmp_path):
    code, out, _ = run(capsys, "report", "--type", "A3", "--out-dir", str(tmp_path),
                       "--perm", "3412")
    assert code == 0
    names = {p.name for p in tmp_path.iterdir()}
    assert {"scan_A3.csv", "scan_A3.jsonl", "census_A3.png",
            "bruhat_graph_A3_3412.png", "bruhat_graph_A3_3412.dot"} <= names
    assert (tmp_path / "census_A3.png").read_bytes()[:4] == b"\x89PNG"
    assert len((tmp_path / "scan_A3.csv").read_text().splitlines()) == 25


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "bruhat_nbc", "scan", "--type", "A2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert len(res.stdout.splitlines()) == 6
