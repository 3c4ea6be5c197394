import json
import subprocess
import sys

import pytest

from torsoids.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_torsoids_c6(capsys):
    code, out, _ = run(capsys, "torsoids", "corpus:C6")
    d = json.loads(out)
    assert code == 0 and d["schema"] == 1 and d["count"] == 1
    (t,) = d["torsoids"]
    assert t["cyclic"] and len(t["skeleton"]["vertices"]) == 6


def test_verify_ladder(capsys):
    code, out, _ = run(capsys, "verify", "corpus:K4_LADDER")
    d = json.loads(out)["instances"]["K4_LADDER"]
    assert code == 0 and d["ok"]
    assert all(s["violations"] == 0 for s in d["suites"].values())
    for fam in d["preimage_counts"]:
        assert all(g["torsos"] == g["expected"] == 1 for g in fam)


def test_decompose_dc5(capsys):
    code, out, _ = run(capsys, "digraph", "decompose", "corpus:DC5")
    d = json.loads(out)
    assert code == 0 and d["pieces"] == 4
    (m,) = d["multiset"]
    assert m["n"] == 2 and m["multiplicity"] == 4


def test_convert_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "convert", "--to-matching", "corpus:DC5")
    assert code == 0 and out.startswith("g 10\n") and out.count("#! matching") == 5
    f = tmp_path / "c10.txt"
    f.write_text(out)
    code, back, _ = run(capsys, "convert", "--to-digraph", str(f))
    assert code == 0
    assert back.splitlines()[:7] == ["d 5", "#! names 0 1 2 3 4", "0 > 1", "1 > 2", "2 > 3", "3 > 4", "4 > 0"]


def test_convert_separate_matching_file(capsys, tmp_path):
    g = tmp_path / "c6.txt"
    g.write_text("g 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
    m = tmp_path / "m.txt"
    m.write_text("0 1\n2 3\n4 5\n")
    code, out, _ = run(capsys, "convert", "--to-digraph", str(g), "--matching", str(m))
    assert code == 0 and out.startswith("d 3\n")
    m.write_text("0 1\n")
    assert run(capsys, "convert", "--to-digraph", str(g), "--matching", str(m))[0] == 2


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "convert", "--to-matching", "corpus:K4")[0] == 1
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "torsoids")[0] == 1
    assert run(capsys, "torsoids", "corpus:NOPE")[0] == 1
    assert run(capsys, "torsoids", str(tmp_path / "missing.txt"))[0] == 1
    assert run(capsys, "digraph", "decompose", "corpus:C6")[0] == 1
    p4 = tmp_path / "p4.txt"
    p4.write_text("g 4\n0 1\n1 2\n2 3\n")
    code, _, err = run(capsys, "torsoids", str(p4))
    assert code == 2 and "matching covered" in err
    assert run(capsys, "convert", "--to-digraph", "corpus:K4")[0] == 1
    bad = tmp_path / "k4.txt"
    bad.write_text("g 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n#! matching 0 1\n#! matching 2 3\n")
    assert run(capsys, "convert", "--to-digraph", str(bad))[0] == 2
    assert run(capsys, "torsoids", "corpus:C10", "--bound", "8")[0] == 2


def test_tight_cuts_and_info(capsys):
    code, out, _ = run(capsys, "tight-cuts", "--nontrivial", "corpus:K4_LADDER")
    d = json.loads(out)
    assert code == 0 and d["count"] == 2
    code, out, _ = run(capsys, "tight-cuts", "--family", "--nontrivial", "corpus:C6")
    assert json.loads(out)["count"] == 1
    code, out, _ = run(capsys, "tight-cuts", "--cut-file", "corpus:C6")
    assert out.count("X:") == 9
    code, out, _ = run(capsys, "info", "corpus:PETERSEN")
    d = json.loads(out)
    assert d["matching_covered"] and d["perfect_matchings"] == 6 and d["nontrivial_tight_cuts"] == 0
    code, out, _ = run(capsys, "info", "--dot", "corpus:C4")
    assert out.startswith("graph")


def test_torsos_and_classify(capsys, tmp_path):
    code, out, _ = run(capsys, "torsos", "corpus:C8", "--seed", "3")
    d = json.loads(out)
    assert code == 0 and len(d["torsos"]) == 3 and all(t["c4"] for t in d["torsos"])
    p = tmp_path / "p.txt"
    p.write_text("P: u p1 p2\nP: v\nP: w\nP: x\n")
    code, out, _ = run(capsys, "classify", "corpus:K4_LADDER", "--partition", str(p))
    d = json.loads(out)
    assert code == 0 and d["kind"] == "brick" and d["torsoid_inducing"]
    assert d["induced_torsoid"]["skeleton"]["edges"][0]["eps"] == ["p1", "p2"]
    c = tmp_path / "c.txt"
    c.write_text("X: p1\n")
    code, out, _ = run(capsys, "classify", "corpus:K4_LADDER", "--cuts", str(c))
    kinds = [r["kind"] for r in json.loads(out)["sets"][0]["residence"]]
    assert "edge" in kinds
    p.write_text("P: u p1\nP: v p2\nP: w\nP: x\n")
    assert run(capsys, "classify", "corpus:K4_LADDER", "--partition", str(p))[0] == 2


def test_digraph_subcommands(capsys):
    code, out, _ = run(capsys, "digraph", "bijection", "corpus:DC5")
    d = json.loads(out)
    assert code == 0 and d["ok"] and d["tight_sets"] == d["separations"] == 50
    code, out, _ = run(capsys, "digraph", "separations", "corpus:DDC5")
    assert json.loads(out)["count"] == 20


def test_stdin_input(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("g 4\n0 1\n1 2\n2 3\n3 0\n"))
    code, out, _ = run(capsys, "torsoids", "-")
    assert code == 0 and json.loads(out)["count"] == 1


def test_verify_all_corpus(capsys):
    code, out, _ = run(capsys, "verify")
    d = json.loads(out)
    assert code == 0 and d["ok"] and len(d["instances"]) == 16


@pytest.mark.parametrize("argv", [["torsoids", "corpus:K4_LADDER"], ["digraph", "decompose", "corpus:DC5", "--seed", "4"],
                                  ["torsos", "--dot", "corpus:C10"], ["verify", "corpus:C8", "corpus:DC3"]])
def test_byte_identical_across_processes(argv):
    outs = [subprocess.run([sys.executable, "-m", "torsoids", *argv], capture_output=True, check=True).stdout
            for _ in range(2)]
    assert outs[0] == outs[1] and outs[0]
