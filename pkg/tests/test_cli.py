from __future__ import annotations

import pytest

from crcodes import reproduce
from crcodes.cli import main
from crcodes.cr_engine import Code, verify_cr
from crcodes.graph_core import syndrome_graph
from crcodes.data import load_matrix

from goldens import GOLDEN_DIR


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_build_and_srg(capsys):
    rc, out, _ = run(capsys, "build", "--matrix", "srg81_30_H1")
    assert rc == 0 and "vertices: 81  degree: 30" in out and "SRG(81,30,9,12)" in out
    rc, out, _ = run(capsys, "srg", "--matrix", "srg81_30_H1", "--complement")
    assert rc == 0 and "SRG(81,50,31,30)" in out
    rc, out, _ = run(capsys, "srg", "--matrix", "cayley81_n7")
    assert rc == 2 and "not strongly regular" in out


def test_spectrum(capsys):
    rc, out, _ = run(capsys, "spectrum", "--hamming", "3", "3")
    assert rc == 0
    for part in ("6", "3", "0", "-3"):
        assert part in out


def test_covering(capsys):
    rc, out, _ = run(capsys, "covering", "--matrix", "cayley81_n7")
    assert rc == 0
    rc, out, _ = run(capsys, "covering", "--matrix", "cayley81_n19", "--sampled", "--samples", "2000")
    assert rc == 0 and "sampled" in out


def test_verify_golden(capsys):
    rc, out, _ = run(capsys, "verify", "--matrix", "cayley81_n11", "--code", str(GOLDEN_DIR / "cayley81_n11_21_4_2_21.C"), "--components")
    assert rc == 0 and "{21,4;2,21}" in out and "sizes: (6, 63, 12)" in out and "induced components" in out


def test_verify_failures(capsys, tmp_path):
    f = tmp_path / "bad.C"
    f.write_text("0000\n0001\n")
    rc, out, _ = run(capsys, "verify", "--matrix", "cayley81_n7", "--code", str(f))
    assert rc == 2 and "not completely regular" in out
    empty = tmp_path / "empty.C"
    empty.write_text("")
    assert run(capsys, "verify", "--matrix", "cayley81_n7", "--code", str(empty))[0] == 1
    assert run(capsys, "verify", "--matrix", "nonexistent", "--code", str(f))[0] == 1


def test_search_exact_writes_a_cr_code(capsys, tmp_path):
    out_file = tmp_path / "c.C"
    rc, out, err = run(capsys, "search", "--matrix", "cayley81_n7", "--array", "{10;8}", "--out", str(out_file))
    assert rc == 0 and "found" in err and "{10;8}" in out
    g = syndrome_graph(load_matrix("cayley81_n7"))
    assert str(verify_cr(g, Code.from_text(g, out_file.read_text())).array) == "{10;8}"


def test_search_modes_and_exit_codes(capsys):
    rc, out, _ = run(capsys, "search", "--matrix", "cayley81_n7", "--quotient", "((4,10),(8,6))", "--milp")
    assert rc == 0
    rc, out, _ = run(capsys, "search", "--matrix", "cayley81_n15_a", "--array", "{28;8}", "--heuristic", "--seed", "1")
    assert rc == 0
    rc, out, _ = run(capsys, "search", "--matrix", "cayley81_n7", "--array", "{10;8}", "--independent")
    assert rc == 2 and "no such code" in out
    rc, out, _ = run(capsys, "search", "--matrix", "cayley81_n7", "--array", "{10;8}", "--budget", "3")
    assert rc == 3 and "budget exceeded" in out
    assert run(capsys, "search", "--matrix", "cayley81_n7")[0] == 1
    assert run(capsys, "search", "--matrix", "cayley81_n7", "--array", "{10;8}", "--milp", "--heuristic")[0] == 1


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("CRCODES_BUDGET", "3")
    assert run(capsys, "search", "--matrix", "cayley81_n7", "--array", "{10;8}")[0] == 3
    monkeypatch.setenv("CRCODES_BUDGET", "lots")
    assert run(capsys, "search", "--matrix", "cayley81_n7", "--array", "{10;8}")[0] == 1


def test_feasible(capsys):
    rc, out, err = run(capsys, "feasible", "--degree", "24", "--vertices", "729", "--eigenvalues", "24,6,-3,-12",
                       "--rho-max", "2", "--drg", "{24,22,20;1,2,12}")
    assert rc == 0 and len([a for a in out.split() if "," in a]) == 17
    rc, out, _ = run(capsys, "feasible", "--matrix", "golay11", "--eigenvalue", "-5")
    assert rc == 0
    assert sorted(out.split()) == sorted(f"{{{27 - c};{c}}}" for c in range(5, 14))
    assert run(capsys, "feasible", "--degree", "4")[0] == 1


def test_construct_pipeline(capsys, tmp_path):
    rule = tmp_path / "r.txt"
    rc, out, _ = run(capsys, "construct", "--op", "lift", "--matrix", "cayley81_n7", "--code",
                     str(GOLDEN_DIR / "cayley81_n7_10_8.C"), "--out", str(rule), "--verify")
    assert rc == 0 and "exhaustive" in out and "{10;8}" in out
    rc, out, _ = run(capsys, "construct", "--op", "inflate", "--rule", str(rule), "--verify", "--samples", "2000")
    assert rc == 0 and "{20;16}" in out and "sampled" in out
    rc, out, _ = run(capsys, "construct", "--op", "split", "--rule", str(rule), "--i", "1", "--verify", "--samples", "500")
    assert rc == 0 and "{46;8}" in out
    rc, out, _ = run(capsys, "construct", "--op", "extend", "--rule", str(rule), "--t", "2")
    assert rc == 0 and "extend t=2" in out
    code = tmp_path / "h.C"
    code.write_text("# q=2 k=2\n00\n11\n")
    rc, out, _ = run(capsys, "construct", "--op", "split", "--code", str(code), "--verify")
    assert rc == 0 and "((0,6),(2,4))" in out.replace(" ", "")
    assert run(capsys, "construct", "--op", "split", "--rule", str(rule), "--i", "5")[0] == 1
    assert run(capsys, "construct", "--op", "lift")[0] == 1


def test_classify(capsys, monkeypatch):
    monkeypatch.delenv("CRCODES_HEAVY", raising=False)
    rc, out, err = run(capsys, "classify", "--q", "3", "--k", "4", "--n", "7", "--connected", "--srg")
    assert rc == 0 and "# 19 connected classes" in err and "# 0 strongly regular" in err
    rc, out, err = run(capsys, "classify", "--q", "2", "--k", "3", "--n", "4", "--array", "{3;1}")
    assert rc == 0 and "contain a {3;1}-CR code" in err
    assert run(capsys, "classify", "--q", "3", "--k", "4", "--n", "11", "--connected")[0] == 1
    assert run(capsys, "classify", "--q", "2", "--k", "2", "--n", "9")[0] == 1


def test_fixtures_and_usage(capsys):
    rc, out, _ = run(capsys, "fixtures")
    assert rc == 0 and "cayley81_n7" in out and "golay11" in out
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "--help")[0] == 0


def test_reproduce_command(capsys, monkeypatch):
    rows = [reproduce.Row("{10;8}", 3, 7, "G(cayley81_n7)", "integer program", "found, verified", True)]
    monkeypatch.setattr(reproduce, "compute_rows", lambda *a, **k: rows)
    rc, out, _ = run(capsys, "reproduce", "--quick")
    assert rc == 0 and "6/7 ~ 0.857" in out and "# 1 of 1 rows reproduced" in out
    rows.append(reproduce.Row("{20;16}", 3, 14, "G(x)", "integer program", "not found within budget", False))
    assert run(capsys, "reproduce")[0] == 2
