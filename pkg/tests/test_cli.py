import subprocess
import sys

import pytest

from wedgeops.cli import EXIT_INPUT, EXIT_OK, main
from wedgeops.data import fixture_path
from wedgeops.matio import parse_dense_csv


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_exact_rows(capsys):
    code, out, _ = run(
        capsys, "analyze", str(fixture_path("k3")), str(fixture_path("p3")), str(fixture_path("c4"))
    )
    assert code == EXIT_OK
    assert out.splitlines() == [
        "name,n,m,triangles,m2,omega,Vc,Vt,dom",
        "k3,3,3,1,3,0,3,0,1",
        "p3,3,2,0,1,1,0,3,0",
        "c4,4,4,0,4,4,0,4,0",
    ]


def test_analyze_named_graphs(capsys):
    code, out, _ = run(capsys, "analyze", str(fixture_path("karate")), str(fixture_path("florentine")))
    assert code == EXIT_OK
    assert out.splitlines()[1] == "karate,34,78,45,528,393,32,2,4"
    assert out.splitlines()[2] == "florentine,15,20,3,47,38,7,8,2"


def test_analyze_missing_file_continues(capsys, tmp_path):
    missing = tmp_path / "nope.edgelist"
    code, out, err = run(capsys, "analyze", str(missing), str(fixture_path("k3")))
    assert code == EXIT_INPUT
    assert "nope.edgelist" in err
    assert out.splitlines()[1] == "k3,3,3,1,3,0,3,0,1"  # good input still reported


def test_analyze_out_mirror(capsys, tmp_path):
    code, out, _ = run(capsys, "analyze", "--out", str(tmp_path), str(fixture_path("k3")))
    assert code == EXIT_OK
    assert (tmp_path / "analysis.csv").read_text() == out


def test_contract_default_rows(capsys):
    code, out, _ = run(capsys, "contract", str(fixture_path("k3")), str(fixture_path("karate")))
    assert code == EXIT_OK
    assert out.splitlines() == [
        "name,blocks,egoblocks,TR_singletons,B_edges,B_internal,ratio",
        "k3,1,1,0,0,3,1",
        "karate,4,4,0,28,50,0.126282",
    ]


def test_contract_explicit_partition(capsys, tmp_path):
    pfile = tmp_path / "c4.blocks"
    pfile.write_text("1 3\n2 4\n")
    code, out, _ = run(
        capsys, "contract", "--partition", str(pfile), str(fixture_path("c4"))
    )
    assert code == EXIT_OK
    assert out.splitlines()[1] == "c4,2,0,0,4,0,1"


def test_contract_partition_needs_single_input(capsys, tmp_path):
    pfile = tmp_path / "p"
    pfile.write_text("1 2 3 4\n")
    code, _, err = run(
        capsys, "contract", "--partition", str(pfile),
        str(fixture_path("c4")), str(fixture_path("k3")),
    )
    assert code == EXIT_INPUT
    assert "exactly one input" in err


def test_contract_bad_partition_file(capsys, tmp_path):
    pfile = tmp_path / "p"
    pfile.write_text("1 99\n2 3 4\n")
    code, _, err = run(capsys, "contract", "--partition", str(pfile), str(fixture_path("c4")))
    assert code == EXIT_INPUT
    assert "unknown vertex label" in err


def test_contract_emit_matrices(capsys, tmp_path):
    code, _, _ = run(
        capsys, "contract", "--emit-matrices", "--out", str(tmp_path), str(fixture_path("c4"))
    )
    assert code == EXIT_OK
    for suffix in ("B", "M", "overcount"):
        assert (tmp_path / f"c4.{suffix}.csv").exists()
    b = parse_dense_csv((tmp_path / "c4.B.csv").read_text())
    # every c4 vertex is a traversing singleton, so B is the adjacency matrix
    assert b.tolist() == [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]


def test_ecdf_simple_curves(capsys):
    code, out, _ = run(capsys, "ecdf", str(fixture_path("k3")), str(fixture_path("p3")))
    assert code == EXIT_OK
    assert out.splitlines() == ["graph,x,F", "k3,1,1", "p3,0,1"]


def test_ecdf_monotone(capsys):
    code, out, _ = run(capsys, "ecdf", str(fixture_path("karate")))
    assert code == EXIT_OK
    rows = [line.split(",") for line in out.splitlines()[1:]]
    xs = [float(r[1]) for r in rows]
    fs = [float(r[2]) for r in rows]
    assert xs == sorted(xs) and fs == sorted(fs)
    assert fs[-1] == 1.0
    assert all(0.0 <= x <= 1.0 for x in xs)


def test_ecdf_svg(capsys, tmp_path):
    code, out, _ = run(capsys, "ecdf", "--out", str(tmp_path), str(fixture_path("karate")))
    assert code == EXIT_OK
    assert (tmp_path / "ecdf.csv").read_text() == out
    svg = (tmp_path / "ecdf.svg").read_text()
    assert svg.startswith("<svg") and "polyline" in svg and "karate" in svg


def test_verify_command(capsys):
    code, out, err = run(
        capsys, "verify", "--seed", "1",
        str(fixture_path("k3")), str(fixture_path("c4")), str(fixture_path("florentine")),
    )
    assert code == EXIT_OK
    assert "FAIL" not in out
    assert out.count("PASS") >= 20
    assert "checks passed" in err


def test_verify_without_inputs(capsys):
    code, out, err = run(capsys, "verify", "--seed", "3")
    assert code == EXIT_OK
    assert "FAIL" not in out
    assert "checks passed" in err


def test_verify_missing_input(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "ghost.edgelist"))
    assert code == EXIT_INPUT
    assert "ghost" in err


def test_outputs_byte_identical_across_runs(capsys):
    argv = ("analyze", str(fixture_path("karate")), str(fixture_path("florentine")))
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2
    argv = ("verify", "--seed", "9")
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wedgeops.cli", "analyze", str(fixture_path("k3"))],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "k3,3,3,1,3,0,3,0,1"


def test_unknown_command_rejected():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
