import json
import subprocess
import sys

import pytest

from specex import spectral
from specex.cli import RunConfig, UsageError, execute, main
from specex.graphcore import graph6_decode, is_isomorphic, path_graph, turan_union


@pytest.fixture(autouse=True)
def restore_spectral_globals():
    tol, cap = spectral.RESIDUAL_TOL, spectral.ITERATION_CAP
    yield
    spectral.RESIDUAL_TOL, spectral.ITERATION_CAP = tol, cap


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_verify_floor_reports_turan_witness(capsys):
    status, out, _ = run(capsys, "verify", "floor", "--n", "6", "--alpha", "3", "--jobs", "1")
    assert status == 0
    doc = json.loads(out)
    assert doc["tool"] == "specex" and doc["config"]["check"] == "floor"
    (rep,) = doc["results"]
    assert rep["verdict"] == "pass"
    assert is_isomorphic(graph6_decode(rep["witnesses"][0]), turan_union(6, 3))


def test_search_reports_path(capsys):
    status, out, _ = run(capsys, "search", "--n", "6", "--alpha", "3", "--objective", "min", "--family", "g")
    assert status == 0
    (rep,) = json.loads(out)["results"]
    assert rep["kind"] == "extremal" and rep["unique"]
    assert is_isomorphic(graph6_decode(rep["attainers"][0]), path_graph(6))


def test_spectral_on_triangle(capsys):
    status, out, _ = run(capsys, "spectral", "Bw")
    assert status == 0
    (rec,) = json.loads(out)["results"]
    assert rec["lambda"] == pytest.approx(2.0, abs=1e-10)
    assert rec["char_poly"] == [1, 0, -3, -2]


def test_spectral_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("Bw\nA_\n"))
    status, out, _ = run(capsys, "spectral", "--format", "csv")
    assert status == 0
    assert out.splitlines()[0] == "graph6,lambda,residual,char_poly"
    assert len(out.splitlines()) == 3


def test_construct_and_enumerate_emit_graph6(capsys):
    status, out, _ = run(capsys, "construct", "--family", "path", "--n", "6", "--alpha", "3")
    assert status == 0 and is_isomorphic(graph6_decode(out.strip()), path_graph(6))
    status, out, _ = run(capsys, "enumerate", "--n", "5", "--connected")
    assert status == 0 and len(out.split()) == 21
    status, out, _ = run(capsys, "enumerate", "--n", "6", "--alpha", "3", "--family", "t")
    assert len(out.split()) == 2


def test_violations_give_exit_two(capsys, monkeypatch):
    from specex.extremal import checks

    monkeypatch.setattr(checks, "clique_path_bound", lambda n, alpha: 0.0)
    status, out, _ = run(capsys, "verify", "l1", "--n", "6", "--alpha", "3")
    assert status == 2
    assert json.loads(out)["results"][0]["verdict"] == "fail"


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["spectral", "Bw", "--tol", "0.5"],
    ["spectral", "Bw", "--tol", "0"],
    ["spectral", "!!"],
    ["verify", "nothing"],
    ["verify", "floor", "--n", "6"],
    ["enumerate", "--n", "9", "--max-n", "8"],
    ["search", "--n", "4", "--alpha", "2", "--objective", "min"],
])
def test_usage_errors_exit_one(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("SPECEX_MAX_N", "4")
    status, _, err = run(capsys, "enumerate", "--n", "5")
    assert status == 1 and "cap" in err.lower()


def test_tolerance_is_applied():
    cfg = RunConfig(command="spectral", graphs=["Bw"], tol=1e-6, iteration_cap=500)
    execute(cfg)
    assert spectral.RESIDUAL_TOL == 1e-6 and spectral.ITERATION_CAP == 500


def test_config_validation():
    with pytest.raises(UsageError):
        RunConfig(command="spectral", jobs=0).validate()
    with pytest.raises(UsageError):
        RunConfig(command="construct", n=4).validate()


def test_output_file_and_byte_identical_reruns(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert main(["verify", "l5", "--output", str(p), "--jobs", "2"]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert capsys.readouterr().out == ""


def test_csv_and_graph6_report_formats(capsys):
    status, out, _ = run(capsys, "verify", "z", "--n", "6", "--alpha", "3", "--format", "csv")
    assert status == 0 and out.splitlines()[1].startswith("check,Z,")
    status, out, _ = run(capsys, "verify", "z", "--n", "6", "--alpha", "3", "--format", "graph6")
    assert is_isomorphic(graph6_decode(out.strip()), path_graph(6))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "specex", "spectral", "A_", "--format", "graph6"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "A_\n"
