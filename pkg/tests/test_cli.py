import csv
import io
import json

import pytest

from conftest import complete_graph, cycle_graph
from idpp import (
    DppInstance,
    Graph,
    IdppInstance,
    IdppSolution,
    SolveBudget,
    bench,
    is_to_idpp,
    lift_is_solution,
)
from idpp.cli import RunReport, main
from idpp.textio import format_graph, format_instance, format_solution, parse_instance, parse_map


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path

    return write


def test_reduce_is2idpp_triangle(capsys, files, tmp_path):
    src = files("k3.txt", format_graph(complete_graph(3)))
    out = tmp_path / "red.txt"
    code, stdout, _ = run(capsys, "reduce", "is2idpp", src, "--out", out)
    assert code == 0 and stdout == "n=9 m=9 k=3\n"
    inst = parse_instance(out.read_text())
    assert inst.graph.node_count == 9
    assert parse_map((tmp_path / "red.txt.map").read_text()).original_node_count == 3


def test_reduce_dpp2idpp_edgeless(capsys, files, tmp_path):
    src = files("e.txt", format_instance(DppInstance(Graph(4, []), [(0, 3)])))
    out = tmp_path / "red.txt"
    code, stdout, _ = run(capsys, "reduce", "dpp2idpp", src, "--out", out, "--map", tmp_path / "m")
    assert code == 0 and stdout == "n=4 m=0 k=1\n"
    assert (tmp_path / "m").read_text() == "reduction dpp2idpp 4\n"


def test_reduce_malformed(capsys, files, tmp_path):
    src = files("bad.txt", "g 3 1\ne 0 9\n")
    code, _, err = run(capsys, "reduce", "is2idpp", src, "--out", tmp_path / "o")
    assert code == 2 and "bad.txt:2:" in err


def test_reduce_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "reduce", "is2idpp", tmp_path / "nope", "--out", tmp_path / "o")
    assert code == 3 and "error" in err


def _reduced(files, g, name="inst.txt"):
    inst, rmap = is_to_idpp(g)
    return files(name, format_instance(inst)), inst, rmap


def test_solve_exact_reduced_c5(capsys, files, tmp_path):
    path, inst, _ = _reduced(files, cycle_graph(5))
    sol_path = tmp_path / "sol.txt"
    code, stdout, _ = run(capsys, "solve", "exact", path, "--out", sol_path)
    report = json.loads(stdout)
    assert code == 0 and report["size"] == 2 and report["optimal"] is True
    assert (report["n"], report["m"], report["k"]) == (15, 15, 5)
    assert "wall_time" not in report
    code, stdout, _ = run(capsys, "verify", path, sol_path)
    assert code == 0 and stdout == "feasible 1\n"


def test_solve_greedy_edgeless(capsys, files):
    path, _, _ = _reduced(files, Graph(3, []))
    code, stdout, _ = run(capsys, "solve", "greedy", path, "--timing")
    report = json.loads(stdout)
    assert report["size"] == 3 and report["optimal"] is False and "wall_time" in report


def test_solve_boosted_refuses_small_epsilon(capsys, files):
    path = files("p8.txt", format_instance(IdppInstance(Graph(8, [(i, i + 1) for i in range(7)]), [(0, 7)])))
    code, _, err = run(capsys, "solve", "boosted", path, "--epsilon", "0.1")
    assert code == 4 and "177147" in err


def test_solve_boosted_dispatch(capsys, files):
    path, _, _ = _reduced(files, cycle_graph(5))
    code, stdout, _ = run(capsys, "solve", "boosted", path, "--budget-nodes", "27")
    assert code == 0 and json.loads(stdout)["optimal"] is True
    code, _, _ = run(capsys, "solve", "boosted", path, "--epsilon", "1.5")
    assert code == 2


def test_solve_exact_budget(capsys, files):
    path, _, _ = _reduced(files, Graph(7, []))  # 21 nodes
    code, _, err = run(capsys, "solve", "exact", path)
    assert code == 4
    code, stdout, _ = run(capsys, "solve", "exact", path, "--budget-nodes", "21")
    assert code == 0 and json.loads(stdout)["size"] == 7


def test_verify_detects_touching_paths(capsys, files):
    path, inst, rmap = _reduced(files, complete_graph(3))
    sol = files("sol.txt", format_solution(lift_is_solution(rmap, {0, 1})))
    code, stdout, _ = run(capsys, "verify", path, sol)
    assert code == 1
    assert stdout.splitlines()[0] == "feasible 0"
    assert any(line.startswith("ADJACENT_PATHS") for line in stdout.splitlines())


def test_verify_endpoint_mismatch(capsys, files):
    path, _, _ = _reduced(files, complete_graph(3))
    sol = files("sol.txt", "r 0 4 0 3\n")
    code, stdout, _ = run(capsys, "verify", path, sol)
    assert code == 1 and "ENDPOINT_MISMATCH" in stdout


def test_verify_parse_failure(capsys, files):
    path, _, _ = _reduced(files, complete_graph(3))
    sol = files("sol.txt", "r zero\n")
    code, _, _ = run(capsys, "verify", path, sol)
    assert code == 2


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_bench_gnp(capsys):
    code, stdout, _ = run(capsys, "bench", "gnp", "--n", "6", "--p", "0.3", "--trials", "50", "--seed", "7")
    rows = _rows(stdout)
    assert code == 0 and len(rows) == 50
    assert all(float(r["ratio"]) >= 1 for r in rows)
    assert all(r["ratio_le_sqrt_m"] == "1" for r in rows)


def test_bench_sparse_growth(capsys):
    code, stdout, _ = run(capsys, "bench", "sparse", "--n", "4-40", "--alpha", "1.2",
                          "--trials", "30", "--seed", "1", "--budget-nodes", "18")
    assert code == 0
    for r in _rows(stdout):
        n_prime = int(r["k"])
        m_prime = int(r["m"]) - 2 * n_prime
        assert m_prime == min(round(n_prime**1.2), n_prime * (n_prime - 1) // 2)
        assert m_prime <= n_prime**1.2 + 0.5
        if int(r["n"]) > 18:
            assert r["exact"] == "" and r["ratio"] == ""


def test_bench_zero_trials(capsys):
    code, stdout, _ = run(capsys, "bench", "gnp", "--trials", "0", "--seed", "3")
    assert code == 0
    assert stdout == "trial,n,m,k,exact,greedy,ratio,sqrt_m,ratio_le_sqrt_m,sqrt_m_lt_n\n"


def test_bench_invalid_params(capsys):
    assert run(capsys, "bench", "gnp", "--p", "1.5", "--seed", "1")[0] == 2
    for bad_n in ("x", "0", "5-3"):
        with pytest.raises(SystemExit) as exc:
            main(["bench", "gnp", "--n", bad_n, "--seed", "1"])
        assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["bench", "gnp"])  # --seed is mandatory


def test_bench_row_flags_star_violation():
    # star centred on node 0: greedy routes the centre first and blocks
    # every leaf, exact routes all five leaves; 5 > sqrt(17)
    star = Graph(6, [(0, v) for v in range(1, 6)])
    row = bench._run_trial((0, star, SolveBudget()))
    assert (row.n, row.m, row.exact, row.greedy) == (18, 17, 5, 1)
    assert row.within_bound is False
    assert row.cells()[8] == "0"


def test_report_size_must_match_solution():
    with pytest.raises(ValueError):
        RunReport("solve", "exact", 3, 3, 1, 2, True, 0.0, "ok", IdppSolution())
