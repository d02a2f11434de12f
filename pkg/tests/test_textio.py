import pytest
from hypothesis import given, settings, strategies as st

from conftest import complete_graph
from idpp import DppInstance, Graph, IdppInstance, IdppSolution, dpp_to_idpp, is_to_idpp
from idpp.textio import (
    ParseError,
    format_graph,
    format_instance,
    format_map,
    format_solution,
    parse_graph,
    parse_instance,
    parse_map,
    parse_solution,
    read_instance,
)
from oracles import random_instance


def test_graph_golden(k3):
    assert format_graph(k3) == "g 3 3\ne 0 1\ne 0 2\ne 1 2\n"


def test_reduced_triangle_golden(k3):
    inst, rmap = is_to_idpp(k3)
    assert format_instance(inst) == (
        "g 9 9\n"
        "e 0 1\ne 0 2\ne 0 3\ne 0 4\ne 1 2\ne 1 5\ne 1 6\ne 2 7\ne 2 8\n"
        "t 3 4\nt 5 6\nt 7 8\n"
    )
    assert format_map(rmap) == "reduction is2idpp 3\nmap a 0 3 4\nmap a 1 5 6\nmap a 2 7 8\n"


def test_subdivision_map_golden(k3):
    _, rmap = dpp_to_idpp(DppInstance(k3, [(0, 1)]))
    assert format_map(rmap) == "reduction dpp2idpp 3\nmap x 0 1 3\nmap x 0 2 4\nmap x 1 2 5\n"


def test_comments_and_blank_lines():
    text = "# a triangle\n\ng 3 3\ne 1 0\n  # mid comment\ne 1 2\ne 0 2\nt 0 2\n"
    inst = parse_instance(text)
    assert inst.graph == complete_graph(3) and inst.pairs == ((0, 2),)


@pytest.mark.parametrize(
    "text, line",
    [
        ("e 0 1\n", 1),
        ("g 3 1\ne 0 1\ne 1 2\n", 1),
        ("g 3 2\ne 0 1\ne 1 0\n", 3),
        ("g 3 1\ne 0 3\n", 2),
        ("g 3 1\ne 1 1\n", 2),
        ("g 3 1\ne 0 x\n", 2),
        ("g 3 0\nt 0 0\n", 2),
        ("g 3 0\nq 1 2\n", 2),
        ("g 3\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_instance(text)
    assert exc.value.line == line


def test_missing_header():
    with pytest.raises(ParseError):
        parse_instance("# nothing\n")


def test_graph_file_rejects_pairs():
    with pytest.raises(ParseError):
        parse_graph("g 2 1\ne 0 1\nt 0 1\n")


def test_read_instance_reports_path(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("g 2 1\ne 0 5\n")
    with pytest.raises(ParseError, match=r"bad\.txt:2:"):
        read_instance(f)


def test_solution_format():
    sol = IdppSolution(((0, (3, 0, 4)), (2, (7, 2, 8))))
    assert format_solution(sol) == "r 0 3 0 4\nr 2 7 2 8\n"
    assert parse_solution("r 1\n") == IdppSolution(((1, ()),))
    with pytest.raises(ParseError):
        parse_solution("r\n")
    with pytest.raises(ParseError):
        parse_solution("x 1 2\n")


def test_map_parse_errors():
    with pytest.raises(ParseError):
        parse_map("map a 0 1 2\n")
    with pytest.raises(ParseError):
        parse_map("reduction nope 3\n")
    with pytest.raises(ParseError):
        parse_map("reduction is2idpp 2\nmap a 0 2 3\n")
    with pytest.raises(ParseError):
        parse_map("reduction dpp2idpp 2\nmap a 0 2 3\n")


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 15), st.floats(0.0, 1.0), st.integers(0, 4), st.randoms(use_true_random=False))
def test_round_trips(n, p, k, rnd):
    inst = random_instance(rnd, max(n, 2), p, k)
    assert parse_instance(format_instance(inst)) == inst
    assert parse_graph(format_graph(inst.graph)) == inst.graph
    reduced, rmap = is_to_idpp(inst.graph)
    assert parse_map(format_map(rmap)) == rmap
    _, dmap = dpp_to_idpp(DppInstance(inst.graph, inst.pairs))
    assert parse_map(format_map(dmap)) == dmap
    routed = tuple((i, tuple(rnd.sample(range(n), rnd.randint(1, n)))) for i in range(k))
    sol = IdppSolution(routed)
    assert parse_solution(format_solution(sol)) == sol


def test_dpp_instance_class_preserved():
    inst = parse_instance("g 2 1\ne 0 1\nt 0 1\n", DppInstance)
    assert isinstance(inst, DppInstance)
    assert inst != IdppInstance(inst.graph, inst.pairs)
