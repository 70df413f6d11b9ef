import csv
import json

import pytest

from burnkit.cli import EXIT_INPUT, EXIT_INTERNAL, EXIT_INVALID, EXIT_OK, main
from burnkit.generators import complete, cycle, path
from burnkit.io import FormatError, format_edge_list, parse_edge_list, write_graph


@pytest.fixture
def graph_file(tmp_path):
    def make(g, name="g.txt"):
        p = tmp_path / name
        write_graph(g, p)
        return str(p)

    return make


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_edge_list_round_trip():
    g = cycle(5)
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n0 0\n", 2),
        ("3 2\n0 1\n0 1\n", 3),
        ("3 1\n0 3\n", 2),
        ("3 1\n2 1\n", 2),
        ("3 2\n0 1\n", 2),
        ("3 1\n0 x\n", 2),
        ("3\n", 1),
    ],
)
def test_parser_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_generate(tmp_path, capsys):
    code, out, _ = run(["generate", "path", 9], capsys)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "9 8" and len(lines) == 9

    target = tmp_path / "neck.txt"
    assert run(["generate", "necklace", 4, 3, "--out", target], capsys)[0] == EXIT_OK
    assert parse_edge_list(target.read_text()).n == 12

    code, _, err = run(["generate", "path", 0], capsys)
    assert code != EXIT_OK and err


def test_generate_random_uses_seed(capsys):
    a = run(["generate", "random-regular", 20, 3, "--seed", 11], capsys)[1]
    b = run(["generate", "random-regular", 20, 3, "--seed", 11], capsys)[1]
    c = run(["generate", "random-regular", 20, 3, "--seed", 12], capsys)[1]
    assert a == b and a != c


def test_burn_modes(graph_file, capsys):
    code, out, _ = run(["burn", "exact", graph_file(path(9))], capsys)
    doc = json.loads(out)
    assert code == EXIT_OK and doc["length"] == 3 and doc["valid"] is True
    assert list(doc) == ["n", "length", "centers", "valid"]

    code, out, _ = run(["burn", "mindeg", graph_file(complete(6))], capsys)
    assert code == EXIT_OK and json.loads(out)["length"] == 3

    for mode in ("greedy", "weakdeg"):
        code, out, _ = run(["burn", mode, graph_file(cycle(8)), "--epsilon", "0.2"], capsys)
        assert code == EXIT_OK and json.loads(out)["valid"]


def test_burn_report(graph_file, tmp_path, capsys):
    rep = tmp_path / "r.json"
    assert run(["burn", "weakdeg", graph_file(path(9)), "--epsilon", "1/5", "--report", rep], capsys)[0] == 0
    assert json.loads(rep.read_text())["branch"] == "leaf"


def test_burn_disconnected_and_malformed(tmp_path, capsys):
    p = tmp_path / "d.txt"
    p.write_text("4 2\n0 1\n2 3\n")
    code, _, err = run(["burn", "exact", p], capsys)
    assert code == EXIT_INPUT and "not connected" in err
    p.write_text("4 2\n0 1\n")
    assert run(["burn", "exact", p], capsys)[0] == EXIT_INPUT


def test_burn_internal_failure_is_trapped(graph_file, capsys, monkeypatch):
    from burnkit import cli
    from burnkit.burning import BurningSchedule

    monkeypatch.setattr(cli, "greedy_burning", lambda g: BurningSchedule([0]))
    assert run(["burn", "greedy", graph_file(path(9))], capsys)[0] == EXIT_INTERNAL


def test_dominate_2hop_on_cycle(graph_file, tmp_path, capsys):
    trace = tmp_path / "t.csv"
    code, out, _ = run(["dominate", "2hop", graph_file(cycle(6)), "--trace", trace], capsys)
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc == {"n": 6, "hops": 2, "vertices": [0, 1, 2, 3], "valid": True}
    rows = list(csv.reader(trace.open()))
    assert rows[0] == ["t", "v_t", "path", "size_after", "a_t"]
    assert rows[1] == ["0", "3", "0-1-2-3", "4", "3"]


def test_dominate_and_verify_round_trip(graph_file, tmp_path, capsys):
    g = graph_file(cycle(9))
    for mode in ("2hop", "cds-nonleaf", "cds-greedy"):
        w = tmp_path / f"{mode}.json"
        assert run(["dominate", mode, g, "--out", w], capsys)[0] == EXIT_OK
        assert run(["verify", "domset", g, w], capsys)[0] == EXIT_OK
    w = tmp_path / "sched.json"
    assert run(["burn", "exact", g, "--out", w], capsys)[0] == EXIT_OK
    assert run(["verify", "schedule", g, w], capsys)[0] == EXIT_OK


def test_verify_tampered_and_malformed(graph_file, tmp_path, capsys):
    g = graph_file(path(7))
    w = tmp_path / "w.json"
    w.write_text(json.dumps({"n": 7, "hops": 2, "vertices": [3], "valid": True}))
    code, out, _ = run(["verify", "domset", g, w], capsys)
    assert code == EXIT_INVALID and out.strip() == "invalid"

    w.write_text(json.dumps({"n": 7, "length": 2, "centers": [3, 0], "valid": True}))
    assert run(["verify", "schedule", g, w], capsys)[0] == EXIT_INVALID

    for bad in ('{"n": 7}', "not json", '{"n": 7, "hops": 1, "vertices": [99]}',
                '{"n": 8, "hops": 1, "vertices": [1]}', '{"n": 7, "centers": [1, "a"]}'):
        w.write_text(bad)
        kind = "schedule" if "centers" in bad or bad == "not json" else "domset"
        assert run(["verify", kind, g, w], capsys)[0] == EXIT_INPUT


def test_reduce_outputs(graph_file, capsys):
    code, out, _ = run(["reduce", graph_file(complete(4))], capsys)
    doc = json.loads(out)
    assert code == EXIT_OK and doc["trace"] == [] and doc["value"] == 4
    code, out, _ = run(["reduce", graph_file(path(3))], capsys)
    doc = json.loads(out)
    assert doc["trace"][0] == {"op": "leaf", "v": 0, "neighbors": [1]}
    assert doc["core"]["vertices"] == [2]


def test_bounds(capsys):
    code, out, _ = run(["bounds", 2000, 8], capsys)
    assert code == EXIT_OK and json.loads(out)["thm1_ref"] == 26
    assert run(["bounds", 5, 5], capsys)[0] == EXIT_INPUT


def test_unknown_subcommand(capsys):
    assert run(["frobnicate"], capsys)[0] == EXIT_INPUT
