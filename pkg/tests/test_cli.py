"""End-to-end command line tests driven through cli.main."""

import io
import json
import random
import sys

import pytest

from tcfree.cli import main
from tcfree.generators import (
    complete_graph,
    cycle_graph,
    gen_class_member,
    join_graphs,
)
from tcfree.graphs import Graph, WeightedGraph
from tcfree.io import format_graph, parse_graph
from tcfree.oracles import brute_alpha_w, brute_chi, brute_omega_w

K23 = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, g, weights=None, name="g.txt"):
    path = tmp_path / name
    path.write_text(format_graph(g, weights))
    return str(path)


def test_recognize_member(tmp_path, capsys):
    path = write_graph(tmp_path, cycle_graph(7))
    code, out, err = run(capsys, ["recognize", "--class", "gu", path])
    assert code == 0
    data = json.loads(out)
    assert data["class"] == "gu"
    assert data["member"] is True
    assert data["certificate"] is None


def test_recognize_nonmember_certificate_is_one_based(tmp_path, capsys):
    path = write_graph(tmp_path, K23)
    code, out, err = run(capsys, ["recognize", "--class", "gut", path])
    assert code == 1
    data = json.loads(out)
    assert data["member"] is False
    cert = data["certificate"]
    assert cert["kind"] == "K23"
    assert sorted(cert["vertices"]) == [1, 2, 3, 4, 5]


def test_recognize_reads_stdin(capsys, monkeypatch):
    text = format_graph(cycle_graph(5))
    code, out, err = run(
        capsys, ["recognize", "--class", "gutcap", "-"], stdin=text, monkeypatch=monkeypatch
    )
    assert code == 0
    assert json.loads(out)["member"] is True


@pytest.mark.parametrize(
    "cls,problem",
    [
        ("gu", "mwc"),
        ("gu", "mwss"),
        ("gu", "color"),
        ("gt", "mwc"),
        ("gt", "mwss"),
        ("gutcap", "mwc"),
        ("gutcap", "mwss"),
        ("gutcap", "color"),
    ],
)
def test_solve_supported_pairs_match_brute(tmp_path, capsys, cls, problem):
    rng = random.Random(hash((cls, problem)) & 0xFFFF)
    for attempt in range(3):
        g = gen_class_member(rng.randrange(2**30), cls, pieces=2, max_n=10)
        ws = tuple(rng.randrange(-3, 8) for _ in range(g.n))
        wg = WeightedGraph(g, ws)
        path = write_graph(tmp_path, g, ws, name=f"{cls}-{problem}-{attempt}.txt")
        code, out, err = run(capsys, ["solve", "--class", cls, "--problem", problem, path])
        assert code == 0, err
        data = json.loads(out)
        assert data["member"] is True and data["certificate"] is None
        if problem == "color":
            assert data["value"] == brute_chi(g)
            colors = data["solution"]["colors"]
            assert len(colors) == g.n
            assert all(
                colors[u] != colors[v] for u in range(g.n) for v in range(g.n) if g.has_edge(u, v)
            )
        else:
            expected = brute_omega_w(wg) if problem == "mwc" else brute_alpha_w(wg)
            assert data["value"] == expected
            chosen = data["solution"]["vertices"]
            assert all(1 <= v <= g.n for v in chosen)
            assert data["value"] == sum(ws[v - 1] for v in chosen)


@pytest.mark.parametrize(
    "cls,problem",
    [("gut", "mwc"), ("gut", "mwss"), ("gut", "color"), ("gt", "color")],
)
def test_solve_unsupported_pairs(tmp_path, capsys, cls, problem):
    path = write_graph(tmp_path, cycle_graph(5))
    code, out, err = run(capsys, ["solve", "--class", cls, "--problem", problem, path])
    assert code == 3
    assert out == ""
    assert f"{cls}/{problem}" in err


def test_solve_nonmember_reports_reason(tmp_path, capsys):
    wheel = join_graphs(cycle_graph(5), complete_graph(1))
    path = write_graph(tmp_path, wheel)
    code, out, err = run(capsys, ["solve", "--class", "gt", "--problem", "mwc", path])
    assert code == 1
    data = json.loads(out)
    assert data["member"] is False
    assert data["solution"] is None and data["value"] is None
    assert "universal wheel" in data["reason"]

    path = write_graph(tmp_path, K23, name="k23.txt")
    code, out, err = run(capsys, ["solve", "--class", "gu", "--problem", "color", path])
    assert code == 1
    assert json.loads(out)["member"] is False


def test_input_errors_exit_2(tmp_path, capsys, monkeypatch):
    code, _, err = run(capsys, ["recognize", "--class", "gu", str(tmp_path / "missing.txt")])
    assert code == 2 and "cannot read" in err

    bad = tmp_path / "bad.txt"
    bad.write_text("p 3 1\ne 1 5\n")
    code, _, err = run(capsys, ["recognize", "--class", "gu", str(bad)])
    assert code == 2 and "out of range" in err

    code, _, err = run(capsys, ["generate", "--kind", "ring", "--k", "4", "--sizes", "1,1,1"])
    assert code == 2 and "one size per part" in err

    code, _, err = run(capsys, ["generate", "--kind", "chordal"])
    assert code == 2 and "requires --n" in err

    code, _, err = run(capsys, ["generate", "--kind", "ring", "--k", "3", "--sizes", "1,1,1"])
    assert code == 2 and "at least 4 parts" in err

    code, _, err = run(capsys, ["verify-chi", "--class", "gu", "--max-n", "20"])
    assert code == 2 and "out of brute-force range" in err

    code, _, err = run(capsys, ["verify-chi", "--class", "gu", "--trials", "0"])
    assert code == 2 and "must be positive" in err

    code, _, _ = run(capsys, [])
    assert code == 2


def test_decompose_tree_shape(tmp_path, capsys):
    g = gen_class_member(11, "gu", pieces=3, max_n=12)
    path = write_graph(tmp_path, g)
    code, out, err = run(capsys, ["decompose", path])
    assert code == 0
    tree = json.loads(out)
    nodes = {node["id"]: node for node in tree["nodes"]}
    root = nodes[tree["root"]]
    assert sorted(root["vertices"]) == list(range(1, g.n + 1))
    for node in nodes.values():
        assert all(1 <= v <= g.n for v in node["vertices"])
        if node["children"]:
            assert node["kind"] == "internal"
            assert node["cutset"] is not None
            assert all(1 <= v <= g.n for v in node["cutset"])
            assert all(child in nodes for child in node["children"])
        else:
            assert node["kind"] == "leaf"
            assert node["cutset"] is None


def test_generate_is_deterministic_and_pipes(tmp_path, capsys):
    argv = ["generate", "--kind", "ring", "--k", "5", "--sizes", "2,1,2,1,1", "--seed", "9"]
    code1, out1, err1 = run(capsys, argv)
    code2, out2, err2 = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert err1 == err2
    partition = json.loads(err1)
    assert sorted(len(p) for p in partition["parts"]) == [1, 1, 1, 2, 2]
    assert min(v for part in partition["parts"] for v in part) == 1

    wg = parse_graph(out1)
    assert wg.graph.n == 7

    genfile = tmp_path / "ring.txt"
    genfile.write_text(out1)
    code, out, _ = run(capsys, ["recognize", "--class", "gut", str(genfile)])
    assert code == 0 and json.loads(out)["member"] is True


def test_generate_member_kind(tmp_path, capsys):
    argv = ["generate", "--kind", "member", "--class", "gutcap", "--seed", "4", "--max-n", "10"]
    code, out, _ = run(capsys, argv)
    assert code == 0
    genfile = tmp_path / "member.txt"
    genfile.write_text(out)
    code, out2, _ = run(capsys, ["recognize", "--class", "gutcap", str(genfile)])
    assert code == 0 and json.loads(out2)["member"] is True

    code, _, err = run(capsys, ["generate", "--kind", "member"])
    assert code == 2 and "requires --class" in err


@pytest.mark.parametrize("cls", ["gu", "gt", "gutcap", "gut", "hyperantihole7"])
def test_verify_chi_bounds_hold(capsys, cls):
    code, out, err = run(
        capsys, ["verify-chi", "--class", cls, "--trials", "6", "--max-n", "10", "--seed", "5"]
    )
    assert code == 0, err
    data = json.loads(out)
    assert data["all_ok"] is True
    assert data["class"] == cls
    assert [r["trial"] for r in data["results"]] == list(range(6))
    assert [r["seed"] for r in data["results"]] == [5 + i for i in range(6)]
    for row in data["results"]:
        assert row["ok"] and row["chi"] <= row["bound"]


def test_verify_chi_deterministic(capsys):
    argv = ["verify-chi", "--class", "gt", "--trials", "4", "--max-n", "9", "--seed", "2"]
    _, out1, _ = run(capsys, argv)
    _, out2, _ = run(capsys, argv)
    assert out1 == out2
