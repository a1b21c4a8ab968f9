import json

import pytest

from allpath import parse_edge_list
from allpath.cli import main
from conftest import SAMPLE18_TEXT

SUMMARY_KEYS = {"n", "m", "blocks", "cut_vertices", "eb", "b"}


@pytest.fixture
def sample18_file(tmp_path):
    p = tmp_path / "sample18.edges"
    p.write_text(SAMPLE18_TEXT)
    return str(p)


@pytest.fixture
def p3_file(tmp_path):
    p = tmp_path / "p3.edges"
    p.write_text("a b\nb c\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    payload = json.loads(out.out) if out.out.strip().startswith("{") else out.out
    return code, payload, out.err


def test_numbers_sample18(capsys, sample18_file):
    code, payload, _ = run(capsys, "numbers", "-g", sample18_file)
    assert code == 0
    assert set(payload) == {"command", "graph_summary", "result", "elapsed_micros"}
    assert payload["command"] == "numbers"
    assert set(payload["graph_summary"]) == SUMMARY_KEYS
    assert payload["graph_summary"] == {
        "n": 18, "m": 22, "blocks": 7, "cut_vertices": 4, "eb": 5, "b": 2,
    }
    r = payload["result"]
    assert (r["c"], r["i"], r["h"], r["gin"]) == (17, 5, 5, 1)
    assert r["trivial"] is False
    assert len(r["max_convex_witness"]) == 17
    assert r["min_interval_witness"] == sorted(r["min_interval_witness"])
    assert isinstance(payload["elapsed_micros"], int)
    assert payload["elapsed_micros"] >= 0


def test_interval_sample18(capsys, sample18_file):
    code, payload, _ = run(capsys, "interval", "-g", sample18_file, "-s", "b,j,w")
    assert code == 0
    assert payload["result"] == ["b", "e", "f", "g", "h", "i", "j", "k", "l", "u", "v", "w"]


def test_hull_matches_interval(capsys, sample18_file):
    _, iv, _ = run(capsys, "interval", "-g", sample18_file, "-s", "b,j,w")
    _, hl, _ = run(capsys, "hull", "-g", sample18_file, "-s", "b,j,w")
    assert hl["result"] == iv["result"]


def test_convex_command(capsys, p3_file):
    code, payload, _ = run(capsys, "convex", "-g", p3_file, "-s", "a,c")
    assert code == 0 and payload["result"] is False
    code, payload, _ = run(capsys, "convex", "-g", p3_file, "-s", "a,b")
    assert code == 0 and payload["result"] is True


def test_set_file_variant(capsys, sample18_file, tmp_path):
    sfile = tmp_path / "seed.txt"
    sfile.write_text("b\nj\n# comment\n\nw\n")
    code, payload, _ = run(capsys, "interval", "-g", sample18_file, "-S", str(sfile))
    assert code == 0
    assert payload["result"][0] == "b" and len(payload["result"]) == 12


def test_oracle_flag_agrees(capsys, p3_file):
    _, fast, _ = run(capsys, "numbers", "-g", p3_file)
    _, slow, _ = run(capsys, "numbers", "-g", p3_file, "--oracle")
    keep = ("c", "i", "h", "gin")
    assert {k: fast["result"][k] for k in keep} == {k: slow["result"][k] for k in keep}
    _, a, _ = run(capsys, "interval", "-g", p3_file, "-s", "a,c")
    _, b, _ = run(capsys, "interval", "-g", p3_file, "-s", "a,c", "--oracle")
    assert a["result"] == b["result"]


def test_blocks_command_with_dot(capsys, sample18_file, tmp_path):
    dot_path = tmp_path / "tree.dot"
    code, payload, _ = run(capsys, "blocks", "-g", sample18_file, "--dot", str(dot_path))
    assert code == 0
    r = payload["result"]
    assert ["a", "b"] in r["blocks"]
    assert r["cut_vertices"] == ["b", "f", "l", "w"]
    assert r["eb"] == 5 and r["b"] == 2
    text = dot_path.read_text()
    assert text.startswith("graph blockcut {") and "shape=box" in text


def test_gen_roundtrip(capsys, tmp_path):
    code = main(["gen", "--family", "block_chain", "--sizes", "2,3,4"])
    out = capsys.readouterr().out
    assert code == 0
    g = parse_edge_list(out)
    assert g.n == 7 and g.m == 8
    # determinism across invocations
    main(["gen", "--family", "cactus", "-n", "50", "--seed", "11"])
    first = capsys.readouterr().out
    main(["gen", "--family", "cactus", "-n", "50", "--seed", "11"])
    second = capsys.readouterr().out
    assert first == second


def test_oracle_check_command(capsys, p3_file):
    code, payload, _ = run(capsys, "oracle-check", "-g", p3_file)
    assert code == 0
    r = payload["result"]
    assert r == {"subsets": 8, "interval_agree": True, "numbers_agree": True}


def test_oracle_check_budget(capsys, tmp_path):
    big = tmp_path / "big.edges"
    main(["gen", "--family", "tree", "-n", "14", "--seed", "3"])
    big.write_text(capsys.readouterr().out)
    code = main(["oracle-check", "-g", str(big)])
    err = capsys.readouterr().err
    assert code == 1 and "budget" in err


def test_validation_errors_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("a b\nc d\n")
    code = main(["numbers", "-g", str(bad)])
    err = capsys.readouterr().err
    assert code == 1 and "unreachable" in err

    code = main(["convex", "-g", str(bad), "-s", "a"])
    capsys.readouterr()
    assert code == 1

    missing = str(tmp_path / "nope.edges")
    code = main(["numbers", "-g", missing])
    capsys.readouterr()
    assert code == 1


def test_unknown_label_exit_1(capsys, p3_file):
    code = main(["convex", "-g", p3_file, "-s", "zzz"])
    err = capsys.readouterr().err
    assert code == 1 and "zzz" in err


def test_strict_numbers_on_k1(capsys, tmp_path):
    k1 = tmp_path / "k1.edges"
    k1.write_text("solo\n")
    code, payload, _ = run(capsys, "numbers", "-g", str(k1))
    assert code == 0 and payload["result"]["trivial"] is True
    assert payload["result"]["c"] == 0
    code = main(["numbers", "-g", str(k1), "--strict"])
    capsys.readouterr()
    assert code == 1


def test_usage_errors_exit_2(capsys):
    assert main([]) == 2
    capsys.readouterr()
    assert main(["frobnicate"]) == 2
    capsys.readouterr()
    assert main(["interval", "-g", "x.edges"]) == 2  # no -s/-S
    capsys.readouterr()
    assert main(["convex", "-s", "a"]) == 2  # no -g
    capsys.readouterr()


def test_gen_invalid_family_params(capsys):
    assert main(["gen", "--family", "cycle", "-n", "2"]) == 1
    capsys.readouterr()
    assert main(["gen", "--family", "block_chain", "--sizes", "2,1"]) == 1
    capsys.readouterr()
