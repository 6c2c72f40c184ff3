import json
from pathlib import Path

import pytest

from lrpoles.cli import main

DATA = Path(__file__).parent.parent / "data"
SHAPE = ["--alpha", "3,2", "--beta", "5,4,3,2,1", "--gamma", "4,3,2,1"]


def _run(capsys, *argv, code=None):
    if code is None:
        main(list(argv))
    else:
        with pytest.raises(SystemExit) as exc:
            main(list(argv))
        assert exc.value.code == code
    return capsys.readouterr()


def _lines(out):
    return [json.loads(line) for line in out.splitlines()]


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------

def test_count(capsys):
    assert _run(capsys, "tableaux", *SHAPE).out == "5\n"
    assert _run(capsys, "tableaux", "--count", *SHAPE).out == "5\n"
    assert _run(capsys, "tableaux", "--alpha", "", "--beta", "3", "--gamma", "3").out == "1\n"


def test_list(capsys):
    found = json.loads(_run(capsys, "tableaux", "--list", *SHAPE).out)
    assert len(found) == 5
    assert found[0]["chain"] == [[4, 3, 2, 1], [4, 3, 2, 2, 1], [4, 4, 3, 2, 1], [5, 4, 3, 2, 1]]
    assert found[0]["grid"] == [[0, 0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 2], [0, 2], [3]]


def test_check_valid(capsys):
    (result,) = _lines(_run(capsys, "tableaux", "--check", str(DATA / "intro.json")).out)
    assert result["valid"] is True
    assert result["chain"][-1] == [5, 4, 3, 2, 1]


def test_check_garbage(capsys):
    captured = _run(capsys, "tableaux", "--check", str(DATA / "garbage.json"), code=1)
    (violation,) = _lines(captured.out)
    assert violation["violation"] == "LATTICE_VIOLATION"
    assert violation["box"] == [1, 5]
    assert "Error:" in captured.err


def test_shape_errors(capsys):
    _run(capsys, "tableaux", "--alpha", "3,2", code=2)
    _run(capsys, "tableaux", "--alpha", "2,3", "--beta", "5", "--gamma", "", code=2)
    captured = _run(capsys, "tableaux", "--alpha", "1", "--beta", "2", "--gamma", "2", code=2)
    assert "no shape" in captured.err


def test_missing_file(capsys, tmp_path):
    captured = _run(capsys, "tableaux", "--check", str(tmp_path / "nope.json"), code=2)
    assert "cannot read" in captured.err


def test_malformed_file(capsys, tmp_path):
    path = tmp_path / "both.json"
    path.write_text('{"chain": [[1]], "grid": [[1]]}')
    assert "exactly one" in _run(capsys, "pmaps", str(path), code=2).err


# ---------------------------------------------------------------------------
# pmaps
# ---------------------------------------------------------------------------

def test_pmaps_list(capsys):
    maps = _lines(_run(capsys, "pmaps", str(DATA / "worked.json")).out)
    assert [m["index"] for m in maps] == [0, 1, 2, 3]
    assert [m["ebp"] for m in maps] == [False, True, False, True]
    assert maps[1]["jumps"] == [1, 1, 3, 3]
    assert {"from": [4, 1], "to": [3, 2]} in maps[1]["map"]


def test_pmaps_ebp_only(capsys):
    maps = _lines(_run(capsys, "pmaps", "--ebp-only", str(DATA / "worked.json")).out)
    assert [m["index"] for m in maps] == [1, 3]


def test_pmaps_classes(capsys):
    classes = _lines(_run(capsys, "pmaps", "--classes", str(DATA / "worked.json")).out)
    assert [(c["maps"], c["ebp"]) for c in classes] == [([0, 2], False), ([1, 3], True)]
    assert classes[0]["decomposition"] is None
    assert classes[1]["label"] == "P((0,1)) + P((0,2,3)) + P((2))"
    assert classes[1]["decomposition"] == {"poles": [[0, 1], [0, 2, 3], [2]], "empty": []}
    assert classes[0]["invariant"] == [[1, [1, 2, 4]], [1, [1, 3]], [1, [3]]]


def test_pmaps_on_an_empty_tableau(capsys, tmp_path):
    path = tmp_path / "empty.json"
    path.write_text('{"chain": [[3]]}')
    assert len(_lines(_run(capsys, "pmaps", str(path)).out)) == 1
    (only,) = _lines(_run(capsys, "pmaps", "--classes", str(path)).out)
    assert only["ebp"] is True
    assert only["decomposition"] == {"poles": [], "empty": [3]}


# ---------------------------------------------------------------------------
# poles and embed
# ---------------------------------------------------------------------------

def test_poles(capsys):
    (out,) = _lines(_run(capsys, "poles", "1,3,4", "--endo", "--prime", "5").out)
    assert out["gaps"] == [0, 2]
    assert out["beta"] == [5, 2]
    assert out["shifts"] == [2, 1]
    assert out["generator"] == "T^2 b5 + T b2"
    assert out["columns"] == ["C(2,3)_5", "C(1,1)_2"]
    assert out["chain"] == [[3, 1], [3, 2], [4, 2], [5, 2]]
    assert out["endo_dimension"] == 4


def test_poles_extended(capsys):
    (out,) = _lines(_run(capsys, "poles", "0,1,3", "--nongap", "0").out)
    assert out["ambient"] == [4, 2, 1]
    assert out["generator"] == "T b4 + b2 + b1"
    assert "endo_dimension" not in out


def test_poles_errors(capsys):
    _run(capsys, "poles", code=2)
    _run(capsys, "poles", "3,1", code=2)
    assert "non-gap" in _run(capsys, "poles", "0,1,3", "--nongap", "1", code=2).err


def test_poles_from_decomposition(capsys):
    (out,) = _lines(_run(capsys, "poles", "--decomposition", str(DATA / "decomposition.json")).out)
    assert out["chain"] == [[2, 2], [3, 2, 1, 1], [3, 3, 2, 1], [4, 3, 2, 1]]
    assert out["label"] == "P((0,1)) + P((0,2,3)) + P((2))"
    assert len(out["map"]) == 3


def test_embed(capsys):
    (out,) = _lines(_run(capsys, "embed", str(DATA / "embedding.json")).out)
    assert out == {"beta": [2, 1], "chain": [[2], [2, 1]], "grid": [[0, 1], [0]],
                   "heights": [[0]]}


def test_embed_bad_prime(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"p": 6, "beta": [1], "generators": [[1]]}')
    assert "not a prime" in _run(capsys, "embed", str(path), code=2).err


# ---------------------------------------------------------------------------
# poset
# ---------------------------------------------------------------------------

def test_poset_dot_to_stdout(capsys):
    out = _run(capsys, "poset", *SHAPE).out
    assert out.startswith("digraph {\n")
    assert out.count("->") == 5


def test_poset_files(capsys, tmp_path):
    dot, data = tmp_path / "hasse.dot", tmp_path / "poset.json"
    (summary,) = _lines(_run(capsys, "poset", *SHAPE, "--dot", str(dot), "--json", str(data)).out)
    assert summary == {"nodes": 5, "box_moves": 6, "hasse": 5, "certified": 0}
    assert dot.read_text().startswith("digraph {")
    assert len(json.loads(data.read_text())["edges"]) == 6


def test_poset_json_to_stdout(capsys):
    data = json.loads(_run(capsys, "poset", *SHAPE, "--json", "-").out)
    assert len(data["nodes"]) == 5


def test_poset_certify(capsys, tmp_path):
    data = tmp_path / "poset.json"
    (summary,) = _lines(_run(capsys, "poset", *SHAPE, "--certify", "--prime", "5",
                             "--json", str(data)).out)
    assert summary == {"nodes": 5, "box_moves": 6, "hasse": 5, "certified": 6}
    edges = json.loads(data.read_text())["edges"]
    assert len(edges) == 6
    assert all(e["kind"] == "BOX_MOVE" and e["certified"] for e in edges)
    assert all(len(e["certificate"]["family"]) == 5 for e in edges)


# ---------------------------------------------------------------------------
# verify and version
# ---------------------------------------------------------------------------

def test_verify_small_sweep(capsys):
    outcomes = _lines(_run(capsys, "verify", "pole-roundtrip", "--max-size", "4", "--prime", "3").out)
    assert {o["property"] for o in outcomes} == {"pole bijection", "gap blocks"}
    assert all(o["passed"] and o["checked"] == 15 for o in outcomes)


def test_verify_field_stability_on_many_threads(capsys, monkeypatch):
    import lrpoles
    monkeypatch.setattr(lrpoles, "workers", 8)
    outcomes = _lines(_run(capsys, "verify", "field-stability", "--max-size", "3", "--prime", "7").out)
    (stable,) = [o for o in outcomes if o["property"] == "field stability"]
    assert stable["passed"] and stable["checked"] >= 6
    assert all(o["passed"] for o in outcomes)


def test_verify_endo_count(capsys):
    outcomes = _lines(_run(capsys, "verify", "endo-count", "--max-size", "3", "--prime", "2").out)
    assert all(o["passed"] for o in outcomes)


def test_verify_unknown_suite(capsys):
    _run(capsys, "verify", "nonsense", code=2)


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["pole-tableau", "classification", "union-columns",
                                   "invariant-soundness", "same-tableau", "box-family",
                                   "field-stability", "rook-strip"])
def test_verify_suites(capsys, suite):
    outcomes = _lines(_run(capsys, "verify", suite, "--max-size", "5", "--prime", "3").out)
    assert outcomes and all(o["passed"] for o in outcomes)


def test_version(capsys):
    assert _run(capsys, "version").out.startswith("lrpoles ")
