import json

import pytest

from grammic.cli import main, parse_content, parse_word, UsageError
from grammic.tropical import UTMatrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_word():
    assert parse_word("3212") == (3, 2, 1, 2)
    assert parse_word("10, 2 3") == (10, 2, 3)
    assert parse_word("e") == () and parse_word("") == ()
    with pytest.raises(UsageError):
        parse_word("12", rank=10)
    with pytest.raises(UsageError):
        parse_word("1a")
    with pytest.raises(UsageError):
        parse_word("0,1")


def test_parse_content():
    assert parse_content("1:1,2:2") == {1: 1, 2: 2}
    assert parse_content("1,2,1") == {1: 1, 2: 2, 3: 1}


def test_insert(capsys):
    code, out, _ = run(capsys, "--json", "insert", "3212")
    assert code == 0
    assert json.loads(out) == {"rows": [[1, 2], [2], [3]]}


def test_fingerprint_round_trip(capsys):
    code, out, _ = run(capsys, "fingerprint", "212", "--rank", "3")
    assert code == 0
    text = out.strip()
    m = UTMatrix.from_json(text)
    assert m.n == 3 and m.to_json() == text
    assert json.loads(text) == {"n": 3, "entries": [[1, 2, 2], [None, 2, 2], [None, None, 0]]}


@pytest.mark.parametrize("cmd", ["equiv", "oracle"])
def test_equiv_commands(capsys, cmd):
    assert run(capsys, cmd, "3212", "2132")[1].strip() == "equivalent"
    assert run(capsys, cmd, "12", "21")[1].strip() == "not equivalent"
    code, out, _ = run(capsys, cmd, "3212", "2132", "--json")
    assert json.loads(out)["equivalent"] is True and json.loads(out)["rank"] == 3


def test_rank_too_small(capsys):
    code, _, err = run(capsys, "--rank", "2", "equiv", "3212", "2132")
    assert code == 2 and "usage error" in err


def test_act_and_chseq(capsys):
    assert run(capsys, "act", "0,1,1", "1")[1].strip() == "1,0,1"
    code, out, _ = run(capsys, "--json", "chseq", "2143")
    assert json.loads(out) == {"chseq": [0, 0, 1, 1], "charge": 2}
    code, _, err = run(capsys, "chseq", "2213")
    assert code == 2


def test_transform(capsys):
    assert run(capsys, "transform", "std", "212")[1].strip() == "213"
    assert run(capsys, "transform", "pack", "515")[1].strip() == "212"
    assert run(capsys, "--rank", "3", "transform", "involute", "112")[1].strip() == "233"
    assert run(capsys, "transform", "restrict", "2", "3", "3142")[1].strip() == "32"
    assert run(capsys, "transform", "involute", "12")[0] == 2


def test_classes(capsys):
    code, out, _ = run(capsys, "classes", "2", "3")
    assert code == 0
    assert out.splitlines() == ["111", "112", "121 211", "122", "212 221", "222"]


def test_presentation(capsys):
    assert run(capsys, "presentation", "knuth+choffrut3", "3", "5")[1].strip() == \
        "no gap up to length 5"
    code, out, _ = run(capsys, "--json", "presentation", "knuth", "3", "4")
    assert [2, 1, 3, 2] in [p[0] for p in json.loads(out)["gap"]]


def test_presentation_from_file(capsys, tmp_path):
    path = tmp_path / "rels.json"
    path.write_text(json.dumps([[[3, 2, 1, 2], [2, 1, 3, 2]]]))
    code, out, _ = run(capsys, "presentation", f"knuth+{path}", "3", "4")
    assert code == 0 and out.strip() == "no gap up to length 4"
    assert run(capsys, "presentation", "nonsense", "3", "4")[0] == 2


def test_relations(capsys):
    assert run(capsys, "relations", "knuth", "2")[1].splitlines() == ["211 121", "221 212"]
    code, out, _ = run(capsys, "--json", "relations", "lps", "3")
    assert [[2, 3, 2, 1], [2, 1, 3, 2]] in json.loads(out)
    assert run(capsys, "relations", "two-column", "421", "3", "21", "43")[1].strip() == "equivalent"
    assert run(capsys, "relations", "two-column", "421", "3", "421", "3")[0] == 2
    code, out, _ = run(capsys, "--json", "relations", "m-column", "3", "2")
    assert json.loads(out)["pairs"]


def test_identity(capsys):
    code, out, _ = run(capsys, "--json", "identity", "falsify", "xy=yx")
    data = json.loads(out)
    assert data["witness"] == {"x": [1], "y": [2]} and data["balanced"]
    code, out, _ = run(capsys, "identity", "check", "x=x", "--rank", "3")
    assert out.startswith("no counterexample")
    code, out, _ = run(capsys, "--json", "identity", "falsify", "xxy=xyy")
    assert json.loads(out)["witness"] == {"x": [1, 1], "y": [1]}
    assert run(capsys, "identity", "check", "xy")[0] == 2


def test_shiftgraph(capsys, tmp_path):
    edges = tmp_path / "edges.txt"
    code, out, _ = run(capsys, "--json", "shiftgraph", "2", "1:1,2:1", "--edges", str(edges))
    assert json.loads(out)["components"] == [{"size": 2, "diameter": 1}]
    assert len(edges.read_text().splitlines()) == 1


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("GRAMMIC_BUDGET", "words=10")
    code, _, err = run(capsys, "classes", "3", "4")
    assert code == 2 and "budget" in err
    monkeypatch.setenv("GRAMMIC_BUDGET", "bogus")
    assert run(capsys, "classes", "1", "1")[0] == 2


def test_bad_jobs(capsys):
    assert run(capsys, "--jobs", "0", "classes", "1", "1")[0] == 2
