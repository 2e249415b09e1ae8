import io
import json

import pytest

from quasiper.classify import FamilyReport
from quasiper.cli import EXIT_INVARIANT, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def js(*argv):
    code, out, err = call(*argv)
    assert code == EXIT_OK, err
    return json.loads(out)


def test_word_analyze():
    data = js("word-analyze", "ababaabababaabababa")
    assert data["schema"] == "quasiper/1"
    assert data["quasiperiod"] == "aba"
    assert data["superprimitive"] is False
    assert js("word-analyze", "abaab")["quasiperiods"] == []


def test_inf_analyze():
    assert js("inf-analyze", "bb(ab)^w")["quasiperiodic"] is False
    data = js("inf-analyze", "(ab)^w", "--q", "aba")
    assert data["q_quasiperiodic"] is True


def test_qset():
    assert js("qset", "a->ab;b->aba")["candidates"] == ["a", "b", "ab", "ba", "aba"]


def test_classify_roundtrip():
    data = js("classify", "a->ba;b->bba")
    v = data["verdicts"]
    assert v["strong_infinite"]["status"] == "false"
    assert v["weak_infinite"]["status"] == "true"
    assert "timings" not in data
    report = FamilyReport.from_dict(data)
    assert report.to_dict() == data
    assert "timings" in js("classify", "a->ba;b->bba", "--timings")


def test_automaton(tmp_path):
    data = js("automaton", "a->ab;b->aba", "--q", "aba", "--enumerate", "2")
    assert len(data["automaton"]["states"]) == 4
    assert data["accepted"] == ["", "b", "ab", "bb"]
    dot = tmp_path / "a.dot"
    js("automaton", "a->ab;b->aba", "--q", "aba", "--dot", str(dot))
    assert dot.read_text().startswith("digraph")
    code, out, _ = call("automaton", "a->ab;b->aba", "--q", "aba", "--dot", "-", "--mode", "infinite")
    assert code == EXIT_OK and out.count("doublecircle") == 4


def test_sweep_csv(tmp_path):
    path = tmp_path / "s.csv"
    code, out, _ = call("sweep", "--max-image-len", "1", "--format", "csv", "--output", str(path))
    assert code == EXIT_OK and out == ""
    assert len(path.read_text().splitlines()) == 5


def test_oracle_checks():
    assert js("oracle-check", "automaton", "a->ab;b->aba", "--q", "aba", "--max-len", "5")["passed"]
    assert js("oracle-check", "words", "--max-len", "8")["passed"]
    assert js("--seed", "4", "oracle-check", "overlap", "--samples", "10")["seed"] == 4


@pytest.mark.parametrize("argv", [
    ("bogus",),
    ("classify", "a->"),
    ("classify", "a->ab;a->b"),
    ("inf-analyze", "ab"),
    ("automaton", "a->ab;b->aba"),
    ("word-analyze", "ab1"),
    ("automaton", "a->ab;b->aba", "--q", "abc"),
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == EXIT_USAGE and out == "" and err


def test_resource_ceiling_exit_code():
    code, _, err = call("classify", "a->abaaba;b->baabaaba", "--max-product-states", "1")
    assert code == EXIT_RESOURCE and "ceiling" in err


def test_invariant_exit_code(monkeypatch):
    import quasiper.cli as cli
    from quasiper.classify import InvariantViolation

    def broken(*a, **k):
        raise InvariantViolation("boom")
    monkeypatch.setattr(cli, "classify", broken)
    assert call("classify", "a->ab;b->aba")[0] == EXIT_INVARIANT


def test_deterministic_output():
    assert call("classify", "a->ab;b->aaba")[1] == call("classify", "a->ab;b->aaba")[1]


@pytest.mark.parametrize("argv", [("inf-analyze", "1(2)^w"), ("qset", "a->ab;1->a"), ("qset", "A->a")])
def test_letters_are_lowercase_latin(argv):
    assert call(*argv)[0] == EXIT_USAGE
