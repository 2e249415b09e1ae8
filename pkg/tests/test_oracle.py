import json

import pytest

from quasiper.classify import FALSE, TRUE
from quasiper.oracle import (
    all_morphisms, automaton_oracle_check, naive_accepts, naive_is_q_quasiperiodic, naive_quasiperiod,
    overlap_samples, sweep,
)

from conftest import AB, M, W


@pytest.fixture(scope="module")
def sweep2():
    return sweep(2, 2)


def test_naive_checks():
    assert str(naive_quasiperiod(W("ababaabababaabababa"))) == "aba"
    assert naive_quasiperiod(W("ab")) is None
    assert not naive_is_q_quasiperiodic("aba", "aba")
    assert naive_accepts(M("a->ab;b->aba"), "aba", "")
    assert naive_accepts(M("a->ab;b->aba"), "aba", "a", "infinite")
    assert not naive_accepts(M("a->ab;b->aba"), "aba", "a")


def test_all_morphisms_count():
    assert len(all_morphisms(2, 2)) == 36
    assert len(all_morphisms(2, 3)) == 196
    assert len(all_morphisms(1, 3)) == 3


def test_oracle_check_examples():
    assert automaton_oracle_check(M("a->ab;b->aba"), W("aba"), 6)
    f = M("a->aabaab;b->aabaaaba;c->aabaababaabaa")
    assert automaton_oracle_check(f, f.alphabet.word("aabaa"), 5)


def test_sweep_two(sweep2):
    assert sweep2.violations == []
    assert sweep2.find("a->aa;b->bb").report.weak_finite.status == TRUE
    row = sweep2.find("a->aa;b->a").report
    assert (row.strong_infinite.status, row.strong_finite.status) == (TRUE, FALSE)
    with pytest.raises(KeyError):
        sweep2.find("a->aaaa;b->b")


def test_sweep_outputs(sweep2):
    data = json.loads(sweep2.to_json())
    assert data["schema"] == "quasiper/1"
    assert [r["index"] for r in data["rows"]] == list(range(36))
    lines = sweep2.to_csv().splitlines()
    assert len(lines) == 37 and lines[0].startswith("index,morphism,")


def test_parallel_sweep_matches_sequential(sweep2):
    assert sweep(2, 2, workers=2).to_json() == sweep2.to_json()


def test_overlap_samples_are_seeded():
    a = overlap_samples(20, seed=3)
    b = overlap_samples(20, seed=3)
    assert [(str(f), u, v, k) for f, u, v, k, _, _ in a] == [(str(f), u, v, k) for f, u, v, k, _, _ in b]
    assert all(qu == qb for *_, qu, qb in a)
