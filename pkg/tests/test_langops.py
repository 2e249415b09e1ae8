from itertools import product

import pytest
from hypothesis import given, settings

from quasiper.classify import candidate_quasiperiods
from quasiper.coverauto import FINITE, INFINITE, accepts, build
from quasiper.langops import ResourceLimitExceeded, enumerate_accepted, product_bound, union_universal

from conftest import AB, M, W
from strategies import morphisms


def _all_words(sigma, n):
    for k in range(n + 1):
        for t in product(range(len(sigma)), repeat=k):
            yield sigma.word("".join(sigma.symbols[i] for i in t))


def test_universal_example():
    f = M("a->abaaba;b->baabaaba")
    automata = [build(f, q) for q in candidate_quasiperiods(f)]
    res = union_universal(automata)
    assert res.universal and res.counterexample is None
    assert res.explored <= res.bound == product_bound(automata)


def test_non_universal_counterexample():
    f = M("a->ab;b->aba")
    res = union_universal([build(f, q) for q in candidate_quasiperiods(f)])
    assert not res.universal
    # f(a) = ab is itself a candidate, so the first uncovered word is ba -> abaab.
    assert str(res.counterexample) == "ba"


def test_empty_union_needs_alphabet():
    with pytest.raises(ValueError):
        union_universal([])
    res = union_universal([], AB)
    assert not res.universal and len(res.counterexample) == 0


def test_resource_ceiling():
    f = M("a->ab;b->aba")
    with pytest.raises(ResourceLimitExceeded):
        union_universal([build(f, q) for q in candidate_quasiperiods(f)], max_states=1)


@settings(max_examples=50)
@given(morphisms(max_len=3))
def test_counterexample_is_shortest_rejected(f):
    for mode in (FINITE, INFINITE):
        automata = [build(f, q, mode) for q in candidate_quasiperiods(f)]
        res = union_universal(automata, f.alphabet)
        rejected = None
        for u in _all_words(f.alphabet, 5):
            if not any(accepts(A, u) for A in automata):
                rejected = u
                break
        if res.universal:
            assert rejected is None
        elif len(res.counterexample) <= 5:
            assert res.counterexample == rejected


@settings(max_examples=50)
@given(morphisms(max_len=3))
def test_enumeration_matches_membership(f):
    A = build(f, f.images[0])
    expected = [u for u in _all_words(f.alphabet, 5) if accepts(A, u)]
    assert enumerate_accepted(A, 5) == expected


def test_enumerate_rejects_negative_length():
    with pytest.raises(ValueError):
        enumerate_accepted(build(M("a->aa;b->a"), W("a")), -1)
