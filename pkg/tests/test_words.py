from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasiper import words as wd
from quasiper.oracle import naive_is_q_quasiperiodic, naive_quasiperiod
from quasiper.words import Alphabet, AlphabetMismatch, Word

from conftest import AB, W
from strategies import strings, words


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(("a", "a"))
    with pytest.raises(ValueError):
        Alphabet(("ab",))
    with pytest.raises(ValueError):
        AB.word("abc")
    assert Alphabet.of("baab").symbols == ("a", "b")


def test_word_basics():
    w = W("abaab")
    assert len(w) == 5 and str(w[1:3]) == "ba"
    assert str(w + W("b")) == "abaabb"
    assert str(W("ab") * 3) == "ababab"
    assert W("b") < W("aa") and W("aa") < W("ab")
    with pytest.raises(AlphabetMismatch):
        w + Alphabet.latin(3).word("c")


def test_running_example():
    w = W("ababaabababaabababa")
    assert str(wd.quasiperiod(w).quasiperiod) == "aba"
    assert [str(q) for q in wd.quasiperiods(w)] == ["aba", "ababa", "ababaabababa"]


@pytest.mark.parametrize("text, expected", [
    ("ab", None), ("a", None), ("aa", "a"), ("abaab", None), ("abaaba", "aba"), ("aabaa", None),
    ("abaababaab", "abaab"),
])
def test_quasiperiod_small(text, expected):
    q = wd.quasiperiod(W(text)).quasiperiod
    assert (None if q is None else str(q)) == expected


def test_empty_word():
    assert wd.quasiperiod(AB.empty).quasiperiod is None
    with pytest.raises(ValueError):
        wd.is_superprimitive(AB.empty)
    with pytest.raises(ValueError):
        wd.is_q_quasiperiodic(W("aa"), AB.empty)


def test_word_is_not_its_own_quasiperiod():
    assert not wd.is_q_quasiperiodic(W("aba"), W("aba"))
    assert wd.is_q_quasiperiodic(W("ababa"), W("aba"))


def test_exhaustive_agreement_with_oracle():
    for n in range(11):
        for t in product("ab", repeat=n):
            w = W("".join(t))
            assert wd.quasiperiod(w).quasiperiod == naive_quasiperiod(w), str(w)


@given(words(), words(min_size=1, max_size=4))
def test_q_coverage_matches_oracle(w, q):
    assert wd.is_q_quasiperiodic(w, q) == naive_is_q_quasiperiodic(str(w), str(q))


@given(words(min_size=1, max_size=20))
def test_cover_positions_cover(w):
    res = wd.quasiperiod(w)
    if res.quasiperiod is None:
        assert wd.is_superprimitive(w)
        return
    m = len(res.quasiperiod)
    covered = set()
    for i in res.cover_positions:
        assert w[i: i + m] == res.quasiperiod
        covered.update(range(i, i + m))
    assert covered == set(range(len(w)))


@given(words(min_size=1, max_size=16))
def test_quasiperiod_is_superprimitive(w):
    # The shortest cover cannot itself be covered by something shorter.
    q = wd.quasiperiod(w).quasiperiod
    if q is not None:
        assert wd.is_superprimitive(q)
        assert len(q) in wd.borders(w)


@given(words(min_size=1, max_size=16), st.integers(2, 4))
def test_powers_are_quasiperiodic(w, k):
    assert wd.is_q_quasiperiodic(w * k, w)


@given(words(min_size=1, max_size=12), st.integers(1, 4))
def test_primitive_root(w, k):
    root, e = wd.primitive_root(w * k)
    assert root * e == w * k
    assert wd.is_primitive(root)
    assert e % k == 0 or wd.primitive_root(w)[0] == root


@given(words(max_size=14))
def test_borders_against_definition(w):
    expected = [b for b in range(1, len(w)) if w[:b] == w[len(w) - b:]]
    assert wd.borders(w) == expected


@given(words(max_size=14), words(min_size=1, max_size=4))
def test_occurrences_against_definition(w, q):
    expected = [i for i in range(len(w) - len(q) + 1) if w[i: i + len(q)] == q]
    assert wd.occurrences(w, q) == expected


@given(strings(min_size=1, max_size=8), st.integers(1, 7))
def test_overlap_decomposition(text, d):
    q = W(text)
    if d >= len(q):
        with pytest.raises(ValueError):
            wd.overlap_decomposition(q, d)
        return
    dec = wd.overlap_decomposition(q, d)
    if q[d:] != q[: len(q) - d]:
        assert dec is None
        return
    x, y, lam = dec
    assert x + y == q[:d]
    assert (x + y) * (lam + 1) + x == q


def test_prefix_cover_end():
    w = W("abaababaab")
    assert wd.prefix_cover_end(w, W("aba")) == 8
    assert wd.prefix_cover_end(w, W("ba")) == 0
    assert wd.prefix_cover_end(w, W("abaab")) == 10
