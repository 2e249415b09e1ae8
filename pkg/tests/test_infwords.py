import pytest
from hypothesis import given

from quasiper import infwords as iw
from quasiper.infwords import EventuallyPeriodicWord
from quasiper.oracle import naive_is_q_quasiperiodic_inf, naive_quasiperiod_inf

from conftest import AB, W
from strategies import inf_words, words


def P(text):
    return EventuallyPeriodicWord.parse(text, AB)


@pytest.mark.parametrize("text, normal", [
    ("bb(ab)^w", "b(ba)^w"),
    ("(abab)^w", "(ab)^w"),
    ("aaa(a)^w", "(a)^w"),
    ("ab(b)^w", "a(b)^w"),
    ("(ba)^w", "(ba)^w"),
])
def test_normal_form(text, normal):
    assert str(P(text)) == normal


def test_parse_errors():
    for bad in ("ab", "a()^w", "(ab)", "a(b)^w!", "(abc)^w"):
        with pytest.raises(ValueError):
            P(bad)


@given(inf_words())
def test_normal_form_preserves_the_word(w):
    raw = str(w.preperiod) + str(w.period) * 40
    again = P(f"{w.preperiod}{w.period}({w.period})^w")
    assert again == w
    assert str(iw.prefix(w, 40)) == raw[:40]


def test_known_verdicts():
    assert iw.quasiperiod_inf(P("bb(ab)^w")) is None
    assert iw.is_q_quasiperiodic_inf(P("(ab)^w"), W("aba"))
    # A periodic word is covered by its period already.
    assert str(iw.quasiperiod_inf(P("(ab)^w"))) == "ab"
    assert iw.quasiperiod_inf(P("a(b)^w")) is None
    assert str(iw.quasiperiod_inf(P("(aab)^w"))) == "aab"
    assert str(iw.quasiperiod_inf(P("ab(aab)^w"))) == "aba"


def test_periodic_word_is_quasiperiodic():
    for text in ("(a)^w", "(ab)^w", "(aab)^w", "(abb)^w"):
        assert iw.is_quasiperiodic_inf(P(text))


@given(inf_words(max_pre=3, max_per=3))
def test_shortest_quasiperiod_matches_oracle(w):
    assert iw.quasiperiod_inf(w) == naive_quasiperiod_inf(w)


@given(inf_words(max_pre=3, max_per=3), words(min_size=1, max_size=6))
def test_q_coverage_matches_oracle(w, q):
    assert iw.is_q_quasiperiodic_inf(w, q) == naive_is_q_quasiperiodic_inf(w, q)


@given(inf_words())
def test_quasiperiod_shorter_than_twice_the_period(w):
    q = iw.quasiperiod_inf(w)
    if q is not None:
        assert len(q) < 2 * len(w.period)
