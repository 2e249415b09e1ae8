"""Eventually periodic infinite words ``x y^w`` and their quasiperiodicity."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .words import (
    Alphabet,
    Word,
    _root_length,
    _same_alphabet,
    chain_end,
    failure_function,
    scan,
)

_INF_RE = re.compile(r"^\s*([^()\s]*)\(([^()\s]+)\)\^(?:w|ω)\s*$")


@dataclass(frozen=True)
class EventuallyPeriodicWord:
    preperiod: Word
    period: Word

    def __post_init__(self) -> None:
        if len(self.period) == 0:
            raise ValueError("period must be non-empty")
        _same_alphabet(self.preperiod, self.period)

    @property
    def alphabet(self) -> Alphabet:
        return self.period.alphabet

    @classmethod
    def parse(cls, text: str, alphabet: Optional[Alphabet] = None) -> "EventuallyPeriodicWord":
        """Parse ``x(y)^w``; the result is normalized."""
        m = _INF_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse infinite word {text!r}; expected e.g. 'bb(ab)^w'")
        x, y = m.groups()
        if alphabet is None:
            alphabet = Alphabet.of(x + y)
        return normalize(alphabet.word(x), alphabet.word(y))

    def __str__(self) -> str:
        return f"{self.preperiod}({self.period})^w"

    def __repr__(self) -> str:
        return f"EventuallyPeriodicWord({str(self)!r})"

    @property
    def sort_key(self):
        return (len(self.preperiod) + len(self.period), self.preperiod.letters, self.period.letters)


def normalize(x: Word, y: Word) -> EventuallyPeriodicWord:
    """Canonical form of ``x y^w``: primitive period, shortest preperiod."""
    if len(y) == 0:
        raise ValueError("period must be non-empty")
    _same_alphabet(x, y)
    per = y.letters[: _root_length(y.letters)]
    pre = x.letters
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = per[-1:] + per[:-1]
    return EventuallyPeriodicWord(Word._raw(pre, x.alphabet), Word._raw(per, x.alphabet))


def _prefix_letters(w: EventuallyPeriodicWord, n: int) -> tuple[int, ...]:
    pre, per = w.preperiod.letters, w.period.letters
    if n <= len(pre):
        return pre[:n]
    rest = n - len(pre)
    reps = -(-rest // len(per))
    return pre + (per * reps)[:rest]


def prefix(w: EventuallyPeriodicWord, n: int) -> Word:
    if n < 0:
        raise ValueError("prefix length must be non-negative")
    return Word._raw(_prefix_letters(w, n), w.alphabet)


def _covered(w: EventuallyPeriodicWord, q: tuple[int, ...], fail=None) -> bool:
    # Occurrence starts >= |x| repeat with period |y|.  Any position p >= |x|+|q|-1
    # can only be covered by such starts, so covering [0, |x|+|y|+|q|) settles
    # every later position by translation.
    m = len(q)
    window = len(w.preperiod) + len(w.period) + m
    text = _prefix_letters(w, window + m - 1)
    occ, _ = scan(text, q, fail)
    occ = [o for o in occ if o < window]
    if not occ or occ[0] != 0:
        return False
    return chain_end(occ, m) >= window


def is_q_quasiperiodic_inf(w: EventuallyPeriodicWord, q: Word) -> bool:
    """True iff occurrences of ``q`` cover every position of the infinite word."""
    if len(q) == 0:
        raise ValueError("quasiperiod candidate must be non-empty")
    _same_alphabet(w.period, q)
    return _covered(w, q.letters)


def quasiperiod_inf(w: EventuallyPeriodicWord) -> Optional[Word]:
    """Shortest quasiperiod of ``w`` (assumed normalized), or ``None``.

    The shortest quasiperiod is superprimitive, and a superprimitive cover of a
    word with primitive period ``y`` is shorter than ``2|y|``.
    """
    bound = 2 * len(w.period) - 1
    text = _prefix_letters(w, bound)
    fail = failure_function(text)
    for n in range(1, bound + 1):
        if _covered(w, text[:n], fail[: n + 1]):
            return Word._raw(text[:n], w.alphabet)
    return None


def is_quasiperiodic_inf(w: EventuallyPeriodicWord) -> bool:
    return quasiperiod_inf(w) is not None
