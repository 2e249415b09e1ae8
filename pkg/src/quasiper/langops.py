"""Language operations over partial deterministic cover automata."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence

from .coverauto import CoverAutomaton
from .words import Alphabet, Word

DEFAULT_MAX_PRODUCT_STATES = 5_000_000


class ResourceLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class UniversalityResult:
    universal: bool
    counterexample: Optional[Word]
    explored: int
    bound: int

    def __bool__(self) -> bool:
        return self.universal


def product_bound(automata: Sequence[CoverAutomaton]) -> int:
    """Upper bound on reachable product states (each component may also be sunk)."""
    return prod(len(A.states) + 1 for A in automata)


def _common_alphabet(automata: Sequence[CoverAutomaton], alphabet: Optional[Alphabet]) -> Alphabet:
    alphabets = {A.f.alphabet for A in automata}
    if alphabet is not None:
        alphabets.add(alphabet)
    if len(alphabets) != 1:
        raise ValueError("automata are over different alphabets")
    return alphabets.pop()


def union_universal(
    automata: Sequence[CoverAutomaton],
    alphabet: Optional[Alphabet] = None,
    max_states: int = DEFAULT_MAX_PRODUCT_STATES,
) -> UniversalityResult:
    """Is every word accepted by at least one automaton?

    BFS over the product of the sink-completed automata, letters in alphabet
    order, so the returned counterexample is the length-lex smallest word
    rejected by all of them.
    """
    if not automata and alphabet is None:
        raise ValueError("an alphabet is required when no automaton is given")
    sigma = _common_alphabet(automata, alphabet)
    bound = product_bound(automata)
    letters = range(len(sigma))
    tables = [A.transitions for A in automata]
    finals = [A.finals for A in automata]

    def bad(state) -> bool:
        return not any(s is not None and s in fin for s, fin in zip(state, finals))

    start = tuple(A.initial for A in automata)
    parent = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if bad(state):
            word = []
            while parent[state] is not None:
                state, a = parent[state]
                word.append(a)
            return UniversalityResult(False, Word._raw(tuple(reversed(word)), sigma), len(parent), bound)
        for a in letters:
            nxt = tuple(None if s is None else tab.get((s, a)) for s, tab in zip(state, tables))
            if nxt not in parent:
                parent[nxt] = (state, a)
                if len(parent) > max_states:
                    raise ResourceLimitExceeded(
                        f"product exploration exceeded {max_states} states (bound {bound})"
                    )
                queue.append(nxt)
    return UniversalityResult(True, None, len(parent), bound)


def enumerate_accepted(A: CoverAutomaton, max_len: int) -> list[Word]:
    """All accepted words of length at most ``max_len``, length-lex ordered."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    sigma = A.f.alphabet
    out = []
    layer = [((), A.initial)]
    for n in range(max_len + 1):
        out.extend(Word._raw(w, sigma) for w, s in layer if s in A.finals)
        if n == max_len:
            break
        layer = [
            (w + (a,), A.transitions[(s, a)])
            for w, s in layer
            for a in range(len(sigma))
            if (s, a) in A.transitions
        ]
    return out
