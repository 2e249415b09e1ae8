"""Cover automata: recognizing words whose image under a morphism is ``q``-covered.

A state ``(lp, ls)`` stands for the pair ``p = q[:lp]``, ``s = q[lp:lp+ls]``.
After reading ``u``, ``q[:lp+ls]`` is the longest proper prefix of ``q`` that
is a suffix of ``f(u)``, and everything of ``f(u)`` except its last ``ls``
letters is covered (or is ``q`` itself, or empty).  The run dies as soon as
those ``ls`` letters can no longer be reached by an occurrence of ``q``.

In ``finite`` mode the final states are those with ``ls == 0``; in
``infinite`` mode every state is final, so a word is accepted iff its image
is a prefix of some ``q``-covered word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .morphism import Morphism
from .words import Word, _same_alphabet, chain_end, failure_function, scan

FINITE = "finite"
INFINITE = "infinite"
MODES = (FINITE, INFINITE)


class CoverState(NamedTuple):
    lp: int
    ls: int


INITIAL = CoverState(0, 0)


def _step(q: tuple[int, ...], fail: list[int], state: CoverState, image: tuple[int, ...]) -> Optional[CoverState]:
    lp, ls = state
    m = len(q)
    t = q[: lp + ls] + image
    occ, longest = scan(t, q, fail)
    # Coverage so far ends at lp (relative to t); chain the new occurrences.
    e = chain_end(occ, m, lp)
    s2 = len(t) - e
    if s2 >= m or longest < s2:
        return None
    return CoverState(longest - s2, s2)


def transition(f: Morphism, q: Word, state: CoverState, a: int) -> Optional[CoverState]:
    """Target of ``state`` on letter ``a``, or ``None`` if the run dies."""
    if len(q) == 0:
        raise ValueError("q must be non-empty")
    lp, ls = state
    if lp < 0 or ls < 0 or lp + ls >= len(q):
        raise ValueError(f"{state} is not a state for q of length {len(q)}")
    return _step(q.letters, failure_function(q.letters), CoverState(lp, ls), f.images[a].letters)


@dataclass(frozen=True)
class CoverAutomaton:
    f: Morphism
    q: Word
    mode: str
    states: tuple[CoverState, ...]
    transitions: dict = field(hash=False, compare=True)
    initial: CoverState = INITIAL
    finals: frozenset = frozenset()

    def step(self, state: Optional[CoverState], a: int) -> Optional[CoverState]:
        if state is None:
            return None
        return self.transitions.get((state, a))

    def run(self, u: Word) -> Optional[CoverState]:
        state: Optional[CoverState] = self.initial
        for a in u.letters:
            state = self.transitions.get((state, a))
            if state is None:
                return None
        return state

    def label(self, state: CoverState) -> tuple[Word, Word]:
        """The words ``(p, s)`` encoded by ``state``."""
        return self.q[: state.lp], self.q[state.lp: state.lp + state.ls]

    def edges(self) -> list[tuple[CoverState, int, CoverState]]:
        """Transitions ordered by source discovery, then letter."""
        order = {s: i for i, s in enumerate(self.states)}
        items = sorted(self.transitions.items(), key=lambda kv: (order[kv[0][0]], kv[0][1]))
        return [(src, a, dst) for (src, a), dst in items]

    def to_dict(self) -> dict:
        def name(s: CoverState) -> str:
            p, x = self.label(s)
            return f"({p or 'ε'},{x or 'ε'})"

        sym = self.f.alphabet.symbols
        return {
            "q": str(self.q),
            "mode": self.mode,
            "states": [name(s) for s in self.states],
            "initial": name(self.initial),
            "finals": [name(s) for s in self.states if s in self.finals],
            "edges": [[name(s), sym[a], name(t)] for s, a, t in self.edges()],
        }


def build(f: Morphism, q: Word, mode: str = FINITE) -> CoverAutomaton:
    """Reachable part of the cover automaton of ``f`` for ``q``."""
    if len(q) == 0:
        raise ValueError("q must be non-empty")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    _same_alphabet(f.images[0], q)
    ql = q.letters
    fail = failure_function(ql)
    images = [img.letters for img in f.images]
    states = [INITIAL]
    seen = {INITIAL}
    trans = {}
    queue = deque([INITIAL])
    while queue:
        s = queue.popleft()
        for a, img in enumerate(images):
            t = _step(ql, fail, s, img)
            if t is None:
                continue
            trans[(s, a)] = t
            if t not in seen:
                seen.add(t)
                states.append(t)
                queue.append(t)
    if mode == FINITE:
        finals = frozenset(s for s in states if s.ls == 0)
    else:
        finals = frozenset(states)
    return CoverAutomaton(f, q, mode, tuple(states), trans, INITIAL, finals)


def accepts(A: CoverAutomaton, u: Word) -> bool:
    _same_alphabet(A.q, u)
    state = A.run(u)
    return state is not None and state in A.finals


def to_dot(A: CoverAutomaton, name: str = "cover") -> str:
    """Graphviz digraph; node ids follow BFS discovery order."""
    sym = A.f.alphabet.symbols
    ids = {s: f"s{i}" for i, s in enumerate(A.states)}
    lines = [
        f'digraph "{name}" {{',
        "  rankdir=LR;",
        f'  label="q = {A.q} ({A.mode})";',
        "  __start [shape=point];",
    ]
    for s in A.states:
        p, x = A.label(s)
        shape = "doublecircle" if s in A.finals else "circle"
        lines.append(f'  {ids[s]} [shape={shape}, label="({p or "ε"},{x or "ε"})"];')
    lines.append(f"  __start -> {ids[A.initial]};")
    grouped: dict = {}
    for src, a, dst in A.edges():
        grouped.setdefault((src, dst), []).append(sym[a])
    for (src, dst), letters in grouped.items():
        lines.append(f'  {ids[src]} -> {ids[dst]} [label="{",".join(letters)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
