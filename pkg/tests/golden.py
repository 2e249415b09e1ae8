"""Hand-transcribed cover automata, with state names chosen independently.

Each entry: (morphism, q, initial, finals, edges).  States are compared up to
renaming, so the names below only need to be consistent within an entry.
"""

from quasiper.coverauto import CoverAutomaton

GOLDEN = {
    "ab_aba/aba": (
        "a->ab;b->aba", "aba", "0", {"0", "2"},
        [("0", "a", "1"), ("0", "b", "2"), ("1", "a", "3"), ("1", "b", "2"),
         ("2", "a", "1"), ("2", "b", "2"), ("3", "a", "3"), ("3", "b", "2")],
    ),
    "abaaba_baabaaba/aba": (
        "a->abaaba;b->baabaaba", "aba", "i", {"i", "p"},
        [("i", "a", "p"), ("p", "a", "p"), ("p", "b", "p")],
    ),
    "abaaba_baabaaba/baaba": (
        "a->abaaba;b->baabaaba", "baaba", "i", {"i", "p"},
        [("i", "b", "p"), ("p", "a", "p"), ("p", "b", "p")],
    ),
    "ternary/aabaa": (
        "a->aabaab;b->aabaaaba;c->aabaababaabaa", "aabaa", "i", {"i"},
        [("i", "a", "x"), ("i", "b", "y"), ("x", "a", "x"), ("x", "b", "y"),
         ("y", "a", "x"), ("y", "b", "y")],
    ),
}


def isomorphic(A: CoverAutomaton, initial, finals, edges) -> bool:
    """Deterministic automata are isomorphic iff the walk from the start matches."""
    sym = A.f.alphabet.symbols
    theirs = {(s, a): t for s, a, t in edges}
    ours = {(s, sym[a]): t for (s, a), t in A.transitions.items()}
    if len(theirs) != len(ours):
        return False
    states = {s for s, _, _ in edges} | {t for _, _, t in edges} | {initial}
    if len(states) != len(A.states):
        return False
    match = {A.initial: initial}
    stack = [A.initial]
    while stack:
        s = stack.pop()
        if (s in A.finals) != (match[s] in finals):
            return False
        for a in sym:
            t, u = ours.get((s, a)), theirs.get((match[s], a))
            if (t is None) != (u is None):
                return False
            if t is None:
                continue
            if t in match:
                if match[t] != u:
                    return False
            else:
                if u in match.values():
                    return False
                match[t] = u
                stack.append(t)
    return len(match) == len(states)
