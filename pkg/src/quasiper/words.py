"""Finite words over an explicit indexed alphabet, and their covers.

Letters are small integers indexing into an :class:`Alphabet`; the alphabet
only supplies printable symbols.  Everything here is pure value semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from string import ascii_lowercase
from typing import Iterator, Optional, Sequence, Union


class AlphabetMismatch(ValueError):
    """Raised when words over different alphabets are combined."""


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("alphabet must have at least one letter")
        if any(len(s) != 1 for s in self.symbols):
            raise ValueError(f"alphabet symbols must be single characters: {self.symbols!r}")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate alphabet symbols: {self.symbols!r}")

    @classmethod
    def latin(cls, size: int) -> "Alphabet":
        if not 1 <= size <= 26:
            raise ValueError("latin alphabets have between 1 and 26 letters")
        return cls(tuple(ascii_lowercase[:size]))

    @classmethod
    def of(cls, text: str) -> "Alphabet":
        """Smallest alphabet (sorted) containing every character of ``text``."""
        return cls(tuple(sorted(set(text))))

    def __len__(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise ValueError(f"letter {symbol!r} not in alphabet {''.join(self.symbols)!r}") from None

    def word(self, text: str) -> "Word":
        return Word(tuple(self.index(ch) for ch in text), self)

    def letter(self, i: int) -> "Word":
        return Word._raw((i,), self)

    @property
    def empty(self) -> "Word":
        return Word._raw((), self)


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        n = len(self.alphabet)
        for x in self.letters:
            if not (isinstance(x, int) and 0 <= x < n):
                raise ValueError(f"letter id {x!r} invalid for alphabet of size {n}")

    @classmethod
    def _raw(cls, letters: tuple[int, ...], alphabet: Alphabet) -> "Word":
        # Skips validation; callers guarantee the ids are in range.
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        object.__setattr__(w, "alphabet", alphabet)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, key: Union[int, slice]):
        if isinstance(key, slice):
            return Word._raw(self.letters[key], self.alphabet)
        return self.letters[key]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        _same_alphabet(self, other)
        return Word._raw(self.letters + other.letters, self.alphabet)

    def __mul__(self, k: int) -> "Word":
        if k < 0:
            raise ValueError("negative power")
        return Word._raw(self.letters * k, self.alphabet)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key < other.sort_key

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Length-lexicographic key (shorter first, then by letter order)."""
        return len(self.letters), self.letters

    def __str__(self) -> str:
        return "".join(self.alphabet.symbols[x] for x in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def count(self, letter: int) -> int:
        return self.letters.count(letter)


def _same_alphabet(*words: Word) -> None:
    first = words[0].alphabet
    for w in words[1:]:
        if w.alphabet != first:
            raise AlphabetMismatch(
                f"words over different alphabets: {''.join(first.symbols)!r} vs {''.join(w.alphabet.symbols)!r}"
            )


# -- sequence-level primitives (work on tuples, lists or str) -----------------


def failure_function(pattern: Sequence) -> list[int]:
    """Border array: ``fail[i]`` is the longest proper border of ``pattern[:i]``."""
    m = len(pattern)
    fail = [0] * (m + 1)
    if m:
        fail[0] = -1
    k = -1
    for i in range(m):
        while k >= 0 and pattern[k] != pattern[i]:
            k = fail[k]
        k += 1
        fail[i + 1] = k
    if m:
        fail[0] = 0
    return fail


def scan(text: Sequence, pattern: Sequence, fail: Optional[list[int]] = None) -> tuple[list[int], int]:
    """KMP scan of ``text`` for ``pattern``.

    Returns the start offsets of all occurrences and the length of the longest
    proper prefix of ``pattern`` that is a suffix of ``text``.
    """
    m = len(pattern)
    if m == 0:
        raise ValueError("empty pattern")
    if fail is None:
        fail = failure_function(pattern)
    occ = []
    k = 0
    for i, x in enumerate(text):
        while k > 0 and pattern[k] != x:
            k = fail[k]
        if pattern[k] == x:
            k += 1
        if k == m:
            occ.append(i - m + 1)
            k = fail[m]
    return occ, k


def chain_end(occ: Sequence[int], m: int, start: int = 0) -> int:
    """End of the connected run of occurrences (length ``m``) reachable from ``start``.

    An occurrence extends the run when it starts at or before the current end,
    so abutting occurrences chain.  ``occ`` must be sorted.
    """
    e = start
    for o in occ:
        if o > e:
            break
        if o + m > e:
            e = o + m
    return e


# -- word-level operations -----------------------------------------------------


@dataclass(frozen=True)
class CoverResult:
    quasiperiod: Optional[Word]
    cover_positions: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.quasiperiod is not None


def occurrences(w: Word, q: Word) -> list[int]:
    _same_alphabet(w, q)
    return scan(w.letters, q.letters)[0]


def borders(w: Word) -> list[int]:
    """Lengths of all non-empty proper borders of ``w``, increasing."""
    fail = failure_function(w.letters)
    out = []
    b = fail[len(w)] if len(w) else 0
    while b > 0:
        out.append(b)
        b = fail[b]
    return out[::-1]


def _covers(text: Sequence, pattern: Sequence, fail=None) -> Optional[list[int]]:
    n, m = len(text), len(pattern)
    if m >= n:
        return None
    occ, _ = scan(text, pattern, fail)
    if not occ or occ[0] != 0 or chain_end(occ, m) != n:
        return None
    return occ


def is_q_quasiperiodic(w: Word, q: Word) -> bool:
    """True iff ``w != q`` and occurrences of ``q`` cover every position of ``w``."""
    if len(q) == 0:
        raise ValueError("quasiperiod candidate must be non-empty")
    _same_alphabet(w, q)
    return _covers(w.letters, q.letters) is not None


def prefix_cover_end(w: Word, q: Word) -> int:
    """Length of the longest prefix of ``w`` covered by a chain of ``q``-occurrences from 0."""
    if len(q) == 0:
        raise ValueError("quasiperiod candidate must be non-empty")
    _same_alphabet(w, q)
    occ, _ = scan(w.letters, q.letters)
    if not occ or occ[0] != 0:
        return 0
    return chain_end(occ, len(q))


def quasiperiods(w: Word) -> list[Word]:
    """Every quasiperiod of ``w``, shortest first.

    A quasiperiod must be both a prefix and a suffix, so only borders are tried.
    """
    fail = failure_function(w.letters)
    out = []
    for b in borders(w):
        if _covers(w.letters, w.letters[:b], fail[: b + 1]) is not None:
            out.append(w[:b])
    return out


def quasiperiod(w: Word) -> CoverResult:
    """Shortest quasiperiod of ``w`` with a witnessing list of cover positions."""
    fail = failure_function(w.letters)
    for b in borders(w):
        occ = _covers(w.letters, w.letters[:b], fail[: b + 1])
        if occ is not None:
            return CoverResult(w[:b], tuple(occ))
    return CoverResult(None)


def is_quasiperiodic(w: Word) -> bool:
    return quasiperiod(w).quasiperiod is not None


def is_superprimitive(w: Word) -> bool:
    if len(w) == 0:
        raise ValueError("superprimitivity is defined for non-empty words")
    return quasiperiod(w).quasiperiod is None


def _root_length(seq: Sequence) -> int:
    n = len(seq)
    p = n - failure_function(seq)[n]
    return p if n % p == 0 else n


def primitive_root(w: Word) -> tuple[Word, int]:
    if len(w) == 0:
        raise ValueError("the empty word has no primitive root")
    p = _root_length(w.letters)
    return w[:p], len(w) // p


def is_primitive(w: Word) -> bool:
    return primitive_root(w)[1] == 1


def overlap_decomposition(q: Word, d: int) -> Optional[tuple[Word, Word, int]]:
    """Split a self-overlap of ``q`` at shift ``d`` into ``(x, y, l)``.

    When ``q[d:]`` is a border, ``q[:d] = xy``, ``q[d:] = (xy)^l x`` and
    ``q = (xy)^(l+1) x``.  ``None`` if ``q`` does not overlap itself at ``d``.
    """
    n = len(q)
    if not 0 < d < n:
        raise ValueError(f"shift {d} out of range for word of length {n}")
    if q.letters[d:] != q.letters[: n - d]:
        return None
    lam, r = divmod(n - d, d)
    return q[:r], q[r:d], lam
