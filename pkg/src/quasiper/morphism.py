"""Non-erasing morphisms given by letter-image tables."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .infwords import EventuallyPeriodicWord, normalize
from .words import Alphabet, Word, _root_length, _same_alphabet


@dataclass(frozen=True)
class Morphism:
    alphabet: Alphabet
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.alphabet):
            raise ValueError("need exactly one image per letter")
        for i, img in enumerate(self.images):
            if img.alphabet != self.alphabet:
                raise ValueError(f"image of {self.alphabet.symbols[i]!r} is over another alphabet")
            if len(img) == 0:
                raise ValueError(f"erasing rule for {self.alphabet.symbols[i]!r}: images must be non-empty")

    @classmethod
    def parse(cls, text: str) -> "Morphism":
        """Parse ``a->ab;b->aba``.  The alphabet is the sorted set of rule letters."""
        rules = {}
        for part in text.split(";"):
            part = part.strip()
            if not part:
                continue
            lhs, sep, rhs = part.partition("->")
            lhs, rhs = lhs.strip(), rhs.strip()
            if not sep or len(lhs) != 1:
                raise ValueError(f"bad rule {part!r}; expected e.g. 'a->ab'")
            if lhs in rules:
                raise ValueError(f"duplicate rule for {lhs!r}")
            if not rhs:
                raise ValueError(f"erasing rule {part!r}: images must be non-empty")
            rules[lhs] = rhs
        if not rules:
            raise ValueError("empty morphism")
        return cls.from_images(rules)

    @classmethod
    def from_images(cls, rules: dict[str, str]) -> "Morphism":
        alphabet = Alphabet(tuple(sorted(rules)))
        missing = set("".join(rules.values())) - set(rules)
        if missing:
            raise ValueError(f"no rule for letters {''.join(sorted(missing))!r}")
        return cls(alphabet, tuple(alphabet.word(rules[s]) for s in alphabet.symbols))

    def __str__(self) -> str:
        return ";".join(f"{s}->{img}" for s, img in zip(self.alphabet.symbols, self.images))

    def __repr__(self) -> str:
        return f"Morphism({str(self)!r})"

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def image_letters(self, letters: Sequence[int]) -> tuple[int, ...]:
        out: list[int] = []
        for x in letters:
            out.extend(self.images[x].letters)
        return tuple(out)

    @property
    def min_image_length(self) -> int:
        return min(len(img) for img in self.images)


def _check(f: Morphism, w: Word) -> None:
    if w.alphabet != f.alphabet:
        _same_alphabet(f.images[0], w)


def apply(f: Morphism, w: Word) -> Word:
    _check(f, w)
    return Word._raw(f.image_letters(w.letters), f.alphabet)


def apply_inf(f: Morphism, w: EventuallyPeriodicWord) -> EventuallyPeriodicWord:
    return normalize(apply(f, w.preperiod), apply(f, w.period))


def compose(f: Morphism, g: Morphism) -> Morphism:
    """The morphism ``f o g`` (apply ``g`` first)."""
    _same_alphabet(f.images[0], g.images[0])
    return Morphism(f.alphabet, tuple(apply(f, img) for img in g.images))


def compose_power(f: Morphism, k: int) -> Morphism:
    if k < 1:
        raise ValueError("power must be at least 1")
    g = f
    for _ in range(k - 1):
        g = compose(f, g)
    return g


def primitive_root_morphism(f: Morphism) -> Morphism:
    return Morphism(f.alphabet, tuple(img[: _root_length(img.letters)] for img in f.images))


def is_letter_power(f: Morphism) -> bool:
    """Every image is a power of its own letter (``f(a) = a^k``)."""
    return all(set(img.letters) == {a} for a, img in enumerate(f.images))


# -- codes ---------------------------------------------------------------------


@dataclass(frozen=True)
class CodeViolation:
    """Why the letter images fail to be a prefix code, a suffix code, or a code.

    ``pair = (x, y)`` means ``f(x)`` is a prefix (or suffix) of ``f(y)``.
    For ``non-code``, ``trace = (u, v)`` are distinct words with ``f(u) = f(v)``.
    """

    kind: str
    pair: Optional[tuple[int, int]] = None
    trace: Optional[tuple[Word, Word]] = None

    def replay(self, f: Morphism) -> bool:
        if self.kind == "non-code":
            u, v = self.trace
            return u != v and apply(f, u) == apply(f, v)
        x, y = self.pair
        fx, fy = f.images[x].letters, f.images[y].letters
        if self.kind == "prefix":
            return x != y and fy[: len(fx)] == fx
        return x != y and len(fx) <= len(fy) and fy[len(fy) - len(fx):] == fx


def sardinas_patterson(codewords: Sequence[Sequence]) -> Optional[tuple[list[int], list[int]]]:
    """Decide whether ``codewords`` form a code.

    Returns ``None`` for a code, otherwise two distinct index sequences whose
    concatenations are equal.  BFS over dangling suffixes, so the witness is
    found through the fewest extension steps.
    """
    cws = [tuple(c) for c in codewords]
    if any(len(c) == 0 for c in cws):
        raise ValueError("codewords must be non-empty")
    queue: deque = deque()
    seen = set()
    for i, ci in enumerate(cws):
        for j, cj in enumerate(cws):
            if i == j or len(ci) > len(cj) or cj[: len(ci)] != ci:
                continue
            if len(ci) == len(cj):
                return [i], [j]
            d = cj[len(ci):]
            if d not in seen:
                seen.add(d)
                queue.append((d, [j], [i]))
    while queue:
        # ``ahead`` spells ``behind`` followed by the dangling suffix ``d``.
        d, ahead, behind = queue.popleft()
        for k, c in enumerate(cws):
            if c == d:
                return ahead, behind + [k]
            if len(c) < len(d) and d[: len(c)] == c:
                nd, na, nb = d[len(c):], ahead, behind + [k]
            elif len(c) > len(d) and c[: len(d)] == d:
                nd, na, nb = c[len(d):], behind + [k], ahead
            else:
                continue
            if nd not in seen:
                seen.add(nd)
                queue.append((nd, na, nb))
    return None


def code_violation(f: Morphism) -> Optional[CodeViolation]:
    n = len(f.alphabet)
    imgs = [img.letters for img in f.images]
    for x in range(n):
        for y in range(n):
            if x != y and len(imgs[x]) <= len(imgs[y]) and imgs[y][: len(imgs[x])] == imgs[x]:
                return CodeViolation("prefix", (x, y))
    for x in range(n):
        for y in range(n):
            if x != y and len(imgs[x]) <= len(imgs[y]) and imgs[y][len(imgs[y]) - len(imgs[x]):] == imgs[x]:
                return CodeViolation("suffix", (x, y))
    found = sardinas_patterson(imgs)
    if found is not None:
        u, v = found
        return CodeViolation("non-code", trace=(Word._raw(tuple(u), f.alphabet), Word._raw(tuple(v), f.alphabet)))
    return None


# -- growth and fixed points ---------------------------------------------------


def growing_letters(f: Morphism) -> frozenset[int]:
    """Letters ``a`` with ``|f^n(a)| -> infinity``.

    In the letter graph (``a -> c`` when ``c`` occurs in ``f(a)``), ``a`` grows
    iff it reaches a letter lying on a cycle whose image has length >= 2.
    """
    n = len(f.alphabet)
    succ = [set(img.letters) for img in f.images]

    def reach(a: int) -> set[int]:
        seen, stack = {a}, [a]
        while stack:
            for c in succ[stack.pop()]:
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        return seen

    reachable = [reach(a) for a in range(n)]
    on_cycle = {b for b in range(n) if any(b in reachable[c] for c in succ[b])}
    expanding = {b for b in on_cycle if len(f.images[b]) >= 2}
    return frozenset(a for a in range(n) if reachable[a] & expanding)


def is_growing(f: Morphism) -> bool:
    return len(growing_letters(f)) == len(f.alphabet)


def is_prolongable(f: Morphism, a: int) -> bool:
    img = f.images[a].letters
    return len(img) >= 2 and img[0] == a


def fixed_point_prefix(f: Morphism, a: int, n: int) -> Word:
    """Length-``n`` prefix of the fixed point ``f^w(a)``."""
    if not is_prolongable(f, a):
        raise ValueError(f"{f} is not prolongable on {f.alphabet.symbols[a]!r}")
    w: tuple[int, ...] = (a,)
    while len(w) < n:
        w = f.image_letters(w)
    return Word._raw(w[:n], f.alphabet)
