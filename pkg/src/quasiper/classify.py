"""Classifying a morphism into the four quasiperiodicity families.

Strong quasiperiodicity (on finite and on infinite words) is decided exactly
with cover automata.  Weak quasiperiodicity is only semi-decided: a list of
sufficient conditions and bounded searches produces verified witnesses, and
``false`` is reported only where a structural rule proves it.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from itertools import permutations, product
from typing import NamedTuple, Optional, Sequence, Union

from . import infwords as iw
from . import words as wd
from .coverauto import FINITE, INFINITE, CoverAutomaton, build
from .infwords import EventuallyPeriodicWord, normalize
from .langops import DEFAULT_MAX_PRODUCT_STATES, union_universal
from .morphism import (
    Morphism,
    apply,
    apply_inf,
    code_violation,
    compose_power,
    fixed_point_prefix,
    is_growing,
    is_letter_power,
    is_prolongable,
)
from .words import Alphabet, Word

SCHEMA = "quasiper/1"

TRUE = "true"
FALSE = "false"
UNKNOWN = "unknown"


class InvariantViolation(AssertionError):
    """A report or certificate contradicts something proven to hold."""


@dataclass(frozen=True)
class Budget:
    max_word_len: int = 8
    max_preperiod_len: int = 3
    max_period_len: int = 3
    imprimitivity_bound: int = 6
    iterates: int = 3
    fixed_point_len: int = 256
    max_product_states: int = DEFAULT_MAX_PRODUCT_STATES

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "Budget":
        return cls(**data)


# -- certificates --------------------------------------------------------------

AnyWord = Union[Word, EventuallyPeriodicWord]


def _enc(w: Optional[AnyWord]) -> Optional[str]:
    return None if w is None else str(w)


def _dec(s: Optional[str], alphabet: Alphabet) -> Optional[AnyWord]:
    if s is None:
        return None
    if s.endswith(")^w"):
        return EventuallyPeriodicWord.parse(s, alphabet)
    return alphabet.word(s)


@dataclass(frozen=True)
class AutomatonSummary:
    q: Word
    states: int
    transitions: int
    universal_from_start: bool

    def to_dict(self) -> dict:
        return {"q": str(self.q), "states": self.states, "transitions": self.transitions,
                "universal_from_start": self.universal_from_start}

    @classmethod
    def from_dict(cls, d: dict, alphabet: Alphabet) -> "AutomatonSummary":
        return cls(alphabet.word(d["q"]), d["states"], d["transitions"], d["universal_from_start"])


@dataclass(frozen=True)
class CoveringCertificate:
    """Every word is accepted by the cover automaton of some candidate quasiperiod."""

    mode: str
    automata: tuple[AutomatonSummary, ...]
    explored: int
    bound: int
    # For each letter, the first candidate whose automaton accepts every word
    # starting with that letter (None if no single candidate does).
    first_letter_quasiperiods: tuple[Optional[Word], ...]
    gaps: tuple[tuple[Word, Word], ...] = ()

    kind = "covering"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "mode": self.mode,
            "automata": [a.to_dict() for a in self.automata],
            "explored": self.explored,
            "bound": self.bound,
            "first_letter_quasiperiods": [_enc(q) for q in self.first_letter_quasiperiods],
            "gaps": [[str(q), str(u)] for q, u in self.gaps],
        }

    @classmethod
    def from_dict(cls, d: dict, alphabet: Alphabet) -> "CoveringCertificate":
        return cls(
            d["mode"],
            tuple(AutomatonSummary.from_dict(a, alphabet) for a in d["automata"]),
            d["explored"],
            d["bound"],
            tuple(_dec(q, alphabet) for q in d["first_letter_quasiperiods"]),
            tuple((alphabet.word(q), alphabet.word(u)) for q, u in d["gaps"]),
        )


@dataclass(frozen=True)
class Counterexample:
    """A word rejected by every cover automaton (or a letter with superprimitive image)."""

    reason: str
    word: Word
    image: Word
    image_quasiperiod: Optional[Word]
    nonqp_word: Optional[AnyWord] = None

    kind = "counterexample"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "reason": self.reason,
            "word": str(self.word),
            "image": str(self.image),
            "image_quasiperiod": _enc(self.image_quasiperiod),
            "nonqp_word": _enc(self.nonqp_word),
        }

    @classmethod
    def from_dict(cls, d: dict, alphabet: Alphabet) -> "Counterexample":
        return cls(
            d["reason"],
            alphabet.word(d["word"]),
            alphabet.word(d["image"]),
            _dec(d["image_quasiperiod"], alphabet),
            _dec(d["nonqp_word"], alphabet),
        )


@dataclass(frozen=True)
class Witness:
    """A non-quasiperiodic word whose image is ``quasiperiod``-quasiperiodic."""

    rule: str
    word: AnyWord
    image: AnyWord
    quasiperiod: Word
    image_quasiperiod: Word

    kind = "witness"

    @property
    def infinite(self) -> bool:
        return isinstance(self.word, EventuallyPeriodicWord)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "rule": self.rule,
            "word": str(self.word),
            "image": str(self.image),
            "quasiperiod": str(self.quasiperiod),
            "image_quasiperiod": str(self.image_quasiperiod),
        }

    @classmethod
    def from_dict(cls, d: dict, alphabet: Alphabet) -> "Witness":
        return cls(
            d["rule"],
            _dec(d["word"], alphabet),
            _dec(d["image"], alphabet),
            alphabet.word(d["quasiperiod"]),
            alphabet.word(d["image_quasiperiod"]),
        )


@dataclass(frozen=True)
class SufficientCondition:
    rule: str
    detail: str

    kind = "sufficient-condition"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "rule": self.rule, "detail": self.detail}

    @classmethod
    def from_dict(cls, d: dict, alphabet: Alphabet) -> "SufficientCondition":
        return cls(d["rule"], d["detail"])


@dataclass(frozen=True)
class BudgetExhausted:
    budget: Budget
    searched: tuple[tuple[str, int], ...] = ()
    heuristic: Optional[tuple[str, Word]] = None

    kind = "budget-exhausted"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "budget": self.budget.to_dict(),
            "searched": dict(self.searched),
            "heuristic": None if self.heuristic is None else
            {"rule": self.heuristic[0], "quasiperiod": str(self.heuristic[1])},
        }

    @classmethod
    def from_dict(cls, d: dict, alphabet: Alphabet) -> "BudgetExhausted":
        h = d["heuristic"]
        return cls(
            Budget.from_dict(d["budget"]),
            tuple(d["searched"].items()),
            None if h is None else (h["rule"], alphabet.word(h["quasiperiod"])),
        )


Certificate = Union[CoveringCertificate, Counterexample, Witness, SufficientCondition, BudgetExhausted]
_CERTIFICATES = {c.kind: c for c in (CoveringCertificate, Counterexample, Witness, SufficientCondition, BudgetExhausted)}


@dataclass(frozen=True)
class Verdict:
    status: str
    certificate: Certificate

    def __post_init__(self) -> None:
        if self.status not in (TRUE, FALSE, UNKNOWN):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == UNKNOWN) != isinstance(self.certificate, BudgetExhausted):
            raise InvariantViolation("unknown verdicts, and only they, carry BudgetExhausted")

    def to_dict(self) -> dict:
        return {"status": self.status, "certificate": self.certificate.to_dict()}

    @classmethod
    def from_dict(cls, d: dict, alphabet: Alphabet) -> "Verdict":
        cert = d["certificate"]
        return cls(d["status"], _CERTIFICATES[cert["kind"]].from_dict(cert, alphabet))


FAMILIES = ("strong_finite", "strong_infinite", "weak_finite", "weak_infinite")


@dataclass(frozen=True)
class FamilyReport:
    morphism: Morphism
    strong_finite: Verdict
    strong_infinite: Verdict
    weak_finite: Verdict
    weak_infinite: Verdict
    budget: Budget = Budget()
    timings: dict = field(default_factory=dict, compare=False)

    def statuses(self) -> tuple[str, str, str, str]:
        return tuple(getattr(self, k).status for k in FAMILIES)

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "schema": SCHEMA,
            "morphism": str(self.morphism),
            "budgets": self.budget.to_dict(),
            "verdicts": {k: getattr(self, k).to_dict() for k in FAMILIES},
        }
        if timings:
            out["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "FamilyReport":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {d.get('schema')!r}")
        f = Morphism.parse(d["morphism"])
        verdicts = {k: Verdict.from_dict(d["verdicts"][k], f.alphabet) for k in FAMILIES}
        return cls(f, budget=Budget.from_dict(d["budgets"]), timings=d.get("timings", {}), **verdicts)


def check_consistency(report: FamilyReport) -> None:
    """Raise if the report contradicts the basic inclusions between the families."""
    sf, si, wf, wi = report.statuses()
    problems = []
    if sf == TRUE and si != TRUE:
        problems.append("strong on finite words but not strong on infinite words")
    if sf == TRUE and wf != TRUE:
        problems.append("strong on finite words but not weak on finite words")
    if si == TRUE and len(report.morphism.alphabet) >= 2 and wi != TRUE:
        problems.append("strong on infinite words but not weak on infinite words")
    if problems:
        raise InvariantViolation(f"{report.morphism}: " + "; ".join(problems))


# -- candidate quasiperiods ----------------------------------------------------


def _factors(seq: tuple[int, ...], max_len: int) -> set[tuple[int, ...]]:
    n = len(seq)
    return {seq[i:j] for i in range(n) for j in range(i + 1, min(n, i + max_len) + 1)}


def candidate_quasiperiods(f: Morphism) -> list[Word]:
    """Non-empty ``q`` that, for every letter ``a``, is a factor of ``f(a)^3`` with ``|q| <= 2|f(a)|``."""
    common = None
    for img in f.images:
        facs = _factors(img.letters * 3, 2 * len(img))
        common = facs if common is None else common & facs
    return sorted((Word._raw(q, f.alphabet) for q in common), key=lambda w: w.sort_key)


def _candidates(f: Morphism, superprimitive_only: bool) -> list[Word]:
    qs = candidate_quasiperiods(f)
    if superprimitive_only:
        qs = [q for q in qs if wd.is_superprimitive(q)]
    return qs


# -- verified witnesses --------------------------------------------------------


def _finite_witness(f: Morphism, rule: str, u: Word, q: Word) -> Witness:
    image = apply(f, u)
    if wd.is_quasiperiodic(u) or not wd.is_q_quasiperiodic(image, q):
        raise InvariantViolation(f"{rule}: {u} -> {image} is not a valid witness for q={q}")
    return Witness(rule, u, image, q, wd.quasiperiod(image).quasiperiod)


def _infinite_witness(f: Morphism, rule: str, w: EventuallyPeriodicWord, q: Word) -> Witness:
    image = apply_inf(f, w)
    if iw.is_quasiperiodic_inf(w) or not iw.is_q_quasiperiodic_inf(image, q):
        raise InvariantViolation(f"{rule}: {w} -> {image} is not a valid witness for q={q}")
    return Witness(rule, w, image, q, iw.quasiperiod_inf(image))


def _inf(alphabet: Alphabet, x: Sequence[int], y: Sequence[int]) -> EventuallyPeriodicWord:
    return normalize(Word._raw(tuple(x), alphabet), Word._raw(tuple(y), alphabet))


# -- strong quasiperiodicity ---------------------------------------------------


def _universal_states(A: CoverAutomaton) -> set:
    """States from which every continuation is accepted."""
    n = len(A.f.alphabet)
    good = {s for s in A.states if s in A.finals and all((s, a) in A.transitions for a in range(n))}
    changed = True
    while changed:
        changed = False
        for s in list(good):
            if any(A.transitions[(s, a)] not in good for a in range(n)):
                good.discard(s)
                changed = True
    return good


def _covering_certificate(f: Morphism, automata: list[CoverAutomaton], result, mode: str, gaps=()) -> CoveringCertificate:
    summaries = []
    first = [None] * len(f.alphabet)
    for A in automata:
        good = _universal_states(A)
        summaries.append(AutomatonSummary(A.q, len(A.states), len(A.transitions), A.initial in good))
        for a in range(len(f.alphabet)):
            if first[a] is None and A.transitions.get((A.initial, a)) in good:
                first[a] = A.q
    return CoveringCertificate(mode, tuple(summaries), result.explored, result.bound, tuple(first), tuple(gaps))


def _words(alphabet: Alphabet, length: int):
    for letters in product(range(len(alphabet)), repeat=length):
        yield Word._raw(letters, alphabet)


def _exact_image_gaps(f: Morphism, qs: list[Word]) -> list[tuple[Word, Word]]:
    """Pairs ``(q, u)`` with ``|u| >= 2``, ``f(u) = q`` and ``q`` superprimitive."""
    gaps = []
    imgs = [img.letters for img in f.images]
    for q in qs:
        if not wd.is_superprimitive(q):
            continue
        target = q.letters
        stack = [((), 0)]
        while stack:
            u, pos = stack.pop()
            if pos == len(target):
                if len(u) >= 2:
                    gaps.append((q, Word._raw(u, f.alphabet)))
                continue
            for a in reversed(range(len(imgs))):
                img = imgs[a]
                if target[pos: pos + len(img)] == img:
                    stack.append((u + (a,), pos + len(img)))
    return gaps


def strong_qp_finite(
    f: Morphism,
    budget: Budget = Budget(),
    strict: bool = False,
    superprimitive_only: bool = False,
) -> Verdict:
    """Decide whether ``f`` maps every finite word to a quasiperiodic word."""
    for a, img in enumerate(f.images):
        if not wd.is_quasiperiodic(img):
            return Verdict(FALSE, Counterexample("superprimitive-letter-image", f.alphabet.letter(a), img, None))
    qs = _candidates(f, superprimitive_only)
    automata = [build(f, q, FINITE) for q in qs]
    result = union_universal(automata, f.alphabet, budget.max_product_states)
    if result.universal:
        gaps = _exact_image_gaps(f, qs) if strict else []
        if gaps:
            q, u = gaps[0]
            return Verdict(FALSE, Counterexample("exact-image-gap", u, q, None, u))
        return Verdict(TRUE, _covering_certificate(f, automata, result, FINITE, gaps))
    u = _nonempty(result.counterexample)
    image = apply(f, u)
    nonqp = None
    if strict:
        nonqp = _nonqp_image_word(f, u, budget.max_word_len)
    return Verdict(FALSE, Counterexample("uncovered", u, image, wd.quasiperiod(image).quasiperiod, nonqp))


def _nonempty(u: Word) -> Word:
    # Only an empty candidate set rejects the empty word; any letter is then rejected too.
    return u if len(u) else u.alphabet.letter(0)


def _nonqp_image_word(f: Morphism, first: Word, max_len: int) -> Optional[Word]:
    if not wd.is_quasiperiodic(apply(f, first)):
        return first
    for n in range(1, max_len + 1):
        for u in _words(f.alphabet, n):
            if not wd.is_quasiperiodic(apply(f, u)):
                return u
    return None


def _nonqp_image_inf(f: Morphism, u: Word, max_period: int = 3) -> Optional[EventuallyPeriodicWord]:
    for n in range(1, max_period + 1):
        for v in _words(f.alphabet, n):
            w = normalize(u, v)
            if iw.quasiperiod_inf(apply_inf(f, w)) is None:
                return w
    return None


def strong_qp_infinite(f: Morphism, budget: Budget = Budget(), superprimitive_only: bool = False) -> Verdict:
    """Decide whether ``f`` maps every infinite word to a quasiperiodic word."""
    qs = _candidates(f, superprimitive_only)
    automata = [build(f, q, INFINITE) for q in qs]
    result = union_universal(automata, f.alphabet, budget.max_product_states)
    if result.universal:
        return Verdict(TRUE, _covering_certificate(f, automata, result, INFINITE))
    u = _nonempty(result.counterexample)
    image = apply(f, u)
    return Verdict(FALSE, Counterexample("uncovered", u, image, wd.quasiperiod(image).quasiperiod,
                                         _nonqp_image_inf(f, u)))


# -- weak quasiperiodicity: building blocks --------------------------------------


class ImprimitivityWitness(NamedTuple):
    u: Word
    witness: EventuallyPeriodicWord
    quasiperiod: Word


def _imprimitive_word(f: Morphism, bound: int) -> Optional[tuple[Word, int, int]]:
    """First ``a^i b`` or ``a b^j`` (i, j <= bound) with imprimitive image, as ``(u, i, j)``."""
    for n in range(1, bound + 1):
        for i, j in ((n, 1), (1, n)) if n > 1 else ((1, 1),):
            u = Word._raw((0,) * i + (1,) * j, f.alphabet)
            if not wd.is_primitive(apply(f, u)):
                return u, i, j
    return None


def _imprimitive_case_witness(fa: Word, fb: Word, i: int) -> tuple[tuple, tuple, Word]:
    """Case analysis for ``f(a^i b) = r^k`` (k >= 2).

    Returns ``(preperiod, period, q)`` in letters 0 (= a) and 1 (= b).
    """
    root, _ = wd.primitive_root(fa * i + fb)
    if len(fa) * (i - 1) >= len(root):
        # f(a) and f(b) are powers of one word.
        return (0,), (1,), root
    if len(root) >= len(fa) * i:
        x = root[len(fa) * i:]
        return (1, 0), (1,), x + fa * i + x
    x = root[len(fa) * (i - 1):]
    alpha, beta, _ = wd.overlap_decomposition(fa, len(x))
    return (0, 1), (0,), alpha + beta + alpha


def imprimitivity_witness(f: Morphism, bound: int = 6) -> Optional[ImprimitivityWitness]:
    """Binary morphisms with an imprimitive image of ``a^i b`` or ``a b^j``.

    Follows the primitivity case analysis to an eventually periodic
    non-quasiperiodic word among ``ab^w, aba^w, ba^w, bab^w`` with a
    quasiperiodic image.
    """
    if len(f.alphabet) != 2:
        raise ValueError("imprimitivity witnesses are defined for binary alphabets")
    found = _imprimitive_word(f, bound)
    if found is None:
        return None
    u, i, j = found
    fa, fb = f.images
    if j == 1:
        pre, per, q = _imprimitive_case_witness(fa, fb, i)
    else:
        # f(a b^j) is a conjugate of f(b^j a): swap the roles of a and b.
        pre, per, q = _imprimitive_case_witness(fb, fa, j)
        pre, per = tuple(1 - x for x in pre), tuple(1 - x for x in per)
    w = _inf(f.alphabet, pre, per)
    image = apply_inf(f, w)
    if not iw.is_q_quasiperiodic_inf(image, q):
        for pre, per in (((0,), (1,)), ((0, 1), (0,)), ((1,), (0,)), ((1, 0), (1,))):
            w = _inf(f.alphabet, pre, per)
            q = iw.quasiperiod_inf(apply_inf(f, w))
            if q is not None:
                break
        else:
            raise InvariantViolation(f"{f}: imprimitive image of {u} but no quasiperiodic case candidate")
    return ImprimitivityWitness(u, w, q)


def _arrangements(letters: Sequence[int]):
    for k in range(len(letters) + 1):
        yield from permutations(letters, k)


def demiqp_shapes(alphabet: Alphabet) -> list[EventuallyPeriodicWord]:
    """Normalized words ``(a1..ak)^w`` (distinct letters) and ``x a y (b z)^w``.

    In the second shape ``x, y, z`` avoid ``a``, ``z`` avoids ``b`` and no
    letter repeats inside any of ``x, y, z``.
    """
    n = len(alphabet)
    out = set()
    for per in _arrangements(range(n)):
        if per:
            out.add(_inf(alphabet, (), per))
    for a in range(n):
        others = [c for c in range(n) if c != a]
        xs = list(_arrangements(others))
        for b in range(n):
            zs = list(_arrangements([c for c in others if c != b]))
            for x in xs:
                for y in xs:
                    for z in zs:
                        out.add(_inf(alphabet, x + (a,) + y, (b,) + z))
    return sorted(out, key=lambda w: w.sort_key)


def demiqp_search(f: Morphism, short_candidates_only: bool = False) -> Optional[tuple[EventuallyPeriodicWord, Word]]:
    """First non-quasiperiodic word of a small shape whose image is quasiperiodic.

    With ``short_candidates_only`` only candidates ``q`` with ``2|q| <= |f(a)|`` for
    every letter are tried, in length-lex order; otherwise any quasiperiod of
    the image is accepted.
    """
    shapes = [w for w in demiqp_shapes(f.alphabet) if not iw.is_quasiperiodic_inf(w)]
    if short_candidates_only:
        qs = [q for q in candidate_quasiperiods(f) if 2 * len(q) <= f.min_image_length]
        images = [apply_inf(f, w) for w in shapes]
        for q in qs:
            for w, image in zip(shapes, images):
                if iw.is_q_quasiperiodic_inf(image, q):
                    return w, q
        return None
    for w in shapes:
        q = iw.quasiperiod_inf(apply_inf(f, w))
        if q is not None:
            return w, q
    return None


def _pair_search(f: Morphism, max_pre: int, max_per: int) -> tuple[Optional[tuple[EventuallyPeriodicWord, Word]], int]:
    seen = set()
    checked = 0
    for total in range(1, max_pre + max_per + 1):
        for lp in range(0, min(max_pre, total - 1) + 1):
            lv = total - lp
            if lv > max_per:
                continue
            for x in _words(f.alphabet, lp):
                for y in _words(f.alphabet, lv):
                    w = normalize(x, y)
                    if w in seen:
                        continue
                    seen.add(w)
                    checked += 1
                    if iw.is_quasiperiodic_inf(w):
                        continue
                    q = iw.quasiperiod_inf(apply_inf(f, w))
                    if q is not None:
                        return (w, q), checked
    return None, checked


def _is_identity(f: Morphism) -> bool:
    return all(img.letters == (a,) for a, img in enumerate(f.images))


# -- weak quasiperiodicity: verdicts -------------------------------------------


def weak_qp_finite(f: Morphism, budget: Budget = Budget()) -> Verdict:
    """Semi-decide whether some non-quasiperiodic finite word has a quasiperiodic image."""
    sigma = f.alphabet
    if _is_identity(f):
        return Verdict(FALSE, SufficientCondition("identity", "every word is its own image"))
    for a, img in enumerate(f.images):
        r = wd.quasiperiod(img).quasiperiod
        if r is not None:
            return Verdict(TRUE, _finite_witness(f, "quasiperiodic-letter-image", sigma.letter(a), r))
    if len(sigma) >= 2:
        cv = code_violation(f)
        if cv is not None and cv.kind != "non-code":
            x, y = cv.pair
            if cv.kind == "prefix":
                u, q = Word._raw((y, y, x), sigma), apply(f, Word._raw((y, x), sigma))
            else:
                u, q = Word._raw((x, y, y), sigma), apply(f, Word._raw((x, y), sigma))
            return Verdict(TRUE, _finite_witness(f, f"{cv.kind}-code-violation", u, q))
    if len(sigma) == 2:
        found = _imprimitive_word(f, budget.imprimitivity_bound)
        if found is not None:
            u = found[0]
            root, _ = wd.primitive_root(apply(f, u))
            return Verdict(TRUE, _finite_witness(f, "imprimitive-image", u, root))
    checked = 0
    for n in range(2, budget.max_word_len + 1):
        for u in _words(sigma, n):
            if wd.is_quasiperiodic(u):
                continue
            checked += 1
            r = wd.quasiperiod(apply(f, u)).quasiperiod
            if r is not None:
                return Verdict(TRUE, _finite_witness(f, "bounded-search", u, r))
    return Verdict(UNKNOWN, BudgetExhausted(budget, (("superprimitive_words", checked),)))


def _fixed_point_heuristic(f: Morphism, n: int) -> Optional[tuple[str, Word]]:
    """A stable cover of a long fixed-point prefix, for growing prolongable ``f``."""
    if not is_growing(f):
        return None
    for a in range(len(f.alphabet)):
        if not is_prolongable(f, a):
            continue
        long = fixed_point_prefix(f, a, n)
        short = long[: n // 2]
        if wd._root_length(long.letters[: n // 2]) <= n // 8:
            continue  # looks periodic
        for m in range(1, n // 8 + 1):
            q = long[:m]
            if (wd.prefix_cover_end(long, q) > n - m
                    and wd.prefix_cover_end(short, q) > len(short) - m):
                return f"fixed-point:{f.alphabet.symbols[a]}", q
    return None


def _trace_back(f: Morphism, w: EventuallyPeriodicWord, k: int) -> Optional[tuple[EventuallyPeriodicWord, Word]]:
    """Given non-QP ``w`` with ``f^k(w)`` QP, find the step where quasiperiodicity appears."""
    cur = w
    for _ in range(k):
        nxt = apply_inf(f, cur)
        q = iw.quasiperiod_inf(nxt)
        if q is not None:
            return cur, q
        cur = nxt
    return None


def weak_qp_infinite(f: Morphism, budget: Budget = Budget(), strong_infinite: Optional[Verdict] = None) -> Verdict:
    """Semi-decide whether some non-quasiperiodic infinite word has a quasiperiodic image."""
    sigma = f.alphabet
    if is_letter_power(f):
        return Verdict(FALSE, SufficientCondition(
            "letter-power", "every image is a power of its own letter, so images are QP exactly when words are"))
    cv = code_violation(f)
    if cv is not None and cv.kind != "non-code":
        x, y = cv.pair
        if cv.kind == "prefix":
            w, q = _inf(sigma, (y, x), (y,)), apply(f, Word._raw((y, x), sigma))
        else:
            w, q = _inf(sigma, (x,), (y,)), apply(f, Word._raw((x, y), sigma))
        return Verdict(TRUE, _infinite_witness(f, f"{cv.kind}-code-violation", w, q))
    if strong_infinite is None:
        strong_infinite = strong_qp_infinite(f, budget)
    if strong_infinite.status == TRUE:
        w = _inf(sigma, (0,), (1,))
        return Verdict(TRUE, _infinite_witness(f, "strong-infinite", w, iw.quasiperiod_inf(apply_inf(f, w))))
    if len(sigma) == 2:
        imp = imprimitivity_witness(f, budget.imprimitivity_bound)
        if imp is not None:
            return Verdict(TRUE, _infinite_witness(f, "imprimitive-image", imp.witness, imp.quasiperiod))
    found = demiqp_search(f)
    if found is not None:
        return Verdict(TRUE, _infinite_witness(f, "demiqp", *found))
    found, checked = _pair_search(f, budget.max_preperiod_len, budget.max_period_len)
    if found is not None:
        return Verdict(TRUE, _infinite_witness(f, "bounded-search", *found))
    for k in range(2, budget.iterates + 1):
        g = compose_power(f, k)
        hit = demiqp_search(g)
        if hit is None and len(sigma) == 2:
            imp = imprimitivity_witness(g, budget.imprimitivity_bound)
            hit = None if imp is None else (imp.witness, imp.quasiperiod)
        if hit is None:
            hit, _ = _pair_search(g, min(2, budget.max_preperiod_len), min(2, budget.max_period_len))
        if hit is not None:
            traced = _trace_back(f, hit[0], k)
            if traced is not None:
                return Verdict(TRUE, _infinite_witness(f, f"iterate:{k}", *traced))
    heuristic = _fixed_point_heuristic(f, budget.fixed_point_len)
    return Verdict(UNKNOWN, BudgetExhausted(budget, (("periodic_pairs", checked),), heuristic))


# -- the report ----------------------------------------------------------------


def classify(
    f: Morphism,
    budget: Budget = Budget(),
    strict: bool = False,
    superprimitive_only: bool = False,
) -> FamilyReport:
    timings = {}

    def timed(name, fn, *args, **kwargs):
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        timings[name] = time.perf_counter() - t0
        return out

    sf = timed("strong_finite", strong_qp_finite, f, budget, strict=strict, superprimitive_only=superprimitive_only)
    si = timed("strong_infinite", strong_qp_infinite, f, budget, superprimitive_only=superprimitive_only)
    wf = timed("weak_finite", weak_qp_finite, f, budget)
    wi = timed("weak_infinite", weak_qp_infinite, f, budget, strong_infinite=si)
    report = FamilyReport(f, sf, si, wf, wi, budget, timings)
    check_consistency(report)
    return report
