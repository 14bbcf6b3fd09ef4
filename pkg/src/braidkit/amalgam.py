"""
Cyclic amalgamation G = B_1 *_H B_2 of two braid groups along sigma_k^p = tau_j^r.

Elements are syllable words: alternating braid words from the two factors,
tagged ``"A"`` (B_1, strand count n1) and ``"B"`` (B_2, strand count n2).
The amalgamated subgroup H is generated by h, which is sigma_k^p in the A
factor and tau_j^r in the B factor.  Membership of a syllable in H is
always decided with :func:`braidkit.gwp.gwp`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .conjugacy import DEFAULT_LIMIT, are_conjugate, conjugate_power_of_h_search, double_coset_search
from .errors import IndexOutOfRange, ParseError
from .garside import NormalForm
from .gwp import gwp
from .words import BraidWord, concat, exp_sum, generator_power, invert, parse_word

__all__ = [
    "AmalgamPresentation",
    "Syllable",
    "AmalgamWord",
    "AmalgamConjugacyCertificate",
    "parse_amalgam_word",
    "normalize_syllables",
    "amalgam_reduce",
    "amalgam_word_is_trivial",
    "amalgam_equal",
    "cyclically_reduce",
    "amalgam_are_conjugate",
    "amalgam_exp_invariant",
]


@dataclass(frozen=True)
class AmalgamPresentation:
    n1: int
    n2: int
    k: int
    j: int
    p: int
    r: int

    def __post_init__(self) -> None:
        if self.n1 < 2 or self.n2 < 2:
            raise IndexOutOfRange("both factors need at least 2 strands")
        if not 1 <= self.k <= self.n1 - 1:
            raise IndexOutOfRange(f"k={self.k} is not a generator index of B_{self.n1}")
        if not 1 <= self.j <= self.n2 - 1:
            raise IndexOutOfRange(f"j={self.j} is not a generator index of B_{self.n2}")
        if self.p < 1 or self.r < 1:
            raise ValueError("p and r must be positive")

    def strands(self, factor: str) -> int:
        return self.n1 if factor == "A" else self.n2

    def h_generator(self, factor: str) -> tuple[int, int]:
        """(generator index, exponent) of h in the given factor."""
        return (self.k, self.p) if factor == "A" else (self.j, self.r)

    def h_word(self, factor: str, c: int = 1) -> BraidWord:
        """h^c written in ``factor``."""
        idx, e = self.h_generator(factor)
        return generator_power(self.strands(factor), idx, e * c)


class Syllable(NamedTuple):
    factor: str
    word: BraidWord


def _other(factor: str) -> str:
    return "B" if factor == "A" else "A"


@dataclass(frozen=True)
class AmalgamWord:
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        syls = tuple(Syllable(f, w) for f, w in self.syllables)
        for f, _ in syls:
            if f not in ("A", "B"):
                raise ParseError(f"factor must be 'A' or 'B', got {f!r}")
        object.__setattr__(self, "syllables", syls)

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __getitem__(self, i):
        return self.syllables[i]

    def __mul__(self, other: AmalgamWord) -> AmalgamWord:
        return AmalgamWord(self.syllables + other.syllables)

    def inverse(self) -> AmalgamWord:
        return AmalgamWord(tuple(Syllable(f, invert(w)) for f, w in reversed(self.syllables)))

    def rotate(self, i: int) -> AmalgamWord:
        return AmalgamWord(self.syllables[i:] + self.syllables[:i])

    def render(self) -> str:
        return "; ".join(f"{f}: {' '.join(map(str, w.letters))}".rstrip() for f, w in self.syllables)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class AmalgamConjugacyCertificate:
    """
    ``witness`` is ``(i, j, m)`` for words of syllable length > 1: rotating u
    by i and v by j, h^m u_rot h^-m = v_rot.
    """

    verdict: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.verdict


def parse_amalgam_word(text: str, pres: AmalgamPresentation) -> AmalgamWord:
    """Parse ``"A: 1 2 -1; B: 2 2"``."""
    syls = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        factor, sep, body = chunk.partition(":")
        factor = factor.strip()
        if not sep or factor not in ("A", "B"):
            raise ParseError(f"syllable {chunk!r} must look like 'A: 1 -2' or 'B: 2'")
        syls.append(Syllable(factor, parse_word(body, pres.strands(factor))))
    return AmalgamWord(tuple(syls))


def _is_trivial(w: BraidWord) -> bool:
    return NormalForm.from_word(w).is_identity()


def normalize_syllables(w: AmalgamWord | Iterable[Syllable]) -> AmalgamWord:
    """Merge adjacent syllables of one factor and drop syllables equal to 1."""
    stack: list[Syllable] = []
    for f, x in w:
        if stack and stack[-1].factor == f:
            x = concat(stack.pop().word, x)
        if not _is_trivial(x):
            stack.append(Syllable(f, x))
    return AmalgamWord(tuple(stack))


def amalgam_reduce(w: AmalgamWord, pres: AmalgamPresentation) -> tuple[AmalgamWord, int | None]:
    """
    Reduce ``w`` until no syllable lies in H.

    Syllables are scanned left to right; those not in H are pushed onto the
    reduced prefix.  A syllable equal to h^c is rewritten as h^c in the
    other factor and merged with its neighbours on both sides, and the
    merged syllable is examined next.  The result is either a reduced word
    (second component None) or, when everything collapses into H, the empty
    word together with the exponent c of the element h^c.
    """
    done: list[Syllable] = []
    todo = deque(normalize_syllables(w).syllables)
    while todo:
        f, x = todo.popleft()
        if done and done[-1].factor == f:
            x = concat(done.pop().word, x)
        while todo and todo[0].factor == f:
            x = concat(x, todo.popleft().word)
        if _is_trivial(x):
            continue
        res = gwp(pres.h_word(f), x)
        if not res.is_power:
            done.append(Syllable(f, x))
            continue
        if not done and not todo:
            return AmalgamWord(), res.power
        todo.appendleft(Syllable(_other(f), pres.h_word(_other(f), res.power)))
    if not done:
        return AmalgamWord(), 0
    return AmalgamWord(tuple(done)), None


def amalgam_word_is_trivial(w: AmalgamWord, pres: AmalgamPresentation) -> bool:
    reduced, h_power = amalgam_reduce(w, pres)
    return not reduced.syllables and h_power == 0


def amalgam_equal(u: AmalgamWord, v: AmalgamWord, pres: AmalgamPresentation) -> bool:
    return amalgam_word_is_trivial(u * v.inverse(), pres)


def _h_element(pres: AmalgamPresentation, c: int) -> AmalgamWord:
    if c == 0:
        return AmalgamWord()
    return AmalgamWord((Syllable("A", pres.h_word("A", c)),))


def cyclically_reduce(w: AmalgamWord, pres: AmalgamPresentation) -> AmalgamWord:
    """A conjugate of ``w`` whose end syllables lie in different factors (or of length <= 1)."""
    w, h_power = amalgam_reduce(w, pres)
    if h_power is not None:
        return _h_element(pres, h_power)
    while len(w) >= 2 and w[0].factor == w[-1].factor:
        # conjugate by the last syllable
        last = w[-1]
        merged = (Syllable(last.factor, concat(last.word, w[0].word)),) + w.syllables[1:-1]
        w, h_power = amalgam_reduce(AmalgamWord(merged), pres)
        if h_power is not None:
            return _h_element(pres, h_power)
    return w


def amalgam_exp_invariant(w: AmalgamWord, pres: AmalgamPresentation) -> int:
    """r * exp of A-syllables + p * exp of B-syllables; a homomorphism G -> Z."""
    return sum((pres.r if f == "A" else pres.p) * exp_sum(x) for f, x in w)


def _h_conjugate(a: Sequence[Syllable], m: int, pres: AmalgamPresentation) -> AmalgamWord:
    f = a[0].factor
    return AmalgamWord((Syllable(f, pres.h_word(f, m)),) + tuple(a) + (Syllable(f, pres.h_word(f, -m)),))


def _commutes(x: BraidWord, y: BraidWord) -> bool:
    nx, ny = NormalForm.from_word(x), NormalForm.from_word(y)
    return nx * ny == ny * nx


def _conjugating_h_power(
    a: Sequence[Syllable], b: Sequence[Syllable], pres: AmalgamPresentation, limit: int
) -> int | None:
    """An m with h^m a h^-m = b, for reduced syllable sequences of equal length."""
    f = a[0].factor
    if b[0].factor != f:
        return None
    a1, b1 = a[0].word, b[0].word
    h = pres.h_word(f)
    if not _commutes(a1, h):
        # b_1 = h^m a_1 h^n for some n
        idx, e = pres.h_generator(f)
        found = double_coset_search(a1, b1, idx, e, limit)
        if found is None:
            return None
        m = found[0]
        return m if amalgam_equal(_h_conjugate(a, m, pres), AmalgamWord(tuple(b)), pres) else None
    # a_1 commutes with h, so a_1 = b_1 h^c and h^m (h^c a_2) ... h^-m = b_2 ...
    res = gwp(h, concat(invert(b1), a1))
    if not res.is_power:
        return None
    if len(a) == 1:
        return 0 if res.power == 0 else None
    g = _other(f)
    head = Syllable(g, concat(pres.h_word(g, res.power), a[1].word))
    return _conjugating_h_power((head,) + tuple(a[2:]), b[1:], pres, limit)


def amalgam_are_conjugate(
    u: AmalgamWord, v: AmalgamWord, pres: AmalgamPresentation, limit: int = DEFAULT_LIMIT
) -> AmalgamConjugacyCertificate:
    """Conjugacy in G: compare cyclically reduced forms by length, then by factor conjugacy or rotations up to an H-conjugation."""
    no = AmalgamConjugacyCertificate(False)
    if amalgam_exp_invariant(u, pres) != amalgam_exp_invariant(v, pres):
        return no
    u, v = cyclically_reduce(u, pres), cyclically_reduce(v, pres)
    if len(u) != len(v):
        return no
    if len(u) == 0:
        return AmalgamConjugacyCertificate(True)
    if len(u) == 1:
        (fu, x), (fv, y) = u[0], v[0]
        if fu == fv:
            return AmalgamConjugacyCertificate(are_conjugate(x, y, limit))
        # the only route between factors is u ~ h^c ~ v
        idx, e = pres.h_generator(fu)
        c = conjugate_power_of_h_search(x, idx, e, limit)
        if c is None:
            return no
        return AmalgamConjugacyCertificate(are_conjugate(y, pres.h_word(fv, c), limit))
    for i in range(len(u)):
        a = u.rotate(i)
        for j in range(len(v)):
            b = v.rotate(j)
            m = _conjugating_h_power(a.syllables, b.syllables, pres, limit)
            if m is not None:
                return AmalgamConjugacyCertificate(True, (i, j, m))
    return no

