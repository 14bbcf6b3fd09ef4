"""
Braid words in Artin generators.

A word in B_n is stored as a tuple of nonzero integers: ``k`` stands for
sigma_k and ``-k`` for its inverse, with ``1 <= |k| <= n - 1``.  The same
signed-integer convention is the text format used everywhere else in the
package, e.g. ``"1 -2 1"``.  Band generators a(t,s) are accepted on input
only and are expanded into Artin letters immediately.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import IndexOutOfRange, ParseError, StrandMismatch

__all__ = [
    "BraidWord",
    "Permutation",
    "BandGenerator",
    "parse_word",
    "format_word",
    "band_to_artin",
    "free_reduce",
    "exp_sum",
    "permutation_image",
    "concat",
    "invert",
    "power",
    "generator_power",
    "identity",
]


@dataclass(frozen=True)
class BraidWord:
    """An element of B_n written as a sequence of signed Artin letters."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise IndexOutOfRange(f"strand count must be at least 2, got {self.n}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.n:
                raise IndexOutOfRange(f"letter {x} is not a generator of B_{self.n}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, c: int) -> BraidWord:
        return power(self, c)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)

    def is_empty(self) -> bool:
        return not self.letters


@dataclass(frozen=True)
class Permutation:
    """
    A permutation of strand positions, stored 0-based.

    ``images[i]`` is the final position of the strand that starts at
    position ``i``.  Products follow braid order: in ``p * q`` the strands
    move by ``p`` first and then by ``q``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise StrandMismatch(f"cannot compose permutations of {self.n} and {other.n} points")
        return Permutation(tuple(other.images[x] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def one_line(self) -> str:
        """1-based one-line notation, e.g. ``"2 1 3"``."""
        return " ".join(str(x + 1) for x in self.images)

    def __str__(self) -> str:
        return self.one_line()


@dataclass(frozen=True)
class BandGenerator:
    """The band generator a(t,s): strand t crosses over strand s in front of the strands between."""

    t: int
    s: int

    def __str__(self) -> str:
        return f"a({self.t},{self.s})"


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def generator_power(n: int, k: int, e: int) -> BraidWord:
    """sigma_k ** e as a word."""
    if not 1 <= k <= n - 1:
        raise IndexOutOfRange(f"sigma_{k} is not a generator of B_{n}")
    return BraidWord(n, (k if e > 0 else -k,) * abs(e))


_BAND = re.compile(r"^a\((\d+),(\d+)\)(\^(-?1))?$")
_TOKEN = re.compile(r"a\(\s*\d+\s*,\s*\d+\s*\)(?:\^-?1)?|\S+")


def parse_word(text: str, n: int) -> BraidWord:
    """
    Parse whitespace-separated letters into a word of B_n.

    Tokens are nonzero integers (``k`` for sigma_k, ``-k`` for its inverse)
    or band generators ``a(t,s)`` / ``a(t,s)^-1``.
    """
    if n < 2:
        raise IndexOutOfRange(f"strand count must be at least 2, got {n}")
    letters: list[int] = []
    for token in _TOKEN.findall(text):
        token = re.sub(r"\s+", "", token)
        m = _BAND.match(token)
        if m:
            w = band_to_artin(BandGenerator(int(m.group(1)), int(m.group(2))), n)
            if m.group(4) == "-1":
                w = invert(w)
            letters.extend(w.letters)
            continue
        try:
            k = int(token)
        except ValueError:
            raise ParseError(f"malformed token {token!r}") from None
        if k == 0:
            raise ParseError("0 is not a generator")
        if abs(k) >= n:
            raise IndexOutOfRange(f"letter {k} is not a generator of B_{n}")
        letters.append(k)
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(x) for x in w.letters)


def band_to_artin(g: BandGenerator, n: int) -> BraidWord:
    """
    Expand a(t,s) as (sigma_{t-1} ... sigma_{s+1}) sigma_s (sigma_{s+1}^-1 ... sigma_{t-1}^-1).

    For adjacent strands this is just sigma_s.
    """
    t, s = g.t, g.s
    if not 1 <= s < t <= n:
        raise IndexOutOfRange(f"band generator a({t},{s}) needs 1 <= s < t <= {n}")
    left = list(range(t - 1, s, -1))
    return BraidWord(n, tuple(left + [s] + [-x for x in reversed(left)]))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(w.n, tuple(stack))


def exp_sum(w: BraidWord) -> int:
    """Sum of the exponents of the letters of ``w``."""
    return sum(1 if x > 0 else -1 for x in w.letters)


def permutation_image(w: BraidWord) -> Permutation:
    """Image of ``w`` in S_n: sigma_i maps to the transposition of positions i and i+1."""
    pos = list(range(w.n))  # pos[strand] = current position
    at = list(range(w.n))  # at[position] = strand
    for x in w.letters:
        i = abs(x)
        a, b = at[i - 1], at[i]
        at[i - 1], at[i] = b, a
        pos[a], pos[b] = i, i - 1
    return Permutation(tuple(pos))


def _check_same(words: Sequence[BraidWord]) -> int:
    n = words[0].n
    for w in words[1:]:
        if w.n != n:
            raise StrandMismatch(f"words live in B_{n} and B_{w.n}")
    return n


def concat(*words: BraidWord) -> BraidWord:
    """Freely reduced product of one or more words in the same B_n."""
    n = _check_same(words)
    letters: list[int] = []
    for w in words:
        letters.extend(w.letters)
    return free_reduce(BraidWord(n, tuple(letters)))


def invert(w: BraidWord) -> BraidWord:
    return free_reduce(BraidWord(w.n, tuple(-x for x in reversed(w.letters))))


def power(w: BraidWord, c: int) -> BraidWord:
    """``w ** c``; ``power(w, 0)`` is the identity."""
    base = free_reduce(w) if c >= 0 else invert(w)
    return free_reduce(BraidWord(w.n, base.letters * abs(c)))

