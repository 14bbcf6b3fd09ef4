"""
Left-canonical (Garside/Thurston) normal form in B_n.

Every braid is written uniquely as ``Delta^r F_1 ... F_k`` where each F_i is
a permutation braid (a positive braid in which any two strands cross at most
once) other than the identity and Delta, and each adjacent pair is
left-weighted.

Permutation braids are stored as 0-based image tuples with the same
convention as :class:`braidkit.words.Permutation`: ``f[i]`` is where the
strand starting at position ``i`` ends.  The braid product ``A B`` therefore
corresponds to the tuple ``tuple(B[x] for x in A)``.

The starting set S(F) of a factor is the set of ``i`` with sigma_i a left
divisor of F, which is the descent set of ``f``; the finishing set is the
descent set of the inverse permutation.  ``(A, B)`` is left-weighted when
S(B) is contained in the finishing set of A.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, ParseError, StrandMismatch
from .words import BraidWord, Permutation, power

Perm = tuple[int, ...]

# A permutation braid is identified with its permutation.
PermutationBraidFactor = Permutation

__all__ = [
    "NormalForm",
    "PermutationBraidFactor",
    "delta",
    "starting_set",
    "finishing_set",
    "is_left_weighted",
    "left_weight_pair",
    "normal_form",
    "compare",
    "inf_sup",
    "simple_elements",
    "factor_word",
    "parse_normal_form",
]


def delta(n: int) -> BraidWord:
    """The fundamental braid (s_1 ... s_{n-1})(s_1 ... s_{n-2}) ... (s_1 s_2)(s_1)."""
    if n < 2:
        raise IndexOutOfRange(f"strand count must be at least 2, got {n}")
    letters = [i for top in range(n - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord(n, tuple(letters))


# ---------------------------------------------------------------------------
# permutation-braid combinatorics on raw tuples


def _descents(f: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(f)) if f[i - 1] > f[i])


def _inverse(f: Perm) -> Perm:
    inv = [0] * len(f)
    for i, x in enumerate(f):
        inv[x] = i
    return tuple(inv)


def _start(f: Perm) -> frozenset[int]:
    return _descents(f)


def _finish(f: Perm) -> frozenset[int]:
    return _descents(_inverse(f))


@lru_cache(maxsize=None)
def _identity(n: int) -> Perm:
    return tuple(range(n))


@lru_cache(maxsize=None)
def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _tau(f: Perm) -> Perm:
    """Conjugation by Delta: sigma_i -> sigma_{n-i}."""
    n = len(f)
    return tuple(n - 1 - f[n - 1 - i] for i in range(n))


def _right_complement(f: Perm) -> Perm:
    """The factor C with F C = Delta, so that F^-1 = C Delta^-1."""
    n = len(f)
    inv = _inverse(f)
    return tuple(n - 1 - inv[i] for i in range(n))


def _generator(n: int, i: int) -> Perm:
    f = list(range(n))
    f[i - 1], f[i] = f[i], f[i - 1]
    return tuple(f)


@lru_cache(maxsize=1 << 18)
def _weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move the largest possible left divisor of ``b`` onto the end of ``a``."""
    a_list, b_list = list(a), list(b)
    inv = list(_inverse(a))
    n = len(a)
    i = 1
    while i < n:
        # i in S(b) and i not in F(a)
        if b_list[i - 1] > b_list[i] and inv[i - 1] < inv[i]:
            # a <- a sigma_i swaps the values i-1, i; b <- sigma_i^-1 b swaps positions
            x, y = inv[i - 1], inv[i]
            a_list[x], a_list[y] = i, i - 1
            inv[i - 1], inv[i] = y, x
            b_list[i - 1], b_list[i] = b_list[i], b_list[i - 1]
            # only descents at i-1, i, i+1 can have changed
            i = max(1, i - 1)
        else:
            i += 1
    return tuple(a_list), tuple(b_list)


def _left_weight(factors: Sequence[Perm]) -> list[Perm]:
    """Left-weight a sequence of permutation braids by local sweeps until fixpoint."""
    out: list[Perm] = []
    for f in factors:
        out.append(f)
        i = len(out) - 1
        while i > 0:
            a, b = _weight(out[i - 1], out[i])
            if a == out[i - 1]:
                break
            out[i - 1], out[i] = a, b
            i -= 1
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            a, b = _weight(out[i], out[i + 1])
            if a != out[i]:
                out[i], out[i + 1] = a, b
                changed = True
    return out


def _assemble(n: int, tokens: Iterable[tuple[str, object]]) -> NormalForm:
    """
    Normalize a product given as tokens ``("D", e)`` for Delta^e and
    ``("F", perm)`` for a permutation braid, read left to right.

    Every Delta power is moved to the front; a factor passed by Delta^e
    is conjugated by tau^e, and tau is an involution.
    """
    tokens = list(tokens)
    r = 0
    parity = 0
    factors: list[Perm] = []
    for kind, val in reversed(tokens):
        if kind == "D":
            r += val
            parity ^= val & 1
        else:
            factors.append(_tau(val) if parity else val)
    factors.reverse()
    ident, top = _identity(n), _delta(n)
    factors = _left_weight([f for f in factors if f != ident])
    lead = 0
    while lead < len(factors) and factors[lead] == top:
        lead += 1
    tail = len(factors)
    while tail > lead and factors[tail - 1] == ident:
        tail -= 1
    return NormalForm(n, r + lead, tuple(factors[lead:tail]))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalForm:
    """
    ``Delta^r F_1 ... F_k`` with left-weighted permutation-braid factors.

    Instances are canonical: two braids are equal exactly when their normal
    forms compare equal, so a NormalForm can be used directly as a set key.
    """

    n: int
    r: int
    factors: tuple[Perm, ...] = ()

    @classmethod
    def identity(cls, n: int) -> NormalForm:
        return cls(n, 0, ())

    @classmethod
    def from_word(cls, w: BraidWord) -> NormalForm:
        n = w.n
        tokens: list[tuple[str, object]] = []
        for x in w.letters:
            g = _generator(n, abs(x))
            if x > 0:
                tokens.append(("F", g))
            else:
                # sigma_i^-1 = (sigma_i^-1 Delta) Delta^-1
                tokens.append(("F", _right_complement(g)))
                tokens.append(("D", -1))
        return _assemble(n, tokens)

    @classmethod
    def from_factors(cls, n: int, r: int, factors: Iterable[Sequence[int]]) -> NormalForm:
        """Normalize ``Delta^r`` times an arbitrary sequence of permutation braids."""
        return _assemble(n, [("D", r)] + [("F", tuple(f)) for f in factors])

    @property
    def inf(self) -> int:
        return self.r

    @property
    def sup(self) -> int:
        return self.r + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def key(self) -> tuple:
        """Canonical serialization (n, r, factor tables)."""
        return (self.n, self.r, self.factors)

    def permutations(self) -> list[Permutation]:
        return [Permutation(f) for f in self.factors]

    def is_identity(self) -> bool:
        return self.r == 0 and not self.factors

    def _tokens(self) -> list[tuple[str, object]]:
        return [("D", self.r)] + [("F", f) for f in self.factors]

    def __mul__(self, other: NormalForm) -> NormalForm:
        if self.n != other.n:
            raise StrandMismatch(f"cannot multiply braids of B_{self.n} and B_{other.n}")
        if not self.factors:
            return NormalForm(self.n, self.r + other.r, other.factors)
        return _assemble(self.n, self._tokens() + other._tokens())

    def inverse(self) -> NormalForm:
        tokens: list[tuple[str, object]] = []
        for f in reversed(self.factors):
            tokens.append(("F", _right_complement(f)))
            tokens.append(("D", -1))
        tokens.append(("D", -self.r))
        return _assemble(self.n, tokens)

    def __pow__(self, c: int) -> NormalForm:
        base = self if c >= 0 else self.inverse()
        out = NormalForm.identity(self.n)
        for _ in range(abs(c)):
            out = out * base
        return out

    def conjugate(self, by: NormalForm) -> NormalForm:
        """``by^-1 * self * by``."""
        return by.inverse() * self * by

    def to_word(self) -> BraidWord:
        """Rebuild a braid word Delta^r F_1 ... F_k."""
        letters: list[int] = list(power(delta(self.n), self.r).letters)
        for f in self.factors:
            letters.extend(_factor_letters(f))
        return BraidWord(self.n, tuple(letters))

    def exp_sum(self) -> int:
        return self.r * self.n * (self.n - 1) // 2 + sum(_length(f) for f in self.factors)

    def render(self) -> str:
        """Text form ``D^r | perm1 | perm2 |`` with 1-based one-line permutations."""
        return "".join([f"D^{self.r} |"] + [f" {Permutation(f).one_line()} |" for f in self.factors])

    def __str__(self) -> str:
        return self.render()


def parse_normal_form(text: str, n: int | None = None) -> NormalForm:
    """
    Inverse of :meth:`NormalForm.render`; the factor list is renormalized.

    ``n`` is needed only when the text is a bare Delta power.
    """
    parts = [p.strip() for p in text.strip().split("|")]
    head, perms = parts[0], [p for p in parts[1:] if p]
    if not head.startswith("D^"):
        raise ParseError(f"normal form must start with D^r, got {head!r}")
    try:
        r = int(head[2:])
        factors = [tuple(int(x) - 1 for x in p.split()) for p in perms]
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if n is None:
        if not factors:
            raise ParseError("strand count cannot be inferred from a bare Delta power")
        n = len(factors[0])
    for f in factors:
        if sorted(f) != list(range(n)):
            raise ParseError(f"{[x + 1 for x in f]} is not a permutation of 1..{n}")
    return NormalForm.from_factors(n, r, factors)


def _length(f: Perm) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(f)), 2) if f[i] > f[j])


def _factor_letters(f: Perm) -> list[int]:
    letters: list[int] = []
    f = list(f)
    while True:
        for i in range(1, len(f)):
            if f[i - 1] > f[i]:
                letters.append(i)
                f[i - 1], f[i] = f[i], f[i - 1]
                break
        else:
            return letters


def factor_word(f: Permutation | Sequence[int]) -> BraidWord:
    """The positive word of a permutation braid."""
    images = f.images if isinstance(f, Permutation) else tuple(f)
    return BraidWord(len(images), tuple(_factor_letters(images)))


def starting_set(f: Permutation) -> frozenset[int]:
    return _start(f.images)


def finishing_set(f: Permutation) -> frozenset[int]:
    return _finish(f.images)


def is_left_weighted(f1: Permutation, f2: Permutation) -> bool:
    if f1.n != f2.n:
        raise StrandMismatch(f"factors act on {f1.n} and {f2.n} strands")
    return _start(f2.images) <= _finish(f1.images)


def left_weight_pair(f1: Permutation, f2: Permutation) -> tuple[Permutation, Permutation]:
    """The left-weighted pair with the same product as ``f1 f2``."""
    if f1.n != f2.n:
        raise StrandMismatch(f"factors act on {f1.n} and {f2.n} strands")
    a, b = _weight(f1.images, f2.images)
    return Permutation(a), Permutation(b)


@lru_cache(maxsize=None)
def simple_elements(n: int) -> tuple[Perm, ...]:
    """All n! permutation braids of B_n, identity first."""
    return tuple(itertools.permutations(range(n)))


def normal_form(w: BraidWord) -> NormalForm:
    return NormalForm.from_word(w)


def compare(u: BraidWord, v: BraidWord) -> bool:
    """Word problem: do ``u`` and ``v`` represent the same braid?"""
    if u.n != v.n:
        raise StrandMismatch(f"words live in B_{u.n} and B_{v.n}")
    return normal_form(u) == normal_form(v)


def inf_sup(w: BraidWord) -> tuple[int, int]:
    nf = normal_form(w)
    return nf.inf, nf.sup


def rebuild(nf: NormalForm) -> BraidWord:
    return nf.to_word()


def is_trivial(w: BraidWord) -> bool:
    return normal_form(w).is_identity()


def commutes(u: BraidWord, v: BraidWord) -> bool:
    return normal_form(u) * normal_form(v) == normal_form(v) * normal_form(u)

