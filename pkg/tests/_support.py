"""Shared helpers for the test suite: random words, relation scrambling, and a Burau oracle."""

from __future__ import annotations

import random
from fractions import Fraction

from braidkit.words import BraidWord


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def nonzero_exp_word(rng: random.Random, n: int, max_len: int) -> BraidWord:
    while True:
        w = random_word(rng, n, rng.randint(1, max_len))
        if sum(1 if x > 0 else -1 for x in w.letters) != 0:
            return w


def scramble(rng: random.Random, w: BraidWord, moves: int = 30) -> BraidWord:
    """
    Apply random defining relations and free insertions/cancellations.

    The result is equal to ``w`` in B_n by construction.
    """
    n = w.n
    letters = list(w.letters)
    for _ in range(moves):
        kind = rng.randrange(4)
        if kind == 0:
            i = rng.randint(1, n - 1)
            pos = rng.randint(0, len(letters))
            s = rng.choice((1, -1))
            letters[pos:pos] = [s * i, -s * i]
            continue
        if len(letters) < 2:
            continue
        pos = rng.randrange(len(letters) - 1)
        a, b = letters[pos], letters[pos + 1]
        if kind == 1 and a == -b:
            del letters[pos : pos + 2]
        elif kind == 2 and abs(abs(a) - abs(b)) > 1:
            letters[pos], letters[pos + 1] = b, a
        elif kind == 3 and pos + 2 < len(letters):
            c = letters[pos + 2]
            # s_i s_j s_i = s_j s_i s_j for |i - j| = 1, all letters of one sign
            if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
                letters[pos : pos + 3] = [b, a, b]
    return BraidWord(n, tuple(letters))


def _burau_generator(n: int, i: int, t: Fraction, inverse: bool):
    m = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    a = i - 1
    if not inverse:
        m[a][a], m[a][a + 1], m[a + 1][a], m[a + 1][a + 1] = 1 - t, t, Fraction(1), Fraction(0)
    else:
        m[a][a], m[a][a + 1], m[a + 1][a], m[a + 1][a + 1] = Fraction(0), Fraction(1), 1 / t, 1 - 1 / t
    return m


def _matmul(x, y):
    n = len(x)
    return [[sum(x[r][k] * y[k][c] for k in range(n)) for c in range(n)] for r in range(n)]


def burau(w: BraidWord, t: Fraction = Fraction(2, 7)):
    """Unreduced Burau matrix of ``w`` evaluated at ``t``; a homomorphism, so equal braids give equal matrices."""
    n = w.n
    m = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for x in w.letters:
        m = _matmul(m, _burau_generator(n, abs(x), t, x < 0))
    return m
