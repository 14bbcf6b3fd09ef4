import random

import pytest
from hypothesis import given, settings, strategies as st

from _support import random_word
from braidkit.amalgam import (
    AmalgamPresentation,
    AmalgamWord,
    Syllable,
    amalgam_are_conjugate,
    amalgam_equal,
    amalgam_exp_invariant,
    amalgam_reduce,
    amalgam_word_is_trivial,
    cyclically_reduce,
    normalize_syllables,
    parse_amalgam_word,
)
from braidkit.errors import IndexOutOfRange, ParseError
from braidkit.garside import compare
from braidkit.gwp import gwp
from braidkit.words import BraidWord

P = AmalgamPresentation(3, 3, 1, 1, 2, 3)


def A(*letters, n=3):
    return Syllable("A", BraidWord(n, letters))


def B(*letters, n=3):
    return Syllable("B", BraidWord(n, letters))


def W(*syls):
    return AmalgamWord(tuple(syls))


def _relator_conjugate(rng, pres):
    g = _random_amalgam(rng, pres, rng.randint(0, 3))
    rel = W(Syllable("A", pres.h_word("A")), Syllable("B", pres.h_word("B", -1)))
    if rng.random() < 0.5:
        rel = rel.inverse()
    return g * rel * g.inverse()


def _random_amalgam(rng, pres, length, max_letters=4):
    f = rng.choice("AB")
    syls = []
    for _ in range(length):
        syls.append(Syllable(f, random_word(rng, pres.strands(f), rng.randint(1, max_letters))))
        f = "B" if f == "A" else "A"
    return AmalgamWord(tuple(syls))


def _random_reduced(rng, pres, length):
    """Alternating syllables none of which lies in H."""
    while True:
        w = _random_amalgam(rng, pres, length)
        if all(not gwp(pres.h_word(f), x).is_power for f, x in w):
            return w


def test_presentation_validation():
    with pytest.raises(IndexOutOfRange):
        AmalgamPresentation(3, 3, 3, 1, 2, 3)
    with pytest.raises(IndexOutOfRange):
        AmalgamPresentation(3, 1, 1, 1, 2, 3)
    with pytest.raises(ValueError):
        AmalgamPresentation(3, 3, 1, 1, 0, 3)


def test_parse_and_render():
    w = parse_amalgam_word("A: 1 2 -1; B: 2 2", P)
    assert w == W(A(1, 2, -1), B(2, 2))
    assert w.render() == "A: 1 2 -1; B: 2 2"
    assert parse_amalgam_word("", P) == W()
    with pytest.raises(ParseError):
        parse_amalgam_word("C: 1", P)
    with pytest.raises(ParseError):
        parse_amalgam_word("A 1", P)


def test_normalize_examples():
    assert normalize_syllables(W(A(1), A(-1))) == W()
    assert normalize_syllables(W(A(1), B(1), B(2))) == W(A(1), B(1, 2))
    w = W(A(1, 2, 1), B(1), A(2, 1, 2))
    assert normalize_syllables(w) == w


def test_reduce_examples():
    assert amalgam_reduce(W(A(1, 1), B(-1, -1, -1)), P) == (W(), 0)
    assert amalgam_reduce(W(A(1, 1, 1, 1), B(-1, -1, -1)), P) == (W(), 1)
    w = W(A(2), B(2))
    assert amalgam_reduce(w, P) == (w, None)


def test_trivial_examples():
    assert amalgam_word_is_trivial(W(A(1, 1), B(-1, -1, -1)), P)
    assert not amalgam_word_is_trivial(W(A(1), B(1)), P)
    assert amalgam_word_is_trivial(W(), P)


def test_equal_examples():
    assert amalgam_equal(W(A(1, 1)), W(B(1, 1, 1)), P)
    assert not amalgam_equal(W(A(2)), W(B(2)), P)
    rng = random.Random(0)
    for _ in range(10):
        u = _random_amalgam(rng, P, 3)
        assert amalgam_equal(u, u, P)


def test_reduce_through_middle_h_syllable():
    # A: s2 ; B: t1^3 ; A: s2^-1  collapses to h^1 = s1^2 conjugated by s2
    w = W(A(2), B(1, 1, 1), A(-2))
    reduced, c = amalgam_reduce(w, P)
    assert c is None
    assert len(reduced) == 1 and reduced[0].factor == "A"
    assert compare(reduced[0].word, BraidWord(3, (2, 1, 1, -2)))


def test_cyclic_reduce_examples():
    u1, v1, u2 = (2, 1), (2,), (-1, 2)
    w = W(A(*u1), B(*v1), A(*u2))
    cr = cyclically_reduce(w, P)
    assert len(cr) == 2 and cr[0].factor == "A" and cr[1] == B(*v1)
    assert compare(cr[0].word, BraidWord(3, u2 + u1))
    assert cyclically_reduce(W(A(2)), P) == W(A(2))
    assert cyclically_reduce(W(A(2), B(2)), P) == W(A(2), B(2))


def test_exp_invariant_examples():
    assert amalgam_exp_invariant(W(A(1, 1)), P) == 6
    assert amalgam_exp_invariant(W(B(1, 1, 1)), P) == 6
    assert amalgam_exp_invariant(W(), P) == 0


def test_conjugacy_examples():
    assert amalgam_are_conjugate(W(A(1, 1)), W(B(1, 1, 1)), P)
    assert not amalgam_are_conjugate(W(A(2)), W(B(2)), P)
    a1, b1 = A(2, -1), B(2)
    cert = amalgam_are_conjugate(W(a1, b1), W(b1, a1), P)
    assert cert and cert.witness is not None


def test_relator_products_are_trivial():
    rng = random.Random(21)
    for _ in range(60):
        w = W()
        for _ in range(rng.randint(1, 3)):
            w = w * _relator_conjugate(rng, P)
        assert amalgam_word_is_trivial(w, P)
        assert amalgam_exp_invariant(w, P) == 0


def test_reduced_words_are_nontrivial():
    rng = random.Random(22)
    for _ in range(60):
        w = _random_reduced(rng, P, rng.randint(2, 5))
        reduced, c = amalgam_reduce(w, P)
        assert c is None and len(reduced) >= 2
        assert not amalgam_word_is_trivial(w, P)


def test_reduction_soundness():
    rng = random.Random(23)
    for _ in range(60):
        w = _random_amalgam(rng, P, rng.randint(0, 5))
        reduced, c = amalgam_reduce(w, P)
        rebuilt = reduced if c is None else W(Syllable("A", P.h_word("A", c)))
        assert amalgam_equal(w, rebuilt, P)
        assert amalgam_exp_invariant(rebuilt, P) == amalgam_exp_invariant(w, P)
        for f, x in reduced:
            assert not gwp(P.h_word(f), x).is_power
        assert all(a.factor != b.factor for a, b in zip(reduced, reduced.syllables[1:]))


def test_cyclic_reduce_properties():
    rng = random.Random(24)
    for _ in range(60):
        w = _random_amalgam(rng, P, rng.randint(1, 5))
        reduced, _ = amalgam_reduce(w, P)
        cr = cyclically_reduce(w, P)
        assert len(cr) <= max(len(reduced), 1)
        assert cyclically_reduce(cr, P) == cr
        assert len(cr) <= 1 or cr[0].factor != cr[-1].factor
        assert amalgam_exp_invariant(cr, P) == amalgam_exp_invariant(w, P)


def test_conjugates_are_detected():
    rng = random.Random(25)
    for _ in range(40):
        u = _random_amalgam(rng, P, rng.randint(1, 4), max_letters=3)
        g = _random_amalgam(rng, P, rng.randint(1, 2), max_letters=3)
        v = g * u * g.inverse()
        assert amalgam_exp_invariant(v, P) == amalgam_exp_invariant(u, P)
        assert amalgam_are_conjugate(u, v, P)


def test_witness_reconstructs_conjugation():
    rng = random.Random(26)
    checked = 0
    for _ in range(40):
        u = _random_reduced(rng, P, rng.choice((2, 4)))
        g = _random_amalgam(rng, P, rng.randint(1, 2), max_letters=3)
        v = g * u * g.inverse()
        cert = amalgam_are_conjugate(u, v, P)
        assert cert
        if cert.witness is None:
            continue
        i, j, m = cert.witness
        cu, cv = cyclically_reduce(u, P).rotate(i), cyclically_reduce(v, P).rotate(j)
        h = W(Syllable("A", P.h_word("A", m)))
        assert amalgam_equal(h * cu * h.inverse(), cv, P)
        checked += 1
    assert checked > 20


def test_different_invariant_not_conjugate():
    rng = random.Random(27)
    for _ in range(40):
        u = _random_amalgam(rng, P, rng.randint(1, 4))
        v = _random_amalgam(rng, P, rng.randint(1, 4))
        if amalgam_exp_invariant(u, P) != amalgam_exp_invariant(v, P):
            assert not amalgam_are_conjugate(u, v, P)


def test_other_presentation():
    pres = AmalgamPresentation(4, 3, 2, 1, 3, 2)
    # s2^3 = t1^2
    assert amalgam_equal(W(A(2, 2, 2, n=4)), W(B(1, 1)), pres)
    assert amalgam_are_conjugate(W(A(1, 1, 1, n=4)), W(B(2, 2)), pres)
    assert not amalgam_are_conjugate(W(A(1, 3, n=4)), W(B(2, 2)), pres)


@st.composite
def amalgam_words(draw):
    n_syl = draw(st.integers(0, 4))
    f = draw(st.sampled_from("AB"))
    syls = []
    for _ in range(n_syl):
        letters = draw(st.lists(st.sampled_from((1, -1, 2, -2)), min_size=1, max_size=4))
        syls.append(Syllable(f, BraidWord(3, tuple(letters))))
        f = "B" if f == "A" else "A"
    return AmalgamWord(tuple(syls))


@settings(max_examples=60, deadline=None)
@given(amalgam_words(), amalgam_words())
def test_invariant_is_homomorphism(u, v):
    inv = amalgam_exp_invariant
    assert inv(u * v, P) == inv(u, P) + inv(v, P)
    assert inv(u.inverse(), P) == -inv(u, P)
    assert inv(normalize_syllables(u), P) == inv(u, P)
    assert inv(v * u * v.inverse(), P) == inv(u, P)
    assert amalgam_word_is_trivial(u * u.inverse(), P)


def test_rotation_is_conjugation():
    rng = random.Random(28)
    for _ in range(30):
        u = _random_amalgam(rng, P, rng.randint(2, 4), max_letters=3)
        i = rng.randrange(len(u))
        assert amalgam_are_conjugate(u, u.rotate(i), P)

