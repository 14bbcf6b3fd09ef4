"""
Seeded simulations of two braid-group key agreement protocols.

Commutator protocol (AAG): Alice picks a in <a_1..a_r>, Bob picks b in
<b_1..b_s>.  Alice publishes the normal forms of a b_i a^-1, Bob those of
b a_i b^-1.  Each side rebuilds the other's conjugated secret from the
published images and both arrive at [a, b] = a b a^-1 b^-1.

Commuting-subgroup protocol (KLCHKP): a is a word in sigma_1..sigma_{l-1},
b a word in sigma_{l+1}..sigma_{n-1}, so a and b commute.  Alice publishes
NF(a x a^-1), Bob NF(b x b^-1), and both compute NF(a b x b^-1 a^-1).

Randomness: every run derives three independent PCG64 streams (public,
Alice, Bob) from ``numpy.random.SeedSequence(seed).spawn(3)``, so a seed
fixes the transcript bit for bit.  Nothing here is a security claim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import ParamError
from .garside import NormalForm
from .words import BraidWord

__all__ = [
    "AagParams",
    "KlchkpParams",
    "ProtocolTranscript",
    "party_streams",
    "sample_secret",
    "random_word",
    "aag_default_params",
    "klchkp_default_params",
    "aag_run",
    "klchkp_run",
]


@dataclass(frozen=True)
class AagParams:
    n: int
    gen_a: tuple[BraidWord, ...]
    gen_b: tuple[BraidWord, ...]
    secret_len: int
    seed: int

    def validate(self) -> None:
        if not self.gen_a or not self.gen_b:
            raise ParamError("both public generator lists must be nonempty")
        if self.secret_len < 1:
            raise ParamError("secret_len must be at least 1")
        for g in self.gen_a + self.gen_b:
            if g.n != self.n:
                raise ParamError(f"generator {g} lives in B_{g.n}, expected B_{self.n}")


@dataclass(frozen=True)
class KlchkpParams:
    n: int
    l: int
    r: int
    x: BraidWord
    secret_len: int
    seed: int

    def validate(self) -> None:
        if self.l < 2 or self.r < 2 or self.l + self.r != self.n:
            raise ParamError(f"need l, r >= 2 and l + r = n, got l={self.l}, r={self.r}, n={self.n}")
        if self.x.n != self.n:
            raise ParamError(f"x lives in B_{self.x.n}, expected B_{self.n}")
        if self.secret_len < 1:
            raise ParamError("secret_len must be at least 1")

    def alice_generators(self) -> range:
        return range(1, self.l)

    def bob_generators(self) -> range:
        return range(self.n - self.r + 1, self.n)


@dataclass(frozen=True)
class ProtocolTranscript:
    messages: tuple[tuple[str, NormalForm], ...]
    alice_key: NormalForm
    bob_key: NormalForm
    # private material, kept for oracle checks; never serialized
    alice_secret: BraidWord = field(repr=False, compare=False, default=None)
    bob_secret: BraidWord = field(repr=False, compare=False, default=None)

    @property
    def agree(self) -> bool:
        return self.alice_key == self.bob_key

    def to_json(self) -> dict:
        return {
            "messages": [{"label": label, "nf": nf.render()} for label, nf in self.messages],
            "alice_key": self.alice_key.render(),
            "bob_key": self.bob_key.render(),
            "agree": self.agree,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def party_streams(seed: int) -> tuple[np.random.Generator, np.random.Generator, np.random.Generator]:
    """(public, alice, bob) generators, each PCG64 on a spawned child of the seed."""
    children = np.random.SeedSequence(seed).spawn(3)
    return tuple(np.random.Generator(np.random.PCG64(c)) for c in children)


def random_word(rng: np.random.Generator, n: int, length: int, generators=None) -> BraidWord:
    """``length`` i.i.d. uniform letters (generator index and sign)."""
    pool = np.asarray(list(generators) if generators is not None else range(1, n), dtype=np.int64)
    idx = rng.integers(0, len(pool), size=length)
    signs = rng.choice(np.array([1, -1]), size=length)
    return BraidWord(n, tuple(int(x) for x in pool[idx] * signs))


def _factor_sequence(rng: np.random.Generator, count: int, num_gens: int) -> list[tuple[int, int]]:
    idx = rng.integers(0, num_gens, size=count)
    signs = rng.choice(np.array([1, -1]), size=count)
    return [(int(i), int(s)) for i, s in zip(idx, signs)]


def _product(gens, sequence) -> BraidWord:
    n = gens[0].n
    letters: list[int] = []
    for i, s in sequence:
        g = gens[i]
        letters.extend(g.letters if s > 0 else (-x for x in reversed(g.letters)))
    return BraidWord(n, tuple(letters))


def sample_secret(rng: np.random.Generator, params: AagParams | KlchkpParams, party: str = "alice") -> BraidWord:
    """
    A private word for ``party``.

    AAG: ``secret_len`` public generators of the party's subgroup, each
    with a random sign.  KLCHKP: ``secret_len`` Artin letters from the
    party's commuting subgroup.
    """
    if isinstance(params, AagParams):
        gens = params.gen_a if party == "alice" else params.gen_b
        return _product(gens, _factor_sequence(rng, params.secret_len, len(gens)))
    allowed = params.alice_generators() if party == "alice" else params.bob_generators()
    return random_word(rng, params.n, params.secret_len, allowed)


def aag_default_params(
    seed: int, n: int = 8, num_gens: int = 5, gen_len: int = 5, secret_len: int = 6
) -> AagParams:
    """Desk-scale parameters; the public generators are drawn from the seed's public stream."""
    public, _, _ = party_streams(seed)
    gen_a = tuple(random_word(public, n, gen_len) for _ in range(num_gens))
    gen_b = tuple(random_word(public, n, gen_len) for _ in range(num_gens))
    return AagParams(n, gen_a, gen_b, secret_len, seed)


def aag_full_scale_params(seed: int) -> AagParams:
    """n = 80, 20 generators per side of 5 to 10 letters, secrets of 100 generators."""
    public, _, _ = party_streams(seed)
    gens = [random_word(public, 80, int(public.integers(5, 11))) for _ in range(40)]
    return AagParams(80, tuple(gens[:20]), tuple(gens[20:]), 100, seed)


def klchkp_default_params(seed: int, n: int = 8, l: int = 4, x_len: int = 20, secret_len: int = 10) -> KlchkpParams:
    public, _, _ = party_streams(seed)
    return KlchkpParams(n, l, n - l, random_word(public, n, x_len), secret_len, seed)


def klchkp_full_scale_params(seed: int) -> KlchkpParams:
    """n = 45, |x| about 1450, secrets of about 360 letters."""
    public, _, _ = party_streams(seed)
    return KlchkpParams(45, 22, 23, random_word(public, 45, 1450), 360, seed)


def aag_run(params: AagParams) -> ProtocolTranscript:
    params.validate()
    _, alice_rng, bob_rng = party_streams(params.seed)
    seq_a = _factor_sequence(alice_rng, params.secret_len, len(params.gen_a))
    seq_b = _factor_sequence(bob_rng, params.secret_len, len(params.gen_b))
    a = NormalForm.from_word(_product(params.gen_a, seq_a))
    b = NormalForm.from_word(_product(params.gen_b, seq_b))
    a_inv, b_inv = a.inverse(), b.inverse()

    to_bob = [a * NormalForm.from_word(g) * a_inv for g in params.gen_b]
    to_alice = [b * NormalForm.from_word(g) * b_inv for g in params.gen_a]

    # Alice: b a b^-1 from Bob's images along her own factor sequence
    bab = NormalForm.identity(params.n)
    for i, s in seq_a:
        bab = bab * (to_alice[i] if s > 0 else to_alice[i].inverse())
    alice_key = a * bab.inverse()

    # Bob: a b a^-1 from Alice's images
    aba = NormalForm.identity(params.n)
    for i, s in seq_b:
        aba = aba * (to_bob[i] if s > 0 else to_bob[i].inverse())
    bob_key = aba * b_inv

    messages = tuple((f"alice:b{i + 1}'", nf) for i, nf in enumerate(to_bob)) + tuple(
        (f"bob:a{i + 1}'", nf) for i, nf in enumerate(to_alice)
    )
    return ProtocolTranscript(
        messages, alice_key, bob_key, _product(params.gen_a, seq_a), _product(params.gen_b, seq_b)
    )


def klchkp_run(
    params: KlchkpParams, alice_secret: BraidWord | None = None, bob_secret: BraidWord | None = None
) -> ProtocolTranscript:
    """Run the protocol; explicit secrets override the seeded ones and are checked against their subgroups."""
    params.validate()
    _, alice_rng, bob_rng = party_streams(params.seed)
    a_word = alice_secret if alice_secret is not None else sample_secret(alice_rng, params, "alice")
    b_word = bob_secret if bob_secret is not None else sample_secret(bob_rng, params, "bob")
    for who, w, allowed in (
        ("alice", a_word, params.alice_generators()),
        ("bob", b_word, params.bob_generators()),
    ):
        if w.n != params.n or any(abs(x) not in allowed for x in w.letters):
            raise ParamError(f"{who}'s secret must use only generators {list(allowed)} of B_{params.n}")
    a, b, x = (NormalForm.from_word(w) for w in (a_word, b_word, params.x))
    a_inv, b_inv = a.inverse(), b.inverse()
    axa = a * x * a_inv
    bxb = b * x * b_inv
    return ProtocolTranscript(
        (("alice:axa^-1", axa), ("bob:bxb^-1", bxb)),
        a * bxb * a_inv,
        b * axa * b_inv,
        a_word,
        b_word,
    )
