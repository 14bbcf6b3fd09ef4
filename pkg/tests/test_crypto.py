import json

import numpy as np
import pytest

from braidkit.crypto import (
    AagParams,
    KlchkpParams,
    aag_default_params,
    aag_full_scale_params,
    aag_run,
    klchkp_default_params,
    klchkp_full_scale_params,
    klchkp_run,
    party_streams,
    random_word,
    sample_secret,
)
from braidkit.errors import ParamError
from braidkit.garside import NormalForm
from braidkit.words import BraidWord, concat, invert


def _nf(w):
    return NormalForm.from_word(w)


def test_streams_are_deterministic_and_distinct():
    a = [g.integers(0, 1 << 62, size=4).tolist() for g in party_streams(5)]
    b = [g.integers(0, 1 << 62, size=4).tolist() for g in party_streams(5)]
    assert a == b
    assert len({tuple(x) for x in a}) == 3
    assert all(isinstance(g.bit_generator, np.random.PCG64) for g in party_streams(1))


def test_random_word_respects_pool():
    rng = party_streams(0)[0]
    w = random_word(rng, 8, 200, range(5, 8))
    assert len(w) == 200
    assert {abs(x) for x in w.letters} <= {5, 6, 7}


def test_aag_agreement_and_oracle():
    for seed in range(10):
        t = aag_run(aag_default_params(seed))
        assert t.agree
        a, b = _nf(t.alice_secret), _nf(t.bob_secret)
        assert t.alice_key == a * b * a.inverse() * b.inverse()


def test_aag_secret_matches_sample():
    params = aag_default_params(3)
    _, alice_rng, bob_rng = party_streams(3)
    t = aag_run(params)
    assert sample_secret(alice_rng, params, "alice") == t.alice_secret
    assert sample_secret(bob_rng, params, "bob") == t.bob_secret


def test_klchkp_agreement_and_oracle():
    for seed in range(10):
        params = klchkp_default_params(seed)
        t = klchkp_run(params)
        assert t.agree
        ab = concat(t.alice_secret, t.bob_secret)
        assert t.alice_key == _nf(concat(ab, params.x, invert(ab)))


def test_klchkp_secrets_live_in_their_subgroups():
    params = klchkp_default_params(4)
    t = klchkp_run(params)
    assert {abs(x) for x in t.alice_secret.letters} <= set(range(1, 4))
    assert {abs(x) for x in t.bob_secret.letters} <= set(range(5, 8))
    a, b = _nf(t.alice_secret), _nf(t.bob_secret)
    assert a * b == b * a


def test_klchkp_explicit_secrets():
    params = klchkp_default_params(1)
    a, b = BraidWord(8, (1, -2, 3)), BraidWord(8, (5, 7, -6))
    t = klchkp_run(params, a, b)
    assert t.agree
    with pytest.raises(ParamError):
        klchkp_run(params, BraidWord(8, (4,)), b)
    with pytest.raises(ParamError):
        klchkp_run(params, a, BraidWord(8, (3,)))


def test_transmission_discipline():
    for seed in range(5):
        for t in (aag_run(aag_default_params(seed)), klchkp_run(klchkp_default_params(seed))):
            published = {nf.key() for _, nf in t.messages}
            text = t.dumps()
            for secret in (t.alice_secret, t.bob_secret):
                assert _nf(secret).key() not in published
                assert _nf(secret).render() not in {m["nf"] for m in json.loads(text)["messages"]}


def test_determinism():
    for seed in (0, 17, 2**40):
        assert aag_run(aag_default_params(seed)).dumps() == aag_run(aag_default_params(seed)).dumps()
        assert klchkp_run(klchkp_default_params(seed)).dumps() == klchkp_run(klchkp_default_params(seed)).dumps()
    assert aag_run(aag_default_params(1)).dumps() != aag_run(aag_default_params(2)).dumps()


def test_transcript_schema():
    doc = json.loads(aag_run(aag_default_params(0)).dumps())
    assert set(doc) == {"messages", "alice_key", "bob_key", "agree"}
    assert len(doc["messages"]) == 10
    assert all(set(m) == {"label", "nf"} for m in doc["messages"])
    assert doc["agree"] is True
    doc = klchkp_run(klchkp_default_params(0)).to_json()
    assert [m["label"] for m in doc["messages"]] == ["alice:axa^-1", "bob:bxb^-1"]


def test_param_validation():
    with pytest.raises(ParamError):
        AagParams(4, (), (BraidWord(4, (1,)),), 3, 0).validate()
    with pytest.raises(ParamError):
        AagParams(4, (BraidWord(3, (1,)),), (BraidWord(4, (1,)),), 3, 0).validate()
    with pytest.raises(ParamError):
        KlchkpParams(8, 3, 4, BraidWord(8), 5, 0).validate()
    with pytest.raises(ParamError):
        KlchkpParams(8, 4, 4, BraidWord(8), 0, 0).validate()


def test_full_scale_presets_shape():
    p = aag_full_scale_params(0)
    assert p.n == 80 and len(p.gen_a) == len(p.gen_b) == 20 and p.secret_len == 100
    assert all(5 <= len(g) <= 10 for g in p.gen_a + p.gen_b)
    q = klchkp_full_scale_params(0)
    assert (q.n, q.l, q.r, len(q.x), q.secret_len) == (45, 22, 23, 1450, 360)
    q.validate()
