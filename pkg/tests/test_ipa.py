import copy
import random

import pytest

from fpvc import Transcript, ipa_prove, ipa_verify, msm
from fpvc.ipa import IpaError


def _inner(p, a, b):
    return sum(x * y for x, y in zip(a, b)) % p


def _setup(group, gens, rng, n):
    p = group.order
    a = [rng.randrange(p) for _ in range(n)]
    b = [rng.randrange(p) for _ in range(n)]
    c = _inner(p, a, b)
    P = msm(group, gens.g[:n] + gens.h[:n], a + b)
    return a, b, c, P


def _prove(group, gens, a, b, c, n):
    tr = Transcript.fiat_shamir(group.order)
    return ipa_prove(group, gens.g[:n], gens.h[:n], gens.u, a, b, c, tr, b"t")


def _verify(group, gens, P, c, n, proof):
    tv = Transcript.fiat_shamir(group.order)
    return ipa_verify(group, gens.g[:n], gens.h[:n], gens.u, P, c, n, proof, tv, b"t")


def test_completeness_all_sizes(group, gens):
    """100 random instances per n in {1, 2, 4, ..., 256} all accept."""
    rng = random.Random(0)
    for n in [1, 2, 4, 8, 16, 32, 64, 128, 256]:
        for _ in range(100):
            a, b, c, P = _setup(group, gens, rng, n)
            proof = _prove(group, gens, a, b, c, n)
            assert _verify(group, gens, P, c, n, proof), n


def test_proof_size_exact(group, gens):
    """Exactly 2*log2(n) group elements plus 2 scalars."""
    rng = random.Random(1)
    point_b = group.point_bytes
    scalar_b = group.field.scalar_bytes
    for n in [2, 4, 8, 16, 32, 64, 128, 256]:
        a, b, c, P = _setup(group, gens, rng, n)
        tr = Transcript.fiat_shamir(group.order)
        proof = ipa_prove(group, gens.g[:n], gens.h[:n], gens.u, a, b, c, tr, b"t")
        logn = (n - 1).bit_length()
        assert proof.num_group_elements() == 2 * logn
        assert tr.sent_prover_bytes == 2 * logn * point_b + 2 * scalar_b


def test_interactive_mode_round_trip(group, gens):
    rng = random.Random(2)
    p = group.order
    a, b, c, P = _setup(group, gens, rng, 16)
    tp = Transcript.interactive(p, seed=7)
    proof = ipa_prove(group, gens.g[:16], gens.h[:16], gens.u, a, b, c, tp, b"t")
    tv = Transcript.interactive(p, seed=7)
    assert ipa_verify(group, gens.g[:16], gens.h[:16], gens.u, P, c, 16, proof, tv, b"t")
    assert tv.sent_verifier_bytes > 0


def test_prover_rejects_false_claim(group, gens):
    rng = random.Random(3)
    a, b, c, _ = _setup(group, gens, rng, 8)
    with pytest.raises(IpaError):
        _prove(group, gens, a, b, (c + 1) % group.order, 8)


def test_shape_errors(group, gens):
    with pytest.raises(IpaError):
        _prove(group, gens, [1, 2, 3], [1, 2, 3], 14, 3)
    tr = Transcript.fiat_shamir(group.order)
    with pytest.raises(IpaError):
        ipa_prove(group, gens.g[:1], gens.h[:1], gens.u, [1, 2], [1, 2], 5, tr, b"t")


def test_tamper_sweep(group, gens):
    """Every mutated proof component makes verification fail."""
    rng = random.Random(4)
    p = group.order
    a, b, c, P = _setup(group, gens, rng, 16)
    proof = _prove(group, gens, a, b, c, 16)

    bad = copy.deepcopy(proof)
    bad.final_a = (bad.final_a + 1) % p
    assert not _verify(group, gens, P, c, 16, bad)

    bad = copy.deepcopy(proof)
    bad.final_b = (bad.final_b + 1) % p
    assert not _verify(group, gens, P, c, 16, bad)

    bad = copy.deepcopy(proof)
    L, R = bad.folds[0]
    bad.folds[0] = (group.mul(L, gens.g[0]), R)
    assert not _verify(group, gens, P, c, 16, bad)

    bad = copy.deepcopy(proof)
    bad.folds[-1] = (bad.folds[-1][1], bad.folds[-1][0])
    assert not _verify(group, gens, P, c, 16, bad)

    bad = copy.deepcopy(proof)
    bad.folds = bad.folds[:-1]
    assert not _verify(group, gens, P, c, 16, bad)

    # non-element in a fold
    bad = copy.deepcopy(proof)
    bad.folds[1] = (2, bad.folds[1][1])
    assert not _verify(group, gens, P, c, 16, bad)

    # wrong statement
    assert not _verify(group, gens, P, (c + 1) % p, 16, proof)
    assert not _verify(group, gens, group.mul(P, gens.g[0]), c, 16, proof)


def test_wrong_label_rejects(group, gens):
    rng = random.Random(5)
    a, b, c, P = _setup(group, gens, rng, 8)
    proof = _prove(group, gens, a, b, c, 8)
    tv = Transcript.fiat_shamir(group.order)
    assert not ipa_verify(
        group, gens.g[:8], gens.h[:8], gens.u, P, c, 8, proof, tv, b"other"
    )
