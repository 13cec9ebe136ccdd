import copy
import random

import pytest

from fpvc import Transcript, commit, matrix_to_mle, vector_to_mle
from fpvc.mle import MleTable, chi_vector
from fpvc.sumcheck import (
    SumcheckError,
    interpolate,
    poly_eval,
    prove_rounds,
    restrict_cols,
    restrict_rows,
    sc_prove_equality,
    sc_prove_product,
    sc_verify_equality,
    sc_verify_product,
    verify_rounds,
)


def test_interpolate_round_trip(group):
    p = group.order
    rng = random.Random(0)
    for d in range(1, 5):
        values = [rng.randrange(p) for _ in range(d + 1)]
        coeffs = interpolate(p, values)
        assert len(coeffs) == d + 1
        for x, y in enumerate(values):
            assert poly_eval(p, coeffs, x) == y


def test_generic_rounds_match_brute_force_sum(group):
    p = group.order
    rng = random.Random(1)
    for v in range(1, 5):
        e1 = [rng.randrange(p) for _ in range(1 << v)]
        e2 = [rng.randrange(p) for _ in range(1 << v)]
        t1 = MleTable(v=v, evals=list(e1))
        t2 = MleTable(v=v, evals=list(e2))
        tr = Transcript.fiat_shamir(p)
        w, rounds, _ = prove_rounds(group, [t1, t2], 2, lambda a, b: a * b, tr, b"s")
        assert w == sum(a * b for a, b in zip(e1, e2)) % p
        tv = Transcript.fiat_shamir(p)
        res = verify_rounds(group, w, rounds, v, 2, tv, b"s")
        assert res is not None


def test_round_structure(group):
    """log2(m) rounds; each message carries d+1 coefficients."""
    p = group.order
    rng = random.Random(2)
    for v, d in [(3, 2), (4, 2), (3, 3)]:
        tables = [
            MleTable(v=v, evals=[rng.randrange(p) for _ in range(1 << v)])
            for _ in range(d)
        ]
        tr = Transcript.fiat_shamir(p)
        _, rounds, _ = prove_rounds(
            group,
            tables,
            d,
            (lambda a, b: a * b) if d == 2 else (lambda a, b, c: a * b * c),
            tr,
            b"s",
        )
        assert len(rounds) == v
        assert all(len(r) == d + 1 for r in rounds)


def test_corrupted_round_rejected(group):
    p = group.order
    rng = random.Random(3)
    t1 = MleTable(v=3, evals=[rng.randrange(p) for _ in range(8)])
    t2 = MleTable(v=3, evals=[rng.randrange(p) for _ in range(8)])
    tr = Transcript.fiat_shamir(p)
    w, rounds, _ = prove_rounds(group, [t1, t2], 2, lambda a, b: a * b, tr, b"s")
    bad = [list(r) for r in rounds]
    bad[1][0] = (bad[1][0] + 1) % p
    assert verify_rounds(group, w, bad, 3, 2, Transcript.fiat_shamir(p), b"s") is None
    assert verify_rounds(group, (w + 1) % p, rounds, 3, 2, Transcript.fiat_shamir(p), b"s") is None
    assert verify_rounds(group, w, rounds[:-1], 3, 2, Transcript.fiat_shamir(p), b"s") is None


def test_restrictions_match_mle(group):
    p = group.order
    rng = random.Random(4)
    A = [[rng.randrange(p) for _ in range(8)] for _ in range(4)]
    r1 = [rng.randrange(p) for _ in range(2)]
    restricted = restrict_rows(p, A, r1)
    full = matrix_to_mle(p, A)
    from fpvc import mle_eval

    for col in range(8):
        bits = [(col >> 2) & 1, (col >> 1) & 1, col & 1]
        assert restricted.evals[col] == mle_eval(p, full, r1 + bits)
    B = [[rng.randrange(p) for _ in range(4)] for _ in range(8)]
    r2 = [rng.randrange(p) for _ in range(2)]
    restricted_b = restrict_cols(p, B, r2)
    full_b = matrix_to_mle(p, B)
    for row in range(8):
        bits = [(row >> 2) & 1, (row >> 1) & 1, row & 1]
        assert restricted_b.evals[row] == mle_eval(p, full_b, bits + r2)


def _product_instance(group, gens, rng, n, m, k):
    p = group.order
    A = [[rng.randrange(-20, 20) % p for _ in range(m)] for _ in range(n)]
    B = [[rng.randrange(-20, 20) % p for _ in range(k)] for _ in range(m)]
    P_A = commit(group, gens.g, [x for r in A for x in r])
    P_B = commit(group, gens.g, [x for r in B for x in r])
    r1 = [rng.randrange(1, p) for _ in range((n - 1).bit_length())]
    r2 = [rng.randrange(1, p) for _ in range((k - 1).bit_length())]
    return A, B, P_A, P_B, r1, r2


def _prove_product(group, gens, A, B, P_A, P_B, r1, r2):
    p = group.order
    tr = Transcript.fiat_shamir(p)
    return sc_prove_product(
        group,
        gens,
        P_A,
        P_B,
        matrix_to_mle(p, A),
        matrix_to_mle(p, B),
        restrict_rows(p, A, r1),
        restrict_cols(p, B, r2),
        r1,
        r2,
        tr,
        b"sc",
    )


def test_product_form_complete_and_sound(group, gens):
    p = group.order
    rng = random.Random(5)
    for n, m, k in [(2, 2, 2), (4, 8, 2), (8, 8, 8)]:
        A, B, P_A, P_B, r1, r2 = _product_instance(group, gens, rng, n, m, k)
        proof = _prove_product(group, gens, A, B, P_A, P_B, r1, r2)
        log_m = (m - 1).bit_length()
        tv = Transcript.fiat_shamir(p)
        assert sc_verify_product(group, gens, P_A, P_B, r1, r2, log_m, proof, tv, b"sc")
        # w equals the brute-force sum over l of a~(r1,l) * b~(l,r2)
        ar = restrict_rows(p, A, r1)
        br = restrict_cols(p, B, r2)
        assert proof.w == sum(x * y for x, y in zip(ar.evals, br.evals)) % p

        bad = copy.deepcopy(proof)
        bad.w = (bad.w + 1) % p
        assert not sc_verify_product(
            group, gens, P_A, P_B, r1, r2, log_m, bad, Transcript.fiat_shamir(p), b"sc"
        )
        bad = copy.deepcopy(proof)
        bad.open_a.value = (bad.open_a.value + 1) % p
        assert not sc_verify_product(
            group, gens, P_A, P_B, r1, r2, log_m, bad, Transcript.fiat_shamir(p), b"sc"
        )
        assert not sc_verify_product(
            group,
            gens,
            group.mul(P_A, gens.g[0]),
            P_B,
            r1,
            r2,
            log_m,
            proof,
            Transcript.fiat_shamir(p),
            b"sc",
        )


def test_equality_form_accepts_y_equals_abs_a(group, gens):
    p = group.order
    rng = random.Random(6)
    a_vals = [rng.randrange(-100, 100) for _ in range(8)]
    a_vec = [v % p for v in a_vals]
    y_vec = [abs(v) % p for v in a_vals]
    P_A = commit(group, gens.g, a_vec)
    P_Y = commit(group, gens.g, y_vec)
    sx = [rng.randrange(1, p) for _ in range(3)]
    tr = Transcript.fiat_shamir(p)
    proof = sc_prove_equality(
        group, gens, P_A, P_Y, vector_to_mle(p, a_vec), vector_to_mle(p, y_vec), sx, tr, b"eq"
    )
    assert proof.w == 0
    assert all(len(r) == 4 for r in proof.rounds)
    tv = Transcript.fiat_shamir(p)
    assert sc_verify_equality(group, gens, P_A, P_Y, sx, 3, proof, tv, b"eq")


def test_equality_form_rejects_mismatch(group, gens):
    p = group.order
    rng = random.Random(7)
    a_vec = [rng.randrange(-100, 100) % p for _ in range(8)]
    y_vec = [abs(group.field.to_symmetric(v)) % p for v in a_vec]
    y_vec[3] = (y_vec[3] + 1) % p  # no longer |a| pointwise
    P_A = commit(group, gens.g, a_vec)
    P_Y = commit(group, gens.g, y_vec)
    sx = [rng.randrange(1, p) for _ in range(3)]
    tr = Transcript.fiat_shamir(p)
    proof = sc_prove_equality(
        group, gens, P_A, P_Y, vector_to_mle(p, a_vec), vector_to_mle(p, y_vec), sx, tr, b"eq"
    )
    # honest sum-check on a cheating witness: w != 0, so the verifier refuses
    tv = Transcript.fiat_shamir(p)
    assert not sc_verify_equality(group, gens, P_A, P_Y, sx, 3, proof, tv, b"eq")

    # forcing w = 0 breaks the first-round identity instead
    forced = copy.deepcopy(proof)
    forced.w = 0
    tv = Transcript.fiat_shamir(p)
    assert not sc_verify_equality(group, gens, P_A, P_Y, sx, 3, forced, tv, b"eq")


def test_table_arity_mismatch(group, gens):
    p = group.order
    t1 = MleTable(v=2, evals=[1, 2, 3, 4])
    t2 = MleTable(v=3, evals=[0] * 8)
    with pytest.raises(SumcheckError):
        prove_rounds(group, [t1, t2], 2, lambda a, b: a * b, Transcript.fiat_shamir(p), b"s")
    with pytest.raises(SumcheckError):
        restrict_rows(p, [[1, 2]], [5, 7])
