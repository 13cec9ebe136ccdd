import random

import gmpy2
import pytest

from fpvc import Group, GroupError, GroupParams, commit, derive_generators, msm, preset
from fpvc.group import GeneratorSet


def test_presets_are_consistent():
    for name in ("test", "default"):
        params = preset(name)
        assert gmpy2.is_prime(params.p)
        assert gmpy2.is_prime(params.q)
        assert params.q == params.cofactor * params.p + 1
    assert preset("test").p.bit_length() == 128
    assert preset("default").p.bit_length() == 256
    assert preset("default").q.bit_length() == 2048
    with pytest.raises(GroupError):
        preset("nope")


def test_bad_params_rejected():
    with pytest.raises(GroupError):
        GroupParams(name="x", q=23, p=7, cofactor=2)


def test_subgroup_membership(group):
    g = group.hash_to_group(b"any")
    assert group.is_element(g)
    assert group.is_element(group.identity)
    assert not group.is_element(0)
    assert not group.is_element(group.q)
    # a random residue is almost surely not in the small subgroup
    assert not group.is_element(2)


def test_exp_mul_inv_laws(group):
    g = group.hash_to_group(b"laws")
    p = group.order
    assert group.exp(g, p) == group.identity
    assert group.exp(g, 0) == group.identity
    x, y = 123456789, 987654321
    assert group.mul(group.exp(g, x), group.exp(g, y)) == group.exp(g, x + y)
    assert group.mul(g, group.inv(g)) == group.identity


def test_hash_to_group_deterministic(group):
    a = group.hash_to_group(b"seed-one")
    b = group.hash_to_group(b"seed-one")
    c = group.hash_to_group(b"seed-two")
    assert a == b
    assert a != c


def test_derive_generators_deterministic_and_distinct(group):
    g1 = derive_generators(group, b"s", 16)
    g2 = derive_generators(group, b"s", 16)
    assert g1.g == g2.g and g1.h == g2.h and g1.u == g2.u
    pts = g1.g + g1.h + [g1.u]
    assert len(set(pts)) == len(pts)
    g3 = derive_generators(group, b"other", 16)
    assert g3.g[0] != g1.g[0]


def test_point_wire_format(group):
    g = group.hash_to_group(b"wire")
    assert group.decode_point(group.encode_point(g)) == g
    with pytest.raises(GroupError):
        group.decode_point(b"\x00" * (group.point_bytes - 1))
    with pytest.raises(GroupError):
        group.decode_point((2).to_bytes(group.point_bytes, "little"))


def test_commitment_homomorphism(group, gens):
    p = group.order
    rng = random.Random(5)
    a = [rng.randrange(p) for _ in range(8)]
    b = [rng.randrange(p) for _ in range(8)]
    ab = [(x + y) % p for x, y in zip(a, b)]
    assert group.mul(commit(group, gens.g, a), commit(group, gens.g, b)) == commit(
        group, gens.g, ab
    )


def test_commitment_shift_identity(group, gens):
    """P * g_i corresponds to adding 1 to coordinate i."""
    p = group.order
    vec = [3, 1, 4, 1]
    shifted = [3, 1, 5, 1]
    assert group.mul(commit(group, gens.g, vec), gens.g[2]) == commit(
        group, gens.g, shifted
    )


def test_commitment_binding_collision_scan(group, gens):
    """No two distinct small vectors collide (binding sanity scan)."""
    seen = {}
    for a in range(4):
        for b in range(4):
            for c in range(4):
                P = commit(group, gens.g, [a, b, c])
                assert P not in seen, (seen.get(P), (a, b, c))
                seen[P] = (a, b, c)


def test_msm_matches_naive(group, gens):
    p = group.order
    rng = random.Random(9)
    for n in (1, 2, 7, 8, 33, 100):
        pts = gens.g[:n]
        scalars = [rng.randrange(p) for _ in range(n)]
        naive = group.identity
        for pt, s in zip(pts, scalars):
            naive = group.mul(naive, group.exp(pt, s))
        assert msm(group, pts, scalars) == naive


def test_msm_edge_cases(group, gens):
    assert msm(group, [], []) == group.identity
    assert msm(group, gens.g[:3], [0, 0, 0]) == group.identity
    with pytest.raises(GroupError):
        msm(group, gens.g[:2], [1])


def test_commit_rejects_oversized(group, gens):
    with pytest.raises(GroupError):
        commit(group, gens.g[:2], [1, 2, 3])


def test_generator_set_require(gens):
    gens.require(gens.tau)
    with pytest.raises(GroupError):
        gens.require(gens.tau + 1)
