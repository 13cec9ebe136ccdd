"""Aggregated range proof: m committed values each in [0, 2^n - 1].

Bulletproofs-style bit decomposition without the zero-knowledge blinding
stage: the prover commits to the concatenated bit vector, and two
inner-product arguments tie the bits to the committed values and to the
combined constraint polynomial.
"""

from dataclasses import dataclass

from .group import Group, GeneratorSet, commit, msm
from .ipa import IpaProof, ipa_prove, ipa_verify
from .transcript import PROVER, Transcript


class RangeProofError(ValueError):
    pass


@dataclass
class RangeProof:
    A: int  # commitment g^{a_L} h^{a_R} to the bit decomposition
    qz: int  # claimed <(1, z, ..., z^{m-1}), v>
    ipa_q: IpaProof
    ipa_lr: IpaProof


def _powers(p: int, x: int, count: int) -> list:
    out = [1] * count
    for i in range(1, count):
        out[i] = out[i - 1] * x % p
    return out


def _check_shape(m: int, n: int) -> None:
    if m < 1 or m & (m - 1):
        raise RangeProofError(f"value count {m} must be a power of two (pad with zeros)")
    if n < 1 or n & (n - 1):
        raise RangeProofError(f"bit width {n} must be a power of two")


def rp_prove(
    group: Group,
    gens: GeneratorSet,
    values: list,
    n: int,
    tr: Transcript,
    label: bytes,
) -> RangeProof:
    p = group.order
    m = len(values)
    _check_shape(m, n)
    mn = m * n
    gens.require(mn)
    values = [v % p for v in values]
    for v in values:
        if v >= 1 << n:
            raise RangeProofError(f"value {v} outside [0, 2^{n})")

    # little-endian bits of value j at offsets (j-1)n .. jn-1
    a_l = [(v >> k) & 1 for v in values for k in range(n)]
    a_r = [(bit - 1) % p for bit in a_l]
    A = group.mul(commit(group, gens.g, a_l), commit(group, gens.h, a_r))
    tr.absorb(label + b"/A", group.encode_point(A), PROVER)

    y = tr.challenge_scalar(label + b"/y")
    z = tr.challenge_scalar(label + b"/z")

    zm = _powers(p, z, m)
    qz = sum(zi * v for zi, v in zip(zm, values)) % p
    tr.absorb(label + b"/qz", group.field.encode_scalar(qz), PROVER)
    ipa_q = ipa_prove(
        group, gens.g[:m], gens.h[:m], gens.u, values, zm, qz, tr, label + b"/q"
    )

    ypow = _powers(p, y, mn)
    two = _powers(p, 2, n)
    ell = [(bit - z) % p for bit in a_l]
    r = [0] * mn
    for j in range(m):
        zj = pow(z, j + 2, p)  # z^{1+j} with j counted from 1
        for k in range(n):
            i = j * n + k
            r[i] = (ypow[i] * (a_r[i] + z) + zj * two[k]) % p
    delta = _delta(p, y, z, m, n)
    t = (delta + z * z % p * qz) % p
    h_prime = _fold_h(group, gens.h[:mn], y)
    ipa_lr = ipa_prove(
        group, gens.g[:mn], h_prime, gens.u, ell, r, t, tr, label + b"/lr"
    )
    return RangeProof(A=A, qz=qz, ipa_q=ipa_q, ipa_lr=ipa_lr)


def _delta(p: int, y: int, z: int, m: int, n: int) -> int:
    mn = m * n
    sum_y = 0
    acc = 1
    for _ in range(mn):
        sum_y += acc
        acc = acc * y % p
    sum_y %= p
    z2 = z * z % p
    sum_z = 0
    zj = z2 * z % p  # z^{j+2}, j = 1
    for _ in range(m):
        sum_z = (sum_z + zj) % p
        zj = zj * z % p
    return ((z - z2) * sum_y - sum_z * ((1 << n) - 1)) % p


def _fold_h(group: Group, h: list, y: int) -> list:
    """h'_i = h_i ^ {y^{-(i-1)}}, 1-indexed."""
    p = group.order
    yi = pow(y, -1, p)
    out = []
    acc = 1
    for hi in h:
        out.append(group.exp(hi, acc) if acc != 1 else hi)
        acc = acc * yi % p
    return out


def rp_verify(
    group: Group,
    gens: GeneratorSet,
    P: int,
    m: int,
    n: int,
    proof: RangeProof,
    tr: Transcript,
    label: bytes,
) -> bool:
    p = group.order
    try:
        _check_shape(m, n)
    except RangeProofError:
        return False
    mn = m * n
    if mn > gens.tau or not group.is_element(proof.A):
        return False

    tr.absorb(label + b"/A", group.encode_point(proof.A), PROVER)
    y = tr.challenge_scalar(label + b"/y")
    z = tr.challenge_scalar(label + b"/z")

    zm = _powers(p, z, m)
    qz = proof.qz % p
    tr.absorb(label + b"/qz", group.field.encode_scalar(qz), PROVER)
    P_q = group.mul(P, commit(group, gens.h[:m], zm))
    if not ipa_verify(
        group, gens.g[:m], gens.h[:m], gens.u, P_q, qz, m, proof.ipa_q, tr, label + b"/q"
    ):
        return False

    ypow = _powers(p, y, mn)
    two = _powers(p, 2, n)
    h_prime = _fold_h(group, gens.h[:mn], y)
    exp_h = [0] * mn
    for j in range(m):
        zj = pow(z, j + 2, p)
        for k in range(n):
            i = j * n + k
            exp_h[i] = (z * ypow[i] + zj * two[k]) % p
    delta = _delta(p, y, z, m, n)
    t = (delta + z * z % p * qz) % p
    P_lr = group.mul(
        group.mul(proof.A, msm(group, gens.g[:mn], [(-z) % p] * mn)),
        msm(group, h_prime, exp_h),
    )
    return ipa_verify(
        group, gens.g[:mn], h_prime, gens.u, P_lr, t, mn, proof.ipa_lr, tr, label + b"/lr"
    )
