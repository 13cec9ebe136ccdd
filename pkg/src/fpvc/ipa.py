"""Logarithmic inner-product argument.

Proves knowledge of vectors a, b with P = g^a h^b and c = <a, b> using
recursive halving: each round transmits one (L, R) pair, and the base case
transmits the two folded scalars.
"""

from dataclasses import dataclass

from .group import Group, commit, msm
from .transcript import PROVER, Transcript


class IpaError(ValueError):
    pass


@dataclass
class IpaProof:
    folds: list  # (L, R) group-element pairs, one per halving round
    final_a: int
    final_b: int

    def num_group_elements(self) -> int:
        return 2 * len(self.folds)


def _inner(p: int, a, b) -> int:
    return sum(x * y for x, y in zip(a, b)) % p


def ipa_prove(
    group: Group,
    gens_g: list,
    gens_h: list,
    u: int,
    a: list,
    b: list,
    c: int,
    tr: Transcript,
    label: bytes,
) -> IpaProof:
    p = group.order
    n = len(a)
    if len(b) != n or n == 0 or n & (n - 1):
        raise IpaError("vector lengths must match and be a power of two")
    if len(gens_g) < n or len(gens_h) < n:
        raise IpaError("not enough generators")
    if _inner(p, a, b) != c % p:
        raise IpaError("claimed inner product is wrong")

    a = [x % p for x in a]
    b = [x % p for x in b]
    g = list(gens_g[:n])
    h = list(gens_h[:n])

    x0 = tr.challenge_scalar(label + b"/x0")
    u_new = group.exp(u, x0)

    folds = []
    while n > 1:
        n2 = n // 2
        c_l = _inner(p, a[:n2], b[n2:])
        c_r = _inner(p, a[n2:], b[:n2])
        big_l = group.mul(
            group.mul(msm(group, g[n2:], a[:n2]), msm(group, h[:n2], b[n2:])),
            group.exp(u_new, c_l),
        )
        big_r = group.mul(
            group.mul(msm(group, g[:n2], a[n2:]), msm(group, h[n2:], b[:n2])),
            group.exp(u_new, c_r),
        )
        tr.absorb(label + b"/L", group.encode_point(big_l), PROVER)
        tr.absorb(label + b"/R", group.encode_point(big_r), PROVER)
        folds.append((big_l, big_r))
        x = tr.challenge_scalar(label + b"/x")
        xi = pow(x, -1, p)
        g = [group.mul(group.exp(g[i], xi), group.exp(g[n2 + i], x)) for i in range(n2)]
        h = [group.mul(group.exp(h[i], x), group.exp(h[n2 + i], xi)) for i in range(n2)]
        a = [(x * a[i] + xi * a[n2 + i]) % p for i in range(n2)]
        b = [(xi * b[i] + x * b[n2 + i]) % p for i in range(n2)]
        n = n2

    fb = group.field
    tr.absorb(label + b"/a", fb.encode_scalar(a[0]), PROVER)
    tr.absorb(label + b"/b", fb.encode_scalar(b[0]), PROVER)
    return IpaProof(folds=folds, final_a=a[0], final_b=b[0])


def ipa_verify(
    group: Group,
    gens_g: list,
    gens_h: list,
    u: int,
    P: int,
    c: int,
    n: int,
    proof: IpaProof,
    tr: Transcript,
    label: bytes,
) -> bool:
    p = group.order
    if n == 0 or n & (n - 1) or len(gens_g) < n or len(gens_h) < n:
        return False
    if len(proof.folds) != (n - 1).bit_length():
        return False

    g = list(gens_g[:n])
    h = list(gens_h[:n])

    x0 = tr.challenge_scalar(label + b"/x0")
    u_new = group.exp(u, x0)
    acc = group.mul(P, group.exp(u_new, c))

    for big_l, big_r in proof.folds:
        n2 = n // 2
        if not (group.is_element(big_l) and group.is_element(big_r)):
            return False
        tr.absorb(label + b"/L", group.encode_point(big_l), PROVER)
        tr.absorb(label + b"/R", group.encode_point(big_r), PROVER)
        x = tr.challenge_scalar(label + b"/x")
        xi = pow(x, -1, p)
        acc = group.mul(
            group.mul(group.exp(big_l, x * x % p), acc), group.exp(big_r, xi * xi % p)
        )
        g = [group.mul(group.exp(g[i], xi), group.exp(g[n2 + i], x)) for i in range(n2)]
        h = [group.mul(group.exp(h[i], x), group.exp(h[n2 + i], xi)) for i in range(n2)]
        n = n2

    a0 = proof.final_a % p
    b0 = proof.final_b % p
    fb = group.field
    tr.absorb(label + b"/a", fb.encode_scalar(a0), PROVER)
    tr.absorb(label + b"/b", fb.encode_scalar(b0), PROVER)
    expected = group.mul(
        group.mul(group.exp(g[0], a0), group.exp(h[0], b0)),
        group.exp(u_new, a0 * b0 % p),
    )
    return acc == expected
