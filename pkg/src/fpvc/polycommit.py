"""Multilinear polynomial commitment openings.

A table committed as P1 = g^evals is opened at a point z by proving the inner
product <evals, chi(z)> with the inner-product argument against P1 * h^chi(z).
"""

from dataclasses import dataclass

from .group import Group, GeneratorSet, commit
from .ipa import IpaProof, ipa_prove, ipa_verify
from .mle import MleTable, chi_vector, mle_eval
from .transcript import PROVER, Transcript


class PolyCommitError(ValueError):
    pass


@dataclass
class OpeningProof:
    value: int
    ipa: IpaProof


def pc_commit(group: Group, gens: GeneratorSet, tbl: MleTable) -> int:
    gens.require(len(tbl.evals))
    return commit(group, gens.g, tbl.evals)


def pc_open(
    group: Group,
    gens: GeneratorSet,
    P1: int,
    tbl: MleTable,
    z: list,
    tr: Transcript,
    label: bytes,
) -> OpeningProof:
    if len(z) != tbl.v:
        raise PolyCommitError("evaluation point does not match table arity")
    size = 1 << tbl.v
    gens.require(size)
    p = group.order
    b = chi_vector(p, z)
    value = mle_eval(p, tbl, z)
    P = group.mul(P1, commit(group, gens.h, b))
    tr.absorb(label + b"/val", group.field.encode_scalar(value), PROVER)
    tr.absorb_common(label + b"/P", group.encode_point(P))
    proof = ipa_prove(
        group, gens.g[:size], gens.h[:size], gens.u, tbl.evals, b, value, tr, label
    )
    return OpeningProof(value=value, ipa=proof)


def pc_verify(
    group: Group,
    gens: GeneratorSet,
    P1: int,
    z: list,
    v_count: int,
    proof: OpeningProof,
    tr: Transcript,
    label: bytes,
) -> bool:
    if len(z) != v_count or (1 << v_count) > gens.tau:
        return False
    size = 1 << v_count
    p = group.order
    b = chi_vector(p, z)
    P = group.mul(P1, commit(group, gens.h, b))
    tr.absorb(label + b"/val", group.field.encode_scalar(proof.value % p), PROVER)
    tr.absorb_common(label + b"/P", group.encode_point(P))
    return ipa_verify(
        group,
        gens.g[:size],
        gens.h[:size],
        gens.u,
        P,
        proof.value % p,
        size,
        proof.ipa,
        tr,
        label,
    )
