"""Layer-level protocols: matrix multiplication with rounding, and ReLU.

The matmul protocol proves C = A * B and C' = round(C) from commitments only:
a product sum-check ties A, B and C together, and two aggregated range proofs
pin the rounding residue E = C - 2^s * C' and the magnitude of C'.

The ReLU protocol proves Y = |A| (range proof on Y plus an equality sum-check
on a^2 = y^2) and closes B = (A + Y) / 2 with the homomorphic commitment
identity P_B^2 = P_A * P_Y.
"""

from dataclasses import dataclass

from .field import FixedPointParams
from .group import Group, GeneratorSet, commit
from .mle import matrix_to_mle, vector_to_mle
from .polycommit import OpeningProof, pc_open, pc_verify
from .rangeproof import RangeProof, rp_prove, rp_verify
from .sumcheck import (
    EqualitySumcheckProof,
    ProductSumcheckProof,
    restrict_cols,
    restrict_rows,
    sc_prove_equality,
    sc_prove_product,
    sc_verify_equality,
    sc_verify_product,
)
from .transcript import PROVER, Transcript


class LayerError(ValueError):
    pass


@dataclass
class MatmulRoundProof:
    P_A: int
    P_B: int
    P_C: int
    P_Cp: int
    sumcheck: ProductSumcheckProof
    open_c: OpeningProof
    range_e: RangeProof
    range_cp: RangeProof


@dataclass
class ReluProof:
    P_Y: int
    P_B: int
    range_y: RangeProof
    sumcheck_eq: EqualitySumcheckProof


def _log2(x: int, what: str) -> int:
    if x < 1 or x & (x - 1):
        raise LayerError(f"{what} = {x} must be a power of two")
    return (x - 1).bit_length()


def generator_demand(n: int, m: int, k: int, fx: FixedPointParams) -> int:
    """Generators needed by one matmul+rounding instance."""
    return max(n * m, m * k, n * k * fx.s, n * k * (fx.t + 2))


def _check_field(group: Group, fx: FixedPointParams, m: int) -> None:
    if group.order.bit_length() < fx.min_modulus_bits(m):
        raise LayerError("field modulus too small for this fixed-point format")


def prove_matmul_round(
    group: Group,
    gens: GeneratorSet,
    fx: FixedPointParams,
    A: list,
    B: list,
    tr: Transcript,
    label: bytes = b"mm",
):
    """Prove C = A*B, C' = round(C).  Returns (C', MatmulRoundProof)."""
    p = group.order
    fld = group.field
    n = len(A)
    m = len(A[0])
    k = len(B[0])
    log_n, log_m, log_k = _log2(n, "n"), _log2(m, "m"), _log2(k, "k")
    if len(B) != m:
        raise LayerError("inner dimensions disagree")
    _check_field(group, fx, m)
    gens.require(generator_demand(n, m, k, fx))

    bound_in = 1 << (fx.t + fx.s)
    for M, name in ((A, "A"), (B, "B")):
        for row in M:
            for x in row:
                if abs(fld.to_symmetric(x)) >= bound_in:
                    raise LayerError(f"entry of {name} exceeds fixed-point range")

    C = [
        [sum(A[i][l] * B[l][j] for l in range(m)) % p for j in range(k)]
        for i in range(n)
    ]
    Cp = [[fld.round_fixed(x, fx) for x in row] for row in C]
    bound_out = 1 << (fx.t + 1)
    for row in Cp:
        for x in row:
            if abs(fld.to_symmetric(x)) >= bound_out:
                raise LayerError("rounded output exceeds fixed-point range")

    a_tbl = matrix_to_mle(p, A)
    b_tbl = matrix_to_mle(p, B)
    c_tbl = matrix_to_mle(p, C)
    cp_flat = [x for row in Cp for x in row]

    P_A = commit(group, gens.g, a_tbl.evals)
    P_B = commit(group, gens.g, b_tbl.evals)
    P_C = commit(group, gens.g, c_tbl.evals)
    tr.absorb(label + b"/P_A", group.encode_point(P_A), PROVER)
    tr.absorb(label + b"/P_B", group.encode_point(P_B), PROVER)
    tr.absorb(label + b"/P_C", group.encode_point(P_C), PROVER)

    r1 = tr.challenge_vector(label + b"/r1", log_n)
    r2 = tr.challenge_vector(label + b"/r2", log_k)

    sc = sc_prove_product(
        group,
        gens,
        P_A,
        P_B,
        a_tbl,
        b_tbl,
        restrict_rows(p, A, r1),
        restrict_cols(p, B, r2),
        r1,
        r2,
        tr,
        label + b"/sc",
    )
    open_c = pc_open(group, gens, P_C, c_tbl, r1 + r2, tr, label + b"/open_c")

    P_Cp = commit(group, gens.g, cp_flat)
    tr.absorb(label + b"/P_Cp", group.encode_point(P_Cp), PROVER)

    shift_e = 1 << (fx.s - 1)
    e_shifted = [
        (C[i][j] - (cp_flat[i * k + j] << fx.s) + shift_e) % p
        for i in range(n)
        for j in range(k)
    ]
    range_e = rp_prove(group, gens, e_shifted, fx.s, tr, label + b"/rp_e")

    shift_cp = 1 << (fx.t + 1)
    cp_shifted = [(x + shift_cp) % p for x in cp_flat]
    range_cp = rp_prove(group, gens, cp_shifted, fx.t + 2, tr, label + b"/rp_cp")

    proof = MatmulRoundProof(
        P_A=P_A,
        P_B=P_B,
        P_C=P_C,
        P_Cp=P_Cp,
        sumcheck=sc,
        open_c=open_c,
        range_e=range_e,
        range_cp=range_cp,
    )
    return Cp, proof


def verify_matmul_round(
    group: Group,
    gens: GeneratorSet,
    fx: FixedPointParams,
    P_A: int,
    P_B: int,
    n: int,
    m: int,
    k: int,
    proof: MatmulRoundProof,
    tr: Transcript,
    label: bytes = b"mm",
) -> bool:
    p = group.order
    try:
        log_n, log_m, log_k = _log2(n, "n"), _log2(m, "m"), _log2(k, "k")
        _check_field(group, fx, m)
        gens.require(generator_demand(n, m, k, fx))
    except LayerError:
        return False
    if proof.P_A != P_A or proof.P_B != P_B:
        return False
    for pt in (proof.P_A, proof.P_B, proof.P_C, proof.P_Cp):
        if not group.is_element(pt):
            return False
    tr.absorb(label + b"/P_A", group.encode_point(P_A), PROVER)
    tr.absorb(label + b"/P_B", group.encode_point(P_B), PROVER)
    tr.absorb(label + b"/P_C", group.encode_point(proof.P_C), PROVER)

    r1 = tr.challenge_vector(label + b"/r1", log_n)
    r2 = tr.challenge_vector(label + b"/r2", log_k)

    if not sc_verify_product(
        group, gens, P_A, P_B, r1, r2, log_m, proof.sumcheck, tr, label + b"/sc"
    ):
        return False
    if not pc_verify(
        group, gens, proof.P_C, r1 + r2, log_n + log_k, proof.open_c, tr, label + b"/open_c"
    ):
        return False
    if proof.sumcheck.w % p != proof.open_c.value % p:
        return False

    tr.absorb(label + b"/P_Cp", group.encode_point(proof.P_Cp), PROVER)
    nk = n * k

    # commitment to E + 2^{s-1}: P_C / P_Cp^{2^s} * g^{2^{s-1}}
    shift_e = 1 << (fx.s - 1)
    P_e = group.mul(
        group.mul(proof.P_C, group.exp(proof.P_Cp, -(1 << fx.s))),
        commit(group, gens.g[:nk], [shift_e] * nk),
    )
    if not rp_verify(group, gens, P_e, nk, fx.s, proof.range_e, tr, label + b"/rp_e"):
        return False

    shift_cp = 1 << (fx.t + 1)
    P_cp_shift = group.mul(proof.P_Cp, commit(group, gens.g[:nk], [shift_cp] * nk))
    return rp_verify(
        group, gens, P_cp_shift, nk, fx.t + 2, proof.range_cp, tr, label + b"/rp_cp"
    )


def default_relu_width(fx: FixedPointParams) -> int:
    """Bit width for |A| when A comes from a rounded layer."""
    return fx.t + 2


def prove_relu(
    group: Group,
    gens: GeneratorSet,
    fx: FixedPointParams,
    a_vec: list,
    P_A: int,
    tr: Transcript,
    label: bytes = b"relu",
    width: int = None,
):
    """Prove B = ReLU(A) elementwise on a flat vector.  Returns (B, ReluProof)."""
    p = group.order
    fld = group.field
    nk = len(a_vec)
    log_nk = _log2(nk, "nk")
    if width is None:
        width = default_relu_width(fx)
    gens.require(nk * width)

    bound = 1 << width
    syms = [fld.to_symmetric(x) for x in a_vec]
    if any(abs(s) >= bound for s in syms):
        raise LayerError("ReLU input exceeds the provable magnitude bound")
    y_vec = [abs(s) % p for s in syms]
    inv2 = pow(2, -1, p)
    b_vec = [(a + y) * inv2 % p for a, y in zip(a_vec, y_vec)]

    a_tbl = vector_to_mle(p, a_vec)
    y_tbl = vector_to_mle(p, y_vec)

    tr.absorb_common(label + b"/P_A", group.encode_point(P_A))
    P_Y = commit(group, gens.g, y_tbl.evals)
    tr.absorb(label + b"/P_Y", group.encode_point(P_Y), PROVER)

    range_y = rp_prove(group, gens, y_vec, width, tr, label + b"/rp_y")

    P_B = commit(group, gens.g, b_vec)
    tr.absorb(label + b"/P_B", group.encode_point(P_B), PROVER)

    sx = tr.challenge_vector(label + b"/sx", log_nk)
    sc = sc_prove_equality(
        group, gens, P_A, P_Y, a_tbl, y_tbl, sx, tr, label + b"/sc"
    )
    proof = ReluProof(P_Y=P_Y, P_B=P_B, range_y=range_y, sumcheck_eq=sc)
    return b_vec, proof


def verify_relu(
    group: Group,
    gens: GeneratorSet,
    fx: FixedPointParams,
    P_A: int,
    nk: int,
    proof: ReluProof,
    tr: Transcript,
    label: bytes = b"relu",
    width: int = None,
) -> bool:
    group_ok = group.is_element(proof.P_Y) and group.is_element(proof.P_B)
    if not group_ok:
        return False
    try:
        log_nk = _log2(nk, "nk")
    except LayerError:
        return False
    if width is None:
        width = default_relu_width(fx)
    if nk * width > gens.tau:
        return False

    tr.absorb_common(label + b"/P_A", group.encode_point(P_A))
    tr.absorb(label + b"/P_Y", group.encode_point(proof.P_Y), PROVER)
    if not rp_verify(group, gens, proof.P_Y, nk, width, proof.range_y, tr, label + b"/rp_y"):
        return False
    tr.absorb(label + b"/P_B", group.encode_point(proof.P_B), PROVER)

    sx = tr.challenge_vector(label + b"/sx", log_nk)
    if not sc_verify_equality(
        group, gens, P_A, proof.P_Y, sx, log_nk, proof.sumcheck_eq, tr, label + b"/sc"
    ):
        return False
    # B = (A + Y)/2  <=>  P_B^2 = P_A * P_Y
    return group.exp(proof.P_B, 2) == group.mul(P_A, proof.P_Y)
