"""Sum-check engine plus the two final-check instantiations used by layers.

The generic engine proves sum_{x in {0,1}^v} f(x) = w where f is a pointwise
combination of multilinear tables, folding each table in place after every
challenge.  Round messages travel as monomial coefficients so the degree bound
is checkable by length.

Two wrappers pin down the final check:

* product form (d=2): f(x) = a(x) * b(x) on restricted matrix rows/columns,
  closed by two polynomial-commitment openings of the full tables.
* equality form (d=3): f(x) = eq(sx, x) * (a(x)^2 - y(x)^2), claimed sum zero,
  closed by openings of a and y plus a local eq evaluation.
"""

from dataclasses import dataclass
from functools import lru_cache

from .group import Group, GeneratorSet
from .mle import MleTable, chi_vector, eq_eval
from .polycommit import OpeningProof, pc_open, pc_verify
from .transcript import PROVER, Transcript


class SumcheckError(ValueError):
    pass


@dataclass
class ProductSumcheckProof:
    w: int
    rounds: list  # per round: d+1 monomial coefficients
    open_a: OpeningProof
    open_b: OpeningProof


@dataclass
class EqualitySumcheckProof:
    w: int
    rounds: list
    open_a: OpeningProof
    open_y: OpeningProof


@lru_cache(maxsize=None)
def _lagrange_basis(p: int, d: int):
    """Monomial coefficients of the Lagrange basis over points 0..d."""
    basis = []
    for i in range(d + 1):
        poly = [1]
        denom = 1
        for j in range(d + 1):
            if j == i:
                continue
            new = [0] * (len(poly) + 1)
            for k, c in enumerate(poly):
                new[k] = (new[k] - j * c) % p
                new[k + 1] = (new[k + 1] + c) % p
            poly = new
            denom *= i - j
        inv = pow(denom % p, -1, p)
        basis.append([c * inv % p for c in poly])
    return basis


def interpolate(p: int, values: list) -> list:
    """Monomial coefficients of the unique poly through (0, v0)..(d, vd)."""
    d = len(values) - 1
    basis = _lagrange_basis(p, d)
    coeffs = [0] * (d + 1)
    for y, b in zip(values, basis):
        for k, c in enumerate(b):
            coeffs[k] = (coeffs[k] + y * c) % p
    return coeffs


def poly_eval(p: int, coeffs: list, x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def _encode_coeffs(field, coeffs: list) -> bytes:
    return b"".join(field.encode_scalar(c) for c in coeffs)


def prove_rounds(group: Group, tables: list, degree: int, combine, tr: Transcript, label: bytes):
    """Run the prover side of the generic sum-check.

    Returns (w, rounds, challenges).  ``tables`` are folded copies; the caller
    keeps its originals.
    """
    p = group.order
    v = tables[0].v
    if any(t.v != v for t in tables):
        raise SumcheckError("tables must share the variable count")
    evs = [list(t.evals) for t in tables]
    w = 0
    for vals in zip(*evs):
        w += combine(*vals)
    w %= p
    tr.absorb(label + b"/w", group.field.encode_scalar(w), PROVER)

    rounds = []
    challenges = []
    for _ in range(v):
        half = len(evs[0]) // 2
        values = []
        for x in range(degree + 1):
            tot = 0
            for j in range(half):
                args = [
                    (e[j] + x * (e[j + half] - e[j])) % p if x else e[j]
                    for e in evs
                ]
                tot += combine(*args)
            values.append(tot % p)
        coeffs = interpolate(p, values)
        tr.absorb(label + b"/round", _encode_coeffs(group.field, coeffs), PROVER)
        rounds.append(coeffs)
        r = tr.challenge_scalar(label + b"/r")
        challenges.append(r)
        evs = [
            [(e[j] + r * (e[j + half] - e[j])) % p for j in range(half)] for e in evs
        ]
    return w, rounds, challenges


def verify_rounds(group: Group, w: int, rounds: list, v: int, degree: int, tr: Transcript, label: bytes):
    """Check the inductive round identities.

    Returns (challenges, final_claim) on success, None on failure.  The final
    claim is f_v(r_v) — or w itself when v = 0 — and must still be checked
    against an evaluation of f by the caller.
    """
    p = group.order
    if len(rounds) != v:
        return None
    w %= p
    tr.absorb(label + b"/w", group.field.encode_scalar(w), PROVER)
    expected = w
    challenges = []
    for coeffs in rounds:
        if len(coeffs) != degree + 1:
            return None
        coeffs = [c % p for c in coeffs]
        f0 = coeffs[0]
        f1 = sum(coeffs) % p
        if (f0 + f1) % p != expected:
            return None
        tr.absorb(label + b"/round", _encode_coeffs(group.field, coeffs), PROVER)
        r = tr.challenge_scalar(label + b"/r")
        challenges.append(r)
        expected = poly_eval(p, coeffs, r)
    return challenges, expected


# -- product form (matrix multiplication) ---------------------------------


def restrict_rows(p: int, matrix: list, r1: list) -> MleTable:
    """Table of a~(r1, .) over the column variables of an n x m matrix."""
    chi = chi_vector(p, r1)
    if len(chi) != len(matrix):
        raise SumcheckError("row challenge does not match matrix height")
    m = len(matrix[0])
    out = [0] * m
    for c, row in zip(chi, matrix):
        for j in range(m):
            out[j] = (out[j] + c * row[j]) % p
    return MleTable(v=(m - 1).bit_length(), evals=out)


def restrict_cols(p: int, matrix: list, r2: list) -> MleTable:
    """Table of b~(., r2) over the row variables of an m x k matrix."""
    chi = chi_vector(p, r2)
    if len(chi) != len(matrix[0]):
        raise SumcheckError("column challenge does not match matrix width")
    out = [sum(c * x for c, x in zip(chi, row)) % p for row in matrix]
    return MleTable(v=(len(out) - 1).bit_length(), evals=out)


def sc_prove_product(
    group: Group,
    gens: GeneratorSet,
    P_A: int,
    P_B: int,
    a_full: MleTable,
    b_full: MleTable,
    a_restricted: MleTable,
    b_restricted: MleTable,
    r1: list,
    r2: list,
    tr: Transcript,
    label: bytes,
) -> ProductSumcheckProof:
    p = group.order
    w, rounds, rho = prove_rounds(
        group,
        [a_restricted, b_restricted],
        2,
        lambda x, y: x * y,
        tr,
        label,
    )
    open_a = pc_open(group, gens, P_A, a_full, list(r1) + rho, tr, label + b"/open_a")
    open_b = pc_open(group, gens, P_B, b_full, rho + list(r2), tr, label + b"/open_b")
    return ProductSumcheckProof(w=w, rounds=rounds, open_a=open_a, open_b=open_b)


def sc_verify_product(
    group: Group,
    gens: GeneratorSet,
    P_A: int,
    P_B: int,
    r1: list,
    r2: list,
    log_m: int,
    proof: ProductSumcheckProof,
    tr: Transcript,
    label: bytes,
) -> bool:
    p = group.order
    res = verify_rounds(group, proof.w, proof.rounds, log_m, 2, tr, label)
    if res is None:
        return False
    rho, final_claim = res
    if not pc_verify(
        group, gens, P_A, list(r1) + rho, len(r1) + log_m, proof.open_a, tr, label + b"/open_a"
    ):
        return False
    if not pc_verify(
        group, gens, P_B, rho + list(r2), log_m + len(r2), proof.open_b, tr, label + b"/open_b"
    ):
        return False
    return final_claim == proof.open_a.value * proof.open_b.value % p


# -- equality form (ReLU absolute-value check) ----------------------------


def sc_prove_equality(
    group: Group,
    gens: GeneratorSet,
    P_A: int,
    P_Y: int,
    a_tbl: MleTable,
    y_tbl: MleTable,
    sx: list,
    tr: Transcript,
    label: bytes,
) -> EqualitySumcheckProof:
    p = group.order
    if a_tbl.v != y_tbl.v or len(sx) != a_tbl.v:
        raise SumcheckError("table/point arity mismatch")
    eq_tbl = MleTable(v=a_tbl.v, evals=chi_vector(p, sx))
    w, rounds, r = prove_rounds(
        group,
        [eq_tbl, a_tbl, y_tbl],
        3,
        lambda e, a, y: e * (a * a - y * y),
        tr,
        label,
    )
    open_a = pc_open(group, gens, P_A, a_tbl, r, tr, label + b"/open_a")
    open_y = pc_open(group, gens, P_Y, y_tbl, r, tr, label + b"/open_y")
    return EqualitySumcheckProof(w=w, rounds=rounds, open_a=open_a, open_y=open_y)


def sc_verify_equality(
    group: Group,
    gens: GeneratorSet,
    P_A: int,
    P_Y: int,
    sx: list,
    v: int,
    proof: EqualitySumcheckProof,
    tr: Transcript,
    label: bytes,
) -> bool:
    p = group.order
    if proof.w % p != 0:
        # the claim being proven is that the sum is exactly zero
        return False
    res = verify_rounds(group, proof.w, proof.rounds, v, 3, tr, label)
    if res is None:
        return False
    r, final_claim = res
    if not pc_verify(group, gens, P_A, r, v, proof.open_a, tr, label + b"/open_a"):
        return False
    if not pc_verify(group, gens, P_Y, r, v, proof.open_y, tr, label + b"/open_y"):
        return False
    e = eq_eval(p, sx, r)
    va = proof.open_a.value
    vy = proof.open_y.value
    return final_claim == e * (va * va - vy * vy) % p
