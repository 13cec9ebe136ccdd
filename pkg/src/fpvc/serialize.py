"""Binary encoding of proof structures.

All scalars use the canonical little-endian field encoding; group elements use
the fixed-width canonical point encoding.  Counts are little-endian u32, so
blocks are self-describing and need no external shape information.
"""

import io

from .group import Group, GroupError
from .ipa import IpaProof
from .layerproto import MatmulRoundProof, ReluProof
from .pipeline import InferenceProof
from .polycommit import OpeningProof
from .rangeproof import RangeProof
from .sumcheck import EqualitySumcheckProof, ProductSumcheckProof


class SerializeError(ValueError):
    pass


class Writer:
    def __init__(self, group: Group):
        self.group = group
        self.buf = io.BytesIO()

    def u8(self, v: int):
        self.buf.write(v.to_bytes(1, "little"))

    def u32(self, v: int):
        self.buf.write(v.to_bytes(4, "little"))

    def scalar(self, v: int):
        self.buf.write(self.group.field.encode_scalar(v))

    def point(self, v: int):
        self.buf.write(self.group.encode_point(v))

    def getvalue(self) -> bytes:
        return self.buf.getvalue()


class Reader:
    def __init__(self, group: Group, data: bytes):
        self.group = group
        self.buf = io.BytesIO(data)

    def _take(self, n: int) -> bytes:
        out = self.buf.read(n)
        if len(out) != n:
            raise SerializeError("truncated proof data")
        return out

    def u8(self) -> int:
        return self._take(1)[0]

    def u32(self) -> int:
        return int.from_bytes(self._take(4), "little")

    def scalar(self) -> int:
        try:
            return self.group.field.decode_scalar(self._take(self.group.field.scalar_bytes))
        except ValueError as exc:
            raise SerializeError(str(exc)) from exc

    def point(self) -> int:
        try:
            return self.group.decode_point(self._take(self.group.point_bytes))
        except GroupError as exc:
            raise SerializeError(str(exc)) from exc

    def done(self) -> bool:
        return self.buf.read(1) == b""


def write_ipa(w: Writer, proof: IpaProof):
    w.u32(len(proof.folds))
    for L, R in proof.folds:
        w.point(L)
        w.point(R)
    w.scalar(proof.final_a)
    w.scalar(proof.final_b)


def read_ipa(r: Reader) -> IpaProof:
    count = r.u32()
    if count > 64:
        raise SerializeError("implausible fold count")
    folds = [(r.point(), r.point()) for _ in range(count)]
    return IpaProof(folds=folds, final_a=r.scalar(), final_b=r.scalar())


def write_opening(w: Writer, proof: OpeningProof):
    w.scalar(proof.value)
    write_ipa(w, proof.ipa)


def read_opening(r: Reader) -> OpeningProof:
    return OpeningProof(value=r.scalar(), ipa=read_ipa(r))


def _write_rounds(w: Writer, rounds: list, degree: int):
    w.u32(len(rounds))
    for coeffs in rounds:
        if len(coeffs) != degree + 1:
            raise SerializeError("round message has wrong degree")
        for c in coeffs:
            w.scalar(c)


def _read_rounds(r: Reader, degree: int) -> list:
    count = r.u32()
    if count > 64:
        raise SerializeError("implausible round count")
    return [[r.scalar() for _ in range(degree + 1)] for _ in range(count)]


def write_product_sumcheck(w: Writer, proof: ProductSumcheckProof):
    w.scalar(proof.w)
    _write_rounds(w, proof.rounds, 2)
    write_opening(w, proof.open_a)
    write_opening(w, proof.open_b)


def read_product_sumcheck(r: Reader) -> ProductSumcheckProof:
    return ProductSumcheckProof(
        w=r.scalar(),
        rounds=_read_rounds(r, 2),
        open_a=read_opening(r),
        open_b=read_opening(r),
    )


def write_equality_sumcheck(w: Writer, proof: EqualitySumcheckProof):
    w.scalar(proof.w)
    _write_rounds(w, proof.rounds, 3)
    write_opening(w, proof.open_a)
    write_opening(w, proof.open_y)


def read_equality_sumcheck(r: Reader) -> EqualitySumcheckProof:
    return EqualitySumcheckProof(
        w=r.scalar(),
        rounds=_read_rounds(r, 3),
        open_a=read_opening(r),
        open_y=read_opening(r),
    )


def write_range_proof(w: Writer, proof: RangeProof):
    w.point(proof.A)
    w.scalar(proof.qz)
    write_ipa(w, proof.ipa_q)
    write_ipa(w, proof.ipa_lr)


def read_range_proof(r: Reader) -> RangeProof:
    return RangeProof(A=r.point(), qz=r.scalar(), ipa_q=read_ipa(r), ipa_lr=read_ipa(r))


def write_matmul_proof(w: Writer, proof: MatmulRoundProof):
    for pt in (proof.P_A, proof.P_B, proof.P_C, proof.P_Cp):
        w.point(pt)
    write_product_sumcheck(w, proof.sumcheck)
    write_opening(w, proof.open_c)
    write_range_proof(w, proof.range_e)
    write_range_proof(w, proof.range_cp)


def read_matmul_proof(r: Reader) -> MatmulRoundProof:
    pts = [r.point() for _ in range(4)]
    return MatmulRoundProof(
        P_A=pts[0],
        P_B=pts[1],
        P_C=pts[2],
        P_Cp=pts[3],
        sumcheck=read_product_sumcheck(r),
        open_c=read_opening(r),
        range_e=read_range_proof(r),
        range_cp=read_range_proof(r),
    )


def write_relu_proof(w: Writer, proof: ReluProof):
    w.point(proof.P_Y)
    w.point(proof.P_B)
    write_range_proof(w, proof.range_y)
    write_equality_sumcheck(w, proof.sumcheck_eq)


def read_relu_proof(r: Reader) -> ReluProof:
    return ReluProof(
        P_Y=r.point(),
        P_B=r.point(),
        range_y=read_range_proof(r),
        sumcheck_eq=read_equality_sumcheck(r),
    )


TAG_MATMUL = 0
TAG_RELU = 1


def inference_proof_records(group: Group, proof: InferenceProof) -> list:
    """(label, sender, payload) records in protocol order."""
    w = Writer(group)
    w.point(proof.input_commitment)
    w.point(proof.output_commitment)
    w.u32(len(proof.output_vector))
    for v in proof.output_vector:
        w.scalar(v)
    records = [(b"header", "prover", w.getvalue())]
    for idx, lp in enumerate(proof.layer_proofs):
        w = Writer(group)
        if isinstance(lp, MatmulRoundProof):
            w.u8(TAG_MATMUL)
            write_matmul_proof(w, lp)
            label = b"layer/" + idx.to_bytes(4, "little") + b"/mm"
        else:
            w.u8(TAG_RELU)
            write_relu_proof(w, lp)
            label = b"layer/" + idx.to_bytes(4, "little") + b"/relu"
        records.append((label, "prover", w.getvalue()))
    return records


def inference_proof_from_records(group: Group, records: list) -> InferenceProof:
    if not records or records[0][0] != b"header":
        raise SerializeError("missing proof header record")
    r = Reader(group, records[0][2])
    input_c = r.point()
    output_c = r.point()
    out_len = r.u32()
    if out_len > 1 << 24:
        raise SerializeError("implausible output length")
    out_vec = [r.scalar() for _ in range(out_len)]
    if not r.done():
        raise SerializeError("trailing bytes in header record")
    proofs = []
    for label, _sender, payload in records[1:]:
        r = Reader(group, payload)
        tag = r.u8()
        if tag == TAG_MATMUL:
            proofs.append(read_matmul_proof(r))
        elif tag == TAG_RELU:
            proofs.append(read_relu_proof(r))
        else:
            raise SerializeError(f"unknown layer proof tag {tag}")
        if not r.done():
            raise SerializeError(f"trailing bytes in record {label!r}")
    return InferenceProof(
        layer_proofs=proofs,
        input_commitment=input_c,
        output_commitment=output_c,
        output_vector=out_vec,
    )
