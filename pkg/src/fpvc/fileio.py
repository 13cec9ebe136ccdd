"""File formats: generator sets, models, vectors and proofs.

* ``RAGS`` — group parameters plus derived generators.
* ``RAML`` — model: fixed-point params and layer list.
* ``RAVC`` — scalar vector.
* ``RAPF`` — inference proof as an ordered list of length-prefixed
  (label, sender, payload) records.
"""

import io

from .field import FixedPointParams
from .group import Group, GroupParams, GeneratorSet
from .pipeline import InferenceProof, Linear, ModelSpec, Relu
from .serialize import (
    SerializeError,
    inference_proof_from_records,
    inference_proof_records,
)
from .transcript import FIAT_SHAMIR, INTERACTIVE


class FileFormatError(ValueError):
    pass


def _write_bytes(buf, data: bytes, width: int = 4):
    buf.write(len(data).to_bytes(width, "little"))
    buf.write(data)


def _read_exact(buf, n: int) -> bytes:
    out = buf.read(n)
    if len(out) != n:
        raise FileFormatError("truncated file")
    return out


def _read_bytes(buf, width: int = 4) -> bytes:
    n = int.from_bytes(_read_exact(buf, width), "little")
    return _read_exact(buf, n)


def _read_magic(buf, magic: bytes):
    if _read_exact(buf, 4) != magic:
        raise FileFormatError(f"bad magic, expected {magic!r}")


# -- generators (RAGS) -----------------------------------------------------


def save_generators(path: str, group: Group, gens: GeneratorSet):
    buf = io.BytesIO()
    buf.write(b"RAGS")
    buf.write(b"\x01")
    for v in (group.params.q, group.params.p, group.params.cofactor):
        _write_bytes(buf, v.to_bytes((v.bit_length() + 7) // 8, "little"))
    _write_bytes(buf, gens.seed, 2)
    buf.write(gens.tau.to_bytes(4, "little"))
    for pt in gens.g + gens.h + [gens.u]:
        buf.write(group.encode_point(pt))
    with open(path, "wb") as fh:
        fh.write(buf.getvalue())


def load_generators(path: str):
    """Returns (group, gens)."""
    with open(path, "rb") as fh:
        buf = io.BytesIO(fh.read())
    _read_magic(buf, b"RAGS")
    if _read_exact(buf, 1) != b"\x01":
        raise FileFormatError("unsupported RAGS version")
    q, p, cofactor = (int.from_bytes(_read_bytes(buf), "little") for _ in range(3))
    try:
        group = Group(GroupParams(name="file", q=q, p=p, cofactor=cofactor))
    except ValueError as exc:
        raise FileFormatError(f"bad group parameters: {exc}") from exc
    seed = _read_bytes(buf, 2)
    tau = int.from_bytes(_read_exact(buf, 4), "little")
    if tau < 1 or tau > 1 << 28:
        raise FileFormatError("implausible generator count")
    pts = []
    for _ in range(2 * tau + 1):
        try:
            pts.append(group.decode_point(_read_exact(buf, group.point_bytes)))
        except ValueError as exc:
            raise FileFormatError(f"bad generator point: {exc}") from exc
    gens = GeneratorSet(seed=seed, tau=tau, g=pts[:tau], h=pts[tau : 2 * tau], u=pts[2 * tau])
    return group, gens


# -- model (RAML) ----------------------------------------------------------

_TAG_LINEAR = 0
_TAG_RELU = 1


def save_model(path: str, group: Group, spec: ModelSpec):
    fld = group.field
    buf = io.BytesIO()
    buf.write(b"RAML")
    buf.write(b"\x01")
    buf.write(spec.fx.s.to_bytes(1, "little"))
    buf.write(spec.fx.t.to_bytes(1, "little"))
    buf.write(len(spec.layers).to_bytes(4, "little"))
    for layer in spec.layers:
        if isinstance(layer, Linear):
            buf.write(_TAG_LINEAR.to_bytes(1, "little"))
            buf.write(layer.d_out.to_bytes(4, "little"))
            buf.write(layer.d_in.to_bytes(4, "little"))
            for row in layer.weight:
                for v in row:
                    buf.write(fld.encode_scalar(v))
        else:
            buf.write(_TAG_RELU.to_bytes(1, "little"))
    with open(path, "wb") as fh:
        fh.write(buf.getvalue())


def load_model(path: str, group: Group) -> ModelSpec:
    fld = group.field
    with open(path, "rb") as fh:
        buf = io.BytesIO(fh.read())
    _read_magic(buf, b"RAML")
    if _read_exact(buf, 1) != b"\x01":
        raise FileFormatError("unsupported RAML version")
    s = _read_exact(buf, 1)[0]
    t = _read_exact(buf, 1)[0]
    count = int.from_bytes(_read_exact(buf, 4), "little")
    if count > 1 << 16:
        raise FileFormatError("implausible layer count")
    layers = []
    for _ in range(count):
        tag = _read_exact(buf, 1)[0]
        if tag == _TAG_LINEAR:
            d_out = int.from_bytes(_read_exact(buf, 4), "little")
            d_in = int.from_bytes(_read_exact(buf, 4), "little")
            if d_out * d_in > 1 << 26:
                raise FileFormatError("implausible layer size")
            weight = []
            for _ in range(d_out):
                try:
                    weight.append(
                        [
                            fld.decode_scalar(_read_exact(buf, fld.scalar_bytes))
                            for _ in range(d_in)
                        ]
                    )
                except ValueError as exc:
                    raise FileFormatError(f"bad weight scalar: {exc}") from exc
            layers.append(Linear(weight=weight))
        elif tag == _TAG_RELU:
            layers.append(Relu())
        else:
            raise FileFormatError(f"unknown layer tag {tag}")
    try:
        return ModelSpec(fx=FixedPointParams(s=s, t=t), layers=layers)
    except ValueError as exc:
        raise FileFormatError(f"invalid model: {exc}") from exc


# -- vector (RAVC) ---------------------------------------------------------


def save_vector(path: str, group: Group, vec: list):
    fld = group.field
    buf = io.BytesIO()
    buf.write(b"RAVC")
    buf.write(len(vec).to_bytes(4, "little"))
    for v in vec:
        buf.write(fld.encode_scalar(v))
    with open(path, "wb") as fh:
        fh.write(buf.getvalue())


def load_vector(path: str, group: Group) -> list:
    fld = group.field
    with open(path, "rb") as fh:
        buf = io.BytesIO(fh.read())
    _read_magic(buf, b"RAVC")
    n = int.from_bytes(_read_exact(buf, 4), "little")
    if n > 1 << 24:
        raise FileFormatError("implausible vector length")
    try:
        return [fld.decode_scalar(_read_exact(buf, fld.scalar_bytes)) for _ in range(n)]
    except ValueError as exc:
        raise FileFormatError(f"bad scalar: {exc}") from exc


# -- proof (RAPF) ----------------------------------------------------------

_MODES = {FIAT_SHAMIR: 0, INTERACTIVE: 1}
_MODES_BACK = {v: k for k, v in _MODES.items()}


def save_proof(path: str, group: Group, proof: InferenceProof, mode: str = FIAT_SHAMIR):
    records = inference_proof_records(group, proof)
    buf = io.BytesIO()
    buf.write(b"RAPF")
    buf.write(_MODES[mode].to_bytes(1, "little"))
    buf.write(len(records).to_bytes(4, "little"))
    for label, sender, payload in records:
        _write_bytes(buf, label, 2)
        buf.write((0 if sender == "prover" else 1).to_bytes(1, "little"))
        _write_bytes(buf, payload, 4)
    with open(path, "wb") as fh:
        fh.write(buf.getvalue())


def load_proof(path: str, group: Group):
    """Returns (mode, InferenceProof)."""
    with open(path, "rb") as fh:
        buf = io.BytesIO(fh.read())
    _read_magic(buf, b"RAPF")
    mode_tag = _read_exact(buf, 1)[0]
    if mode_tag not in _MODES_BACK:
        raise FileFormatError(f"unknown proof mode tag {mode_tag}")
    count = int.from_bytes(_read_exact(buf, 4), "little")
    if count > 1 << 20:
        raise FileFormatError("implausible record count")
    records = []
    for _ in range(count):
        label = _read_bytes(buf, 2)
        sender = "prover" if _read_exact(buf, 1)[0] == 0 else "verifier"
        payload = _read_bytes(buf, 4)
        records.append((label, sender, payload))
    try:
        proof = inference_proof_from_records(group, records)
    except SerializeError as exc:
        raise FileFormatError(str(exc)) from exc
    return _MODES_BACK[mode_tag], proof
