"""Neural-network inference proving by layer composition.

A model is a sequence of Linear and ReLU layers over fixed-point scalars.
Each Linear layer runs the matmul+rounding protocol with the activation as a
d_in x 1 matrix; each ReLU layer runs the ReLU protocol.  The output
commitment of every layer is the input commitment of the next, so altering
any link breaks the chain.
"""

from dataclasses import dataclass, field as dc_field

from .field import FixedPointParams
from .group import Group, GeneratorSet, commit
from .layerproto import (
    LayerError,
    MatmulRoundProof,
    ReluProof,
    generator_demand,
    prove_matmul_round,
    prove_relu,
    verify_matmul_round,
    verify_relu,
)
from .transcript import Transcript


class PipelineError(ValueError):
    pass


@dataclass
class Linear:
    weight: list  # d_out x d_in, entries canonical field scalars

    @property
    def d_out(self) -> int:
        return len(self.weight)

    @property
    def d_in(self) -> int:
        return len(self.weight[0])


@dataclass
class Relu:
    pass


@dataclass
class ModelSpec:
    fx: FixedPointParams
    layers: list

    def __post_init__(self):
        dim = None
        for idx, layer in enumerate(self.layers):
            if isinstance(layer, Linear):
                n, m = layer.d_out, layer.d_in
                if n & (n - 1) or m & (m - 1):
                    raise PipelineError(
                        f"layer {idx}: dims {n}x{m} must be powers of two (pad first)"
                    )
                if any(len(r) != m for r in layer.weight):
                    raise PipelineError(f"layer {idx}: ragged weight matrix")
                if dim is not None and m != dim:
                    raise PipelineError(f"layer {idx}: expects input dim {m}, got {dim}")
                dim = n
            elif not isinstance(layer, Relu):
                raise PipelineError(f"layer {idx}: unknown layer type {type(layer)}")
        if dim is None:
            raise PipelineError("model needs at least one Linear layer")

    @property
    def input_dim(self) -> int:
        for layer in self.layers:
            if isinstance(layer, Linear):
                return layer.d_in
        raise PipelineError("model has no Linear layer")

    @property
    def output_dim(self) -> int:
        dim = self.input_dim
        for layer in self.layers:
            if isinstance(layer, Linear):
                dim = layer.d_out
        return dim

    def generator_demand(self) -> int:
        demand = 1
        dim = self.input_dim
        for layer in self.layers:
            if isinstance(layer, Linear):
                demand = max(demand, generator_demand(layer.d_out, layer.d_in, 1, self.fx))
                dim = layer.d_out
            else:
                demand = max(demand, dim * (self.fx.t + 2))
        return demand


@dataclass
class InferenceProof:
    layer_proofs: list  # MatmulRoundProof | ReluProof, in layer order
    input_commitment: int
    output_commitment: int
    output_vector: list


def pad_vector(vec: list, dim: int) -> list:
    if len(vec) > dim:
        raise PipelineError(f"vector longer than target dim {dim}")
    return list(vec) + [0] * (dim - len(vec))


def pad_matrix(rows: list, d_out: int, d_in: int) -> list:
    if len(rows) > d_out or any(len(r) > d_in for r in rows):
        raise PipelineError("matrix larger than padded target")
    out = [list(r) + [0] * (d_in - len(r)) for r in rows]
    out += [[0] * d_in for _ in range(d_out - len(rows))]
    return out


def next_pow2(x: int) -> int:
    return 1 if x <= 1 else 1 << (x - 1).bit_length()


def register_model(group: Group, gens: GeneratorSet, spec: ModelSpec) -> list:
    """Deterministic commitments to each Linear layer's weights."""
    gens.require(spec.generator_demand())
    out = []
    for layer in spec.layers:
        if isinstance(layer, Linear):
            flat = [x % group.order for row in layer.weight for x in row]
            out.append(commit(group, gens.g, flat))
    return out


def prove_inference(group: Group, gens: GeneratorSet, spec: ModelSpec, x: list, tr: Transcript):
    """Run the whole network, proving every layer.  Returns (y, InferenceProof)."""
    p = group.order
    if len(x) != spec.input_dim:
        raise PipelineError(f"input has dim {len(x)}, model expects {spec.input_dim}")
    gens.require(spec.generator_demand())

    act = [v % p for v in x]
    chain = commit(group, gens.g, act)
    input_commitment = chain
    proofs = []
    for idx, layer in enumerate(spec.layers):
        label = b"layer/" + idx.to_bytes(4, "little")
        try:
            if isinstance(layer, Linear):
                col = [[v] for v in act]
                cp, proof = prove_matmul_round(
                    group, gens, spec.fx, layer.weight, col, tr, label + b"/mm"
                )
                act = [row[0] for row in cp]
                chain = proof.P_Cp
            else:
                act, proof = prove_relu(
                    group, gens, spec.fx, act, chain, tr, label + b"/relu"
                )
                chain = proof.P_B
        except LayerError as exc:
            raise PipelineError(f"layer {idx}: {exc}") from exc
        proofs.append(proof)
    return act, InferenceProof(
        layer_proofs=proofs,
        input_commitment=input_commitment,
        output_commitment=chain,
        output_vector=list(act),
    )


def verify_inference(
    group: Group,
    gens: GeneratorSet,
    spec: ModelSpec,
    weight_commitments: list,
    x: list,
    y: list,
    proof: InferenceProof,
    tr: Transcript,
) -> bool:
    """Verify a full inference proof against public input x and claimed output y."""
    p = group.order
    if len(proof.layer_proofs) != len(spec.layers):
        return False
    if len(x) != spec.input_dim or len(y) != spec.output_dim:
        return False
    chain = commit(group, gens.g, [v % p for v in x])
    if proof.input_commitment != chain:
        return False
    dim = spec.input_dim
    w_iter = iter(weight_commitments)
    for idx, (layer, lp) in enumerate(zip(spec.layers, proof.layer_proofs)):
        label = b"layer/" + idx.to_bytes(4, "little")
        if isinstance(layer, Linear):
            if not isinstance(lp, MatmulRoundProof):
                return False
            try:
                P_W = next(w_iter)
            except StopIteration:
                return False
            if not verify_matmul_round(
                group,
                gens,
                spec.fx,
                P_W,
                chain,
                layer.d_out,
                layer.d_in,
                1,
                lp,
                tr,
                label + b"/mm",
            ):
                return False
            chain = lp.P_Cp
            dim = layer.d_out
        else:
            if not isinstance(lp, ReluProof):
                return False
            if not verify_relu(
                group, gens, spec.fx, chain, dim, lp, tr, label + b"/relu"
            ):
                return False
            chain = lp.P_B
    if proof.output_commitment != chain:
        return False
    if [v % p for v in y] != [v % p for v in proof.output_vector]:
        return False
    return commit(group, gens.g, [v % p for v in y]) == chain


# -- reference engine (proof-free oracle) ---------------------------------


def reference_inference(p: int, spec: ModelSpec, x: list) -> list:
    """Plain fixed-point inference on signed integers; no field or group code."""
    half = (p - 1) // 2

    def sym(v):
        v %= p
        return v if v <= half else v - p

    s = spec.fx.s
    act = [sym(v) for v in x]
    for layer in spec.layers:
        if isinstance(layer, Linear):
            w = [[sym(v) for v in row] for row in layer.weight]
            raw = [sum(wi * ai for wi, ai in zip(row, act)) for row in w]
            act = [(v + (1 << (s - 1))) >> s for v in raw]
        else:
            act = [max(0, v) for v in act]
    return [v % p for v in act]
