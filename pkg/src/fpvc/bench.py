"""Benchmark harness: deterministic instances, median timings, CSV output."""

import csv
import random
import time
from dataclasses import dataclass
from statistics import median

from .field import FixedPointParams
from .group import Group, GeneratorSet, commit
from .layerproto import (
    generator_demand,
    prove_matmul_round,
    prove_relu,
    verify_matmul_round,
    verify_relu,
)
from .pipeline import (
    Linear,
    ModelSpec,
    Relu,
    prove_inference,
    register_model,
    verify_inference,
)
from .transcript import Transcript

CSV_HEADER = ["op", "n", "m", "k", "prover_ms", "verifier_ms", "proof_bytes", "mode"]


@dataclass
class BenchRecord:
    op: str
    n: int
    m: int
    k: int
    prover_ms: float
    verifier_ms: float
    proof_bytes: int
    mode: str

    def row(self) -> list:
        return [
            self.op,
            self.n,
            self.m,
            self.k,
            f"{self.prover_ms:.3f}",
            f"{self.verifier_ms:.3f}",
            self.proof_bytes,
            self.mode,
        ]


def write_csv(path: str, records: list):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for rec in records:
            writer.writerow(rec.row())


def _entry_bound(fx: FixedPointParams, m: int) -> int:
    # keep worst-case |C| under 2^s * 2^{t+1} so rounded entries stay in range
    limit = 1 << (fx.s + fx.t + 1)
    b = int((limit // m) ** 0.5)
    return max(1, b - 1)


def random_matmul_instance(fx: FixedPointParams, n: int, m: int, k: int, p: int, seed):
    rng = random.Random(seed)
    bound = _entry_bound(fx, m)
    A = [[rng.randint(-bound, bound) % p for _ in range(m)] for _ in range(n)]
    B = [[rng.randint(-bound, bound) % p for _ in range(k)] for _ in range(m)]
    return A, B


def bench_matmul(
    group: Group,
    gens: GeneratorSet,
    fx: FixedPointParams,
    sizes: list,
    reps: int = 1,
    seed: int = 0,
) -> list:
    records = []
    for size in sizes:
        gens.require(generator_demand(size, size, size, fx))
        p_times, v_times, sizes_seen = [], [], []
        for rep in range(reps):
            A, B = random_matmul_instance(fx, size, size, size, group.order, f"{seed}/{size}/{rep}")
            tr = Transcript.fiat_shamir(group.order)
            t0 = time.perf_counter()
            _, proof = prove_matmul_round(group, gens, fx, A, B, tr)
            p_times.append((time.perf_counter() - t0) * 1000)
            proof_bytes = tr.sent_prover_bytes
            flat_a = [x for row in A for x in row]
            flat_b = [x for row in B for x in row]
            P_A = commit(group, gens.g, flat_a)
            P_B = commit(group, gens.g, flat_b)
            tv = Transcript.fiat_shamir(group.order)
            t0 = time.perf_counter()
            ok = verify_matmul_round(
                group, gens, fx, P_A, P_B, size, size, size, proof, tv
            )
            v_times.append((time.perf_counter() - t0) * 1000)
            if not ok:
                raise RuntimeError(f"benchmark instance failed to verify at size {size}")
            sizes_seen.append(proof_bytes)
        records.append(
            BenchRecord(
                op="matmul_round",
                n=size,
                m=size,
                k=size,
                prover_ms=median(p_times),
                verifier_ms=median(v_times),
                proof_bytes=sizes_seen[0],
                mode="fiat-shamir",
            )
        )
    return records


def bench_relu(
    group: Group,
    gens: GeneratorSet,
    fx: FixedPointParams,
    sizes: list,
    reps: int = 1,
    seed: int = 0,
) -> list:
    records = []
    bound = 1 << (fx.t + 1)
    for size in sizes:
        gens.require(size * (fx.t + 2))
        p_times, v_times, proof_sizes = [], [], []
        for rep in range(reps):
            rng = random.Random(f"{seed}/relu/{size}/{rep}")
            vec = [rng.randint(-bound + 1, bound - 1) % group.order for _ in range(size)]
            P_A = commit(group, gens.g, vec)
            tr = Transcript.fiat_shamir(group.order)
            t0 = time.perf_counter()
            _, proof = prove_relu(group, gens, fx, vec, P_A, tr)
            p_times.append((time.perf_counter() - t0) * 1000)
            proof_sizes.append(tr.sent_prover_bytes)
            tv = Transcript.fiat_shamir(group.order)
            t0 = time.perf_counter()
            ok = verify_relu(group, gens, fx, P_A, size, proof, tv)
            v_times.append((time.perf_counter() - t0) * 1000)
            if not ok:
                raise RuntimeError(f"relu benchmark instance failed at size {size}")
        records.append(
            BenchRecord(
                op="relu",
                n=size,
                m=1,
                k=1,
                prover_ms=median(p_times),
                verifier_ms=median(v_times),
                proof_bytes=proof_sizes[0],
                mode="fiat-shamir",
            )
        )
    return records


# -- case-study fixture ----------------------------------------------------

CASE_STUDY_DIMS = [(784, 12), (12, 12), (12, 12), (12, 10)]
# fixture scale: weights drawn from [-3, 3], inputs from [0, 31] (raw field
# integers); keeps every rounded activation well inside [-2^{t+1}, 2^{t+1})
CASE_STUDY_WEIGHT_BOUND = 3
CASE_STUDY_INPUT_BOUND = 31


def _pad_pow2(x: int) -> int:
    return 1 if x <= 1 else 1 << (x - 1).bit_length()


def make_case_study_model(p: int, fx: FixedPointParams, seed: int = 0) -> ModelSpec:
    """Four fully connected layers with ReLU, 784 inputs, ~10^4 parameters."""
    rng = random.Random(f"case-study/{seed}")
    layers = []
    for d_in, d_out in CASE_STUDY_DIMS:
        pi, po = _pad_pow2(d_in), _pad_pow2(d_out)
        weight = [[0] * pi for _ in range(po)]
        for i in range(d_out):
            for j in range(d_in):
                weight[i][j] = rng.randint(
                    -CASE_STUDY_WEIGHT_BOUND, CASE_STUDY_WEIGHT_BOUND
                ) % p
        layers.append(Linear(weight=weight))
        layers.append(Relu())
    return ModelSpec(fx=fx, layers=layers)


def make_case_study_input(p: int, seed: int = 0) -> list:
    rng = random.Random(f"case-study-input/{seed}")
    dim = _pad_pow2(CASE_STUDY_DIMS[0][0])
    vec = [0] * dim
    for i in range(CASE_STUDY_DIMS[0][0]):
        vec[i] = rng.randint(0, CASE_STUDY_INPUT_BOUND)
    return vec


def bench_nn(group: Group, gens: GeneratorSet, fx: FixedPointParams, seed: int = 0) -> list:
    spec = make_case_study_model(group.order, fx, seed)
    x = make_case_study_input(group.order, seed)
    commits = register_model(group, gens, spec)
    tr = Transcript.fiat_shamir(group.order)
    t0 = time.perf_counter()
    y, proof = prove_inference(group, gens, spec, x, tr)
    prover_ms = (time.perf_counter() - t0) * 1000
    proof_bytes = tr.sent_prover_bytes
    tv = Transcript.fiat_shamir(group.order)
    t0 = time.perf_counter()
    ok = verify_inference(group, gens, spec, commits, x, y, proof, tv)
    verifier_ms = (time.perf_counter() - t0) * 1000
    if not ok:
        raise RuntimeError("case-study inference proof failed to verify")
    return [
        BenchRecord(
            op="nn",
            n=spec.input_dim,
            m=len(spec.layers),
            k=spec.output_dim,
            prover_ms=prover_ms,
            verifier_ms=verifier_ms,
            proof_bytes=proof_bytes,
            mode="fiat-shamir",
        )
    ]
