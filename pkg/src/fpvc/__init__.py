"""Verifiable fixed-point neural-network inference.

Commit-and-prove stack built from a prime-order group with Pedersen vector
commitments, an inner-product argument, multilinear sum-checks and an
aggregated bit-decomposition range proof.  The top-level pipeline proves the
layer-by-layer execution of a fixed-point feed-forward network.
"""

from .field import FieldError, FixedPointParams, PrimeField
from .group import (
    GeneratorSet,
    Group,
    GroupError,
    GroupParams,
    commit,
    derive_generators,
    msm,
    preset,
)
from .ipa import IpaProof, ipa_prove, ipa_verify
from .layerproto import (
    LayerError,
    MatmulRoundProof,
    ReluProof,
    prove_matmul_round,
    prove_relu,
    verify_matmul_round,
    verify_relu,
)
from .mle import MleTable, chi_vector, eq_eval, matrix_to_mle, mle_eval, vector_to_mle
from .pipeline import (
    InferenceProof,
    Linear,
    ModelSpec,
    PipelineError,
    Relu,
    pad_matrix,
    pad_vector,
    prove_inference,
    reference_inference,
    register_model,
    verify_inference,
)
from .polycommit import OpeningProof, pc_commit, pc_open, pc_verify
from .rangeproof import RangeProof, rp_prove, rp_verify
from .sumcheck import (
    EqualitySumcheckProof,
    ProductSumcheckProof,
    sc_prove_equality,
    sc_prove_product,
    sc_verify_equality,
    sc_verify_product,
)
from .transcript import FIAT_SHAMIR, INTERACTIVE, PROVER, VERIFIER, Transcript

__version__ = "0.1.0"

__all__ = [
    "FIAT_SHAMIR",
    "INTERACTIVE",
    "PROVER",
    "VERIFIER",
    "EqualitySumcheckProof",
    "FieldError",
    "FixedPointParams",
    "GeneratorSet",
    "Group",
    "GroupError",
    "GroupParams",
    "InferenceProof",
    "IpaProof",
    "LayerError",
    "Linear",
    "MatmulRoundProof",
    "MleTable",
    "ModelSpec",
    "OpeningProof",
    "PipelineError",
    "PrimeField",
    "ProductSumcheckProof",
    "RangeProof",
    "Relu",
    "ReluProof",
    "Transcript",
    "chi_vector",
    "commit",
    "derive_generators",
    "eq_eval",
    "ipa_prove",
    "ipa_verify",
    "matrix_to_mle",
    "mle_eval",
    "msm",
    "pad_matrix",
    "pad_vector",
    "pc_commit",
    "pc_open",
    "pc_verify",
    "preset",
    "prove_inference",
    "prove_matmul_round",
    "prove_relu",
    "reference_inference",
    "register_model",
    "rp_prove",
    "rp_verify",
    "sc_prove_equality",
    "sc_prove_product",
    "sc_verify_equality",
    "sc_verify_product",
    "vector_to_mle",
    "verify_inference",
    "verify_matmul_round",
    "verify_relu",
]
