"""Command-line driver: setup, register, prove, verify, bench.

Exit codes: 0 accept/success, 1 proof rejected, 2 usage or file-format error.
"""

import argparse
import sys

from .bench import bench_matmul, bench_nn, bench_relu, write_csv
from .field import FixedPointParams
from .fileio import (
    FileFormatError,
    load_generators,
    load_model,
    load_proof,
    load_vector,
    save_generators,
    save_model,
    save_proof,
    save_vector,
)
from .group import Group, GroupError, derive_generators, preset
from .pipeline import (
    PipelineError,
    prove_inference,
    register_model,
    verify_inference,
)
from .transcript import Transcript

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_USAGE = 2


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fpvc", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("setup", help="derive and store a generator set")
    p.add_argument("--seed", required=True, help="derivation seed string")
    p.add_argument("--tau", required=True, type=int, help="generator vector length")
    p.add_argument("--preset", default="test", choices=["test", "default"])
    p.add_argument("--out", required=True)

    p = sub.add_parser("register", help="commit to a model's weights")
    p.add_argument("--model", required=True)
    p.add_argument("--gens", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("prove", help="run inference and produce a proof")
    p.add_argument("--model", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--gens", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--output", help="write the claimed output vector here")
    p.add_argument("--print-output", action="store_true")

    p = sub.add_parser("verify", help="verify an inference proof")
    p.add_argument("--model", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--proof", required=True)
    p.add_argument("--gens", required=True)

    p = sub.add_parser("bench", help="run scaling benchmarks, emit CSV")
    p.add_argument("--op", default="matmul", choices=["matmul", "relu", "nn"])
    p.add_argument("--sizes", default="16,32,64")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--preset", default="test", choices=["test", "default"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--s-bits", type=int, default=8)
    p.add_argument("--t-bits", type=int, default=6)
    p.add_argument("--csv", required=True)
    return ap


def _cmd_setup(args) -> int:
    group = Group(preset(args.preset))
    gens = derive_generators(group, args.seed.encode(), args.tau)
    save_generators(args.out, group, gens)
    print(f"wrote {args.out}: preset={args.preset} tau={args.tau}")
    return EXIT_OK


def _cmd_register(args) -> int:
    group, gens = load_generators(args.gens)
    spec = load_model(args.model, group)
    commits = register_model(group, gens, spec)
    with open(args.out, "wb") as fh:
        fh.write(b"RACM")
        fh.write(len(commits).to_bytes(4, "little"))
        for c in commits:
            fh.write(group.encode_point(c))
    print(f"wrote {args.out}: {len(commits)} weight commitments")
    return EXIT_OK


def _cmd_prove(args) -> int:
    group, gens = load_generators(args.gens)
    spec = load_model(args.model, group)
    x = load_vector(args.input, group)
    tr = Transcript.fiat_shamir(group.order)
    y, proof = prove_inference(group, gens, spec, x, tr)
    save_proof(args.out, group, proof)
    if args.output:
        save_vector(args.output, group, y)
    if args.print_output:
        print(" ".join(str(group.field.to_symmetric(v)) for v in y))
    print(f"wrote {args.out}: {tr.sent_prover_bytes} proof bytes", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    group, gens = load_generators(args.gens)
    spec = load_model(args.model, group)
    x = load_vector(args.input, group)
    y = load_vector(args.output, group)
    _mode, proof = load_proof(args.proof, group)
    commits = register_model(group, gens, spec)
    tr = Transcript.fiat_shamir(group.order)
    if verify_inference(group, gens, spec, commits, x, y, proof, tr):
        print("accept")
        return EXIT_OK
    print("reject")
    return EXIT_REJECT


def _cmd_bench(args) -> int:
    group = Group(preset(args.preset))
    fx = FixedPointParams(s=args.s_bits, t=args.t_bits)
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        print("bad --sizes list", file=sys.stderr)
        return EXIT_USAGE
    if args.op == "nn":
        from .bench import make_case_study_model

        spec = make_case_study_model(group.order, fx, args.seed)
        tau = spec.generator_demand()
    else:
        from .layerproto import generator_demand

        if args.op == "matmul":
            tau = max(generator_demand(s, s, s, fx) for s in sizes)
        else:
            tau = max(s * (fx.t + 2) for s in sizes)
    gens = derive_generators(group, b"fpvc/bench", tau)
    if args.op == "matmul":
        records = bench_matmul(group, gens, fx, sizes, args.reps, args.seed)
    elif args.op == "relu":
        records = bench_relu(group, gens, fx, sizes, args.reps, args.seed)
    else:
        records = bench_nn(group, gens, fx, args.seed)
    write_csv(args.csv, records)
    print(f"wrote {args.csv}: {len(records)} records")
    return EXIT_OK


def main(argv=None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.cmd == "setup":
            return _cmd_setup(args)
        if args.cmd == "register":
            return _cmd_register(args)
        if args.cmd == "prove":
            return _cmd_prove(args)
        if args.cmd == "verify":
            return _cmd_verify(args)
        if args.cmd == "bench":
            return _cmd_bench(args)
    except (FileFormatError, GroupError, PipelineError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
