import csv
import random

import pytest

from fpvc import FixedPointParams, Group, Linear, ModelSpec, Relu, preset
from fpvc.cli import EXIT_OK, EXIT_REJECT, EXIT_USAGE, main
from fpvc.fileio import save_model, save_vector


@pytest.fixture
def workspace(tmp_path):
    group = Group(preset("test"))
    p = group.order
    rng = random.Random(21)
    fx = FixedPointParams(s=4, t=6)
    W1 = [[rng.randint(-3, 3) % p for _ in range(8)] for _ in range(4)]
    W2 = [[rng.randint(-3, 3) % p for _ in range(4)] for _ in range(2)]
    spec = ModelSpec(fx=fx, layers=[Linear(weight=W1), Relu(), Linear(weight=W2), Relu()])
    save_model(str(tmp_path / "model.bin"), group, spec)
    save_vector(str(tmp_path / "x.bin"), group, [rng.randint(0, 7) for _ in range(8)])
    return tmp_path, group


def _paths(ws, *names):
    return [str(ws / n) for n in names]


def test_full_workflow(workspace, capsys):
    ws, group = workspace
    gens, model, x, proof, y, commits = _paths(
        ws, "gens.bin", "model.bin", "x.bin", "proof.bin", "y.bin", "commits.bin"
    )
    assert main(["setup", "--seed", "demo", "--tau", "256", "--out", gens]) == EXIT_OK
    assert main(["register", "--model", model, "--gens", gens, "--out", commits]) == EXIT_OK
    assert (
        main(["prove", "--model", model, "--input", x, "--gens", gens,
              "--out", proof, "--output", y])
        == EXIT_OK
    )
    assert (
        main(["verify", "--model", model, "--input", x, "--output", y,
              "--proof", proof, "--gens", gens])
        == EXIT_OK
    )
    out = capsys.readouterr().out
    assert "accept" in out


def test_verify_rejects_tampered_output(workspace):
    ws, group = workspace
    gens, model, x, proof, y = _paths(ws, "gens.bin", "model.bin", "x.bin", "proof.bin", "y.bin")
    main(["setup", "--seed", "demo", "--tau", "256", "--out", gens])
    main(["prove", "--model", model, "--input", x, "--gens", gens, "--out", proof, "--output", y])
    save_vector(y, group, [1, 1])  # overwrite the claimed output
    assert (
        main(["verify", "--model", model, "--input", x, "--output", y,
              "--proof", proof, "--gens", gens])
        == EXIT_REJECT
    )


def test_verify_rejects_wrong_input(workspace):
    ws, group = workspace
    gens, model, x, proof, y, x2 = _paths(
        ws, "gens.bin", "model.bin", "x.bin", "proof.bin", "y.bin", "x2.bin"
    )
    main(["setup", "--seed", "demo", "--tau", "256", "--out", gens])
    main(["prove", "--model", model, "--input", x, "--gens", gens, "--out", proof, "--output", y])
    save_vector(x2, group, [7, 7, 7, 7, 7, 7, 7, 7])
    assert (
        main(["verify", "--model", model, "--input", x2, "--output", y,
              "--proof", proof, "--gens", gens])
        == EXIT_REJECT
    )


def test_missing_arguments_is_usage_error(workspace, capsys):
    assert main(["verify", "--model", "m.bin"]) == EXIT_USAGE
    assert main(["frobnicate"]) == EXIT_USAGE
    capsys.readouterr()


def test_missing_file_is_usage_error(workspace, capsys):
    ws, _ = workspace
    gens, model = _paths(ws, "gens.bin", "model.bin")
    assert (
        main(["register", "--model", str(ws / "nope.bin"), "--gens", gens, "--out", "c"])
        == EXIT_USAGE
    )
    capsys.readouterr()


def test_corrupt_proof_file_is_format_error(workspace, capsys):
    ws, group = workspace
    gens, model, x, proof, y = _paths(ws, "gens.bin", "model.bin", "x.bin", "proof.bin", "y.bin")
    main(["setup", "--seed", "demo", "--tau", "256", "--out", gens])
    main(["prove", "--model", model, "--input", x, "--gens", gens, "--out", proof, "--output", y])
    data = open(proof, "rb").read()
    open(proof, "wb").write(data[: len(data) // 3])
    assert (
        main(["verify", "--model", model, "--input", x, "--output", y,
              "--proof", proof, "--gens", gens])
        == EXIT_USAGE
    )
    capsys.readouterr()


def test_bench_writes_csv(workspace, capsys):
    ws, _ = workspace
    out = str(ws / "bench.csv")
    assert (
        main(["bench", "--op", "matmul", "--sizes", "2,4", "--reps", "1",
              "--s-bits", "4", "--t-bits", "6", "--csv", out])
        == EXIT_OK
    )
    with open(out) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["op", "n", "m", "k", "prover_ms", "verifier_ms", "proof_bytes", "mode"]
    assert len(rows) == 3
    assert rows[1][0] == "matmul_round"
    assert float(rows[1][4]) > 0
    capsys.readouterr()
