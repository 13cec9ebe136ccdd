"""Multilinear extensions over the Boolean hypercube.

Tables hold the 2^v hypercube evaluations (Lagrange form).  Index bit order is
big-endian: variable 1 is the most significant bit of the index, so a row-major
matrix flattens to (row bits || column bits).
"""

from dataclasses import dataclass


class MleError(ValueError):
    pass


@dataclass
class MleTable:
    v: int
    evals: list

    def __post_init__(self):
        if len(self.evals) != 1 << self.v:
            raise MleError(f"table needs {1 << self.v} entries, got {len(self.evals)}")


def chi_vector(p: int, z: list) -> list:
    """All 2^v Lagrange basis values chi_i(z), big-endian index order."""
    chi = [1]
    for zj in z:
        one_m = (1 - zj) % p
        chi = [c * f % p for c in chi for f in (one_m, zj)]
    return chi


def mle_eval(p: int, tbl: MleTable, z: list) -> int:
    if len(z) != tbl.v:
        raise MleError(f"point has {len(z)} coords, table has {tbl.v} variables")
    chi = chi_vector(p, z)
    return sum(a * c for a, c in zip(tbl.evals, chi)) % p


def eq_eval(p: int, sx: list, r: list) -> int:
    """MLE of the identity matrix evaluated at (sx, r): prod(s*r + (1-s)(1-r))."""
    if len(sx) != len(r):
        raise MleError("eq_eval points must have equal length")
    out = 1
    for s, x in zip(sx, r):
        out = out * (s * x + (1 - s) * (1 - x)) % p
    return out


def matrix_to_mle(p: int, matrix: list) -> MleTable:
    """Flatten an n x m matrix into its MLE table: index = (row bits || col bits)."""
    n = len(matrix)
    m = len(matrix[0])
    if n & (n - 1) or m & (m - 1):
        raise MleError(f"matrix dims {n}x{m} must be powers of two")
    if any(len(row) != m for row in matrix):
        raise MleError("ragged matrix")
    evals = [x % p for row in matrix for x in row]
    return MleTable(v=(n - 1).bit_length() + (m - 1).bit_length(), evals=evals)


def vector_to_mle(p: int, vec: list) -> MleTable:
    n = len(vec)
    if n & (n - 1):
        raise MleError(f"vector length {n} must be a power of two")
    return MleTable(v=(n - 1).bit_length(), evals=[x % p for x in vec])
