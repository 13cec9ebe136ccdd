"""Prime-field scalars with a symmetric residue view and fixed-point encoding.

Scalars are plain Python ints in canonical range [0, p).  A ``PrimeField``
instance carries the modulus and provides the symmetric view, fixed-point
encode/decode and the rounding operator used after fixed-point products.
"""

from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class FixedPointParams:
    """Fixed-point format: one sign bit, ``t`` integer bits, ``s`` fractional bits."""

    s: int
    t: int

    def __post_init__(self):
        if self.s < 1:
            raise FieldError("fractional bit count s must be >= 1")
        if self.t < 0:
            raise FieldError("integer bit count t must be >= 0")

    @property
    def scale(self) -> int:
        return 1 << self.s

    def min_modulus_bits(self, m_max: int = 1) -> int:
        # Strong enough that m_max-term dot products of in-range values
        # never wrap, and that y^2 = a^2 forces y = |a| without wrap.
        extra = max(1, m_max - 1).bit_length() if m_max > 1 else 0
        return 2 * (self.t + self.s) + extra + 2


class PrimeField:
    """Arithmetic context for F_p with p an odd prime."""

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0:
            raise FieldError("modulus must be an odd prime > 2")
        self.p = p
        self.half = (p - 1) // 2
        self.scalar_bytes = (p.bit_length() + 7) // 8

    def elem(self, v: int) -> int:
        return v % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise FieldError("zero has no inverse")
        return pow(a, -1, self.p)

    def to_symmetric(self, x: int) -> int:
        """Representative of x in [-(p-1)/2, (p-1)/2]."""
        x %= self.p
        return x if x <= self.half else x - self.p

    def from_symmetric(self, r: int) -> int:
        return r % self.p

    # -- fixed point ------------------------------------------------------

    def check_params(self, fx: FixedPointParams) -> None:
        if 2 * (fx.t + fx.s) + 2 >= self.p.bit_length():
            raise FieldError(
                f"modulus too small for fixed-point format s={fx.s}, t={fx.t}"
            )

    def encode_fixed(self, q, fx: FixedPointParams) -> int:
        """Encode a rational q (denominator dividing 2^s) as q * 2^s in F_p."""
        self.check_params(fx)
        q = Fraction(q)
        scaled = q * fx.scale
        if scaled.denominator != 1:
            raise FieldError(f"{q} is not representable with {fx.s} fractional bits")
        if abs(q) >= 1 << (fx.t + 1):
            raise FieldError(f"magnitude of {q} exceeds fixed-point range")
        return scaled.numerator % self.p

    def decode_fixed(self, x: int, fx: FixedPointParams) -> Fraction:
        return Fraction(self.to_symmetric(x), fx.scale)

    def round_fixed(self, x: int, fx: FixedPointParams) -> int:
        """Drop the s low fractional bits of x, rounding to nearest (ties toward +inf)."""
        sym = self.to_symmetric(x)
        shift = 1 << (fx.s - 1)
        if abs(sym) + shift >= self.half:
            raise FieldError("rounding input too large: would wrap modulo p")
        return ((sym + shift) >> fx.s) % self.p

    # -- wire format ------------------------------------------------------

    def encode_scalar(self, x: int) -> bytes:
        return (x % self.p).to_bytes(self.scalar_bytes, "little")

    def decode_scalar(self, data: bytes) -> int:
        if len(data) != self.scalar_bytes:
            raise FieldError("scalar encoding has wrong length")
        x = int.from_bytes(data, "little")
        if x >= self.p:
            raise FieldError("non-canonical scalar encoding")
        return x
