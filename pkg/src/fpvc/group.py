"""Prime-order group, deterministic generators and binding vector commitments.

The group is the order-p subgroup of Z_q^* for primes q = cofactor * p + 1,
so commitment exponents live in the same field F_p as all protocol scalars.
Elements are ints in [1, q); the identity is 1.  Multi-scalar products use a
Pippenger bucket method.
"""

import hashlib
from dataclasses import dataclass, field as dc_field

import gmpy2

from .field import PrimeField

# Fixed parameter sets (q = cofactor * p + 1, p and q prime).  "test" is small
# and fast for protocol-level testing; "default" is a 2048-bit modulus with a
# 256-bit scalar field.
_P_TEST = 0xC0000000000000000000000000003079
_Q_TEST = 0x800000000000000000000000000000042AAAAAAAAAAAAAAAAAAAAAAAA2832FCB
_P_MAIN = 0xC00000000000000000000000000000000000000000000000000000003ADE691B
_Q_MAIN = int(
    "8000000000000000000000000000000000000000000000000000000000000000"
    "0000000000000000000000000000000000000000000000000000000000000000"
    "0000000000000000000000000000000000000000000000000000000000000000"
    "0000000000000000000000000000000000000000000000000000000000000000"
    "0000000000000000000000000000000000000000000000000000000000000000"
    "0000000000000000000000000000000000000000000000000000000000000000"
    "000000000000000000000000000000000000000000000000000000000000007C"
    "E5023D6E9FB0BBBBB3C8994138C617BC02720BCDC19B0EF44DE82245372CBF17",
    16,
)


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupParams:
    name: str
    q: int
    p: int
    cofactor: int

    def __post_init__(self):
        if self.q != self.cofactor * self.p + 1:
            raise GroupError("inconsistent group parameters")


_PRESETS = {}
_PRESETS["test"] = GroupParams(
    name="test", q=_Q_TEST, p=_P_TEST, cofactor=(_Q_TEST - 1) // _P_TEST
)
_PRESETS["default"] = GroupParams(
    name="default", q=_Q_MAIN, p=_P_MAIN, cofactor=(_Q_MAIN - 1) // _P_MAIN
)


def preset(name: str) -> GroupParams:
    try:
        return _PRESETS[name]
    except KeyError:
        raise GroupError(f"unknown group preset {name!r}") from None


class Group:
    """Order-p multiplicative subgroup of Z_q^*."""

    identity = 1

    def __init__(self, params: GroupParams):
        self.params = params
        self.q = params.q
        self.order = params.p
        self.cofactor = params.cofactor
        self.field = PrimeField(params.p)
        self.point_bytes = (params.q.bit_length() + 7) // 8
        self._qz = gmpy2.mpz(params.q)

    def mul(self, a: int, b: int) -> int:
        return a * b % self.q

    def exp(self, base: int, e: int) -> int:
        return int(gmpy2.powmod(base, e % self.order, self._qz))

    def inv(self, a: int) -> int:
        return int(gmpy2.invert(a, self._qz))

    def is_element(self, x: int) -> bool:
        return 0 < x < self.q and gmpy2.powmod(x, self.order, self._qz) == 1

    def hash_to_group(self, data: bytes) -> int:
        """Map bytes to a non-identity subgroup element, deterministically."""
        ctr = 0
        while True:
            digest = b""
            blocks = (self.point_bytes + 31) // 32
            for i in range(blocks):
                digest += hashlib.sha256(
                    b"fpvc/h2g" + data + ctr.to_bytes(4, "little") + i.to_bytes(4, "little")
                ).digest()
            x = int.from_bytes(digest[: self.point_bytes + 8], "little") % self.q
            el = int(gmpy2.powmod(x, self.cofactor, self._qz)) if x else 0
            if el not in (0, 1):
                return el
            ctr += 1

    def encode_point(self, x: int) -> bytes:
        return x.to_bytes(self.point_bytes, "little")

    def decode_point(self, data: bytes) -> int:
        if len(data) != self.point_bytes:
            raise GroupError("point encoding has wrong length")
        x = int.from_bytes(data, "little")
        if not self.is_element(x):
            raise GroupError("invalid point encoding")
        return x


@dataclass
class GeneratorSet:
    """2*tau + 1 independent generators: vectors g, h and the scalar anchor u."""

    seed: bytes
    tau: int
    g: list = dc_field(default_factory=list)
    h: list = dc_field(default_factory=list)
    u: int = 1

    def require(self, count: int) -> None:
        if count > self.tau:
            raise GroupError(
                f"generator set too small: need {count}, have {self.tau}"
            )


def derive_generators(group: Group, seed: bytes, tau: int) -> GeneratorSet:
    if tau < 1:
        raise GroupError("tau must be >= 1")
    g = [group.hash_to_group(seed + b"/g/" + i.to_bytes(8, "little")) for i in range(tau)]
    h = [group.hash_to_group(seed + b"/h/" + i.to_bytes(8, "little")) for i in range(tau)]
    u = group.hash_to_group(seed + b"/u")
    return GeneratorSet(seed=seed, tau=tau, g=g, h=h, u=u)


def commit(group: Group, points, scalars) -> int:
    """Binding vector commitment: prod points[i]^scalars[i]."""
    if len(scalars) > len(points):
        raise GroupError("more scalars than generators")
    return msm(group, points[: len(scalars)], scalars)


def msm(group: Group, points, scalars) -> int:
    """Pippenger multi-scalar product over the group."""
    if len(points) != len(scalars):
        raise GroupError("msm length mismatch")
    if not points:
        return group.identity
    p = group.order
    q = group._qz
    scalars = [s % p for s in scalars]
    maxbits = max((s.bit_length() for s in scalars), default=1) or 1
    n = len(points)
    if n < 8:
        acc = gmpy2.mpz(1)
        for pt, s in zip(points, scalars):
            if s:
                acc = acc * gmpy2.powmod(pt, s, q) % q
        return int(acc)
    c = max(2, min(16, n.bit_length() - 2))
    nwin = (maxbits + c - 1) // c
    mask = (1 << c) - 1
    mpts = [gmpy2.mpz(pt) for pt in points]
    acc = gmpy2.mpz(1)
    for w in range(nwin - 1, -1, -1):
        shift = w * c
        buckets = [None] * (1 << c)
        for s, pt in zip(scalars, mpts):
            idx = (s >> shift) & mask
            if idx:
                b = buckets[idx]
                buckets[idx] = pt if b is None else b * pt % q
        running = gmpy2.mpz(1)
        total = gmpy2.mpz(1)
        for i in range((1 << c) - 1, 0, -1):
            b = buckets[i]
            if b is not None:
                running = running * b % q
            total = total * running % q
        if acc != 1:
            acc = gmpy2.powmod(acc, 1 << c, q)
        acc = acc * total % q
    return int(acc)
