"""Challenge generation and communication accounting.

Two modes share one interface:

* ``fiat_shamir`` — challenges are a pure function of the absorbed message
  history (SHA-256 chaining with domain-separating labels).
* ``interactive`` — challenges come from an RNG tape.  Running prover and
  verifier with identically seeded tapes simulates a live interaction.

Byte counters track the exact serialized size of protocol messages; proof-size
tests read them.  In fiat-shamir mode verifier challenges are never on the
wire, so only interactive mode counts them.
"""

import hashlib
import random

PROVER = "prover"
VERIFIER = "verifier"

INTERACTIVE = "interactive"
FIAT_SHAMIR = "fiat-shamir"


class Transcript:
    def __init__(self, p: int, mode: str, rng=None):
        if mode not in (INTERACTIVE, FIAT_SHAMIR):
            raise ValueError(f"unknown transcript mode {mode!r}")
        if mode == INTERACTIVE and rng is None:
            rng = random.SystemRandom()
        self.p = p
        self.mode = mode
        self._rng = rng
        self._state = hashlib.sha256(b"fpvc/transcript/v1").digest()
        self._scalar_bytes = (p.bit_length() + 7) // 8
        self.sent_prover_bytes = 0
        self.sent_verifier_bytes = 0

    @classmethod
    def fiat_shamir(cls, p: int) -> "Transcript":
        return cls(p, FIAT_SHAMIR)

    @classmethod
    def interactive(cls, p: int, seed=None) -> "Transcript":
        rng = random.Random(seed) if seed is not None else random.SystemRandom()
        return cls(p, INTERACTIVE, rng=rng)

    def _mix(self, tag: bytes, label: bytes, msg: bytes = b"") -> None:
        frame = (
            tag
            + len(label).to_bytes(2, "little")
            + label
            + len(msg).to_bytes(4, "little")
            + msg
        )
        self._state = hashlib.sha256(self._state + frame).digest()

    def absorb(self, label: bytes, msg: bytes, sender: str) -> None:
        """Record a protocol message; updates challenge state and byte counters."""
        if sender == PROVER:
            self.sent_prover_bytes += len(msg)
        elif sender == VERIFIER:
            self.sent_verifier_bytes += len(msg)
        else:
            raise ValueError(f"unknown sender {sender!r}")
        self._mix(b"ab" + sender[:1].encode(), label, msg)

    def absorb_common(self, label: bytes, msg: bytes) -> None:
        """Bind a value both parties derived locally; no communication counted."""
        self._mix(b"cm", label, msg)

    def challenge_scalar(self, label: bytes) -> int:
        """Nonzero verifier challenge in [1, p)."""
        if self.mode == INTERACTIVE:
            x = self._rng.randrange(1, self.p)
            self.sent_verifier_bytes += self._scalar_bytes
            self._mix(b"ch", label)
            return x
        self._mix(b"ch", label)
        need = self._scalar_bytes + 16
        ctr = 0
        while True:
            out = b""
            block = 0
            while len(out) < need:
                out += hashlib.sha256(
                    self._state
                    + b"out"
                    + ctr.to_bytes(4, "little")
                    + block.to_bytes(4, "little")
                ).digest()
                block += 1
            x = int.from_bytes(out[:need], "little") % self.p
            if x:
                return x
            ctr += 1

    def challenge_vector(self, label: bytes, count: int) -> list:
        return [
            self.challenge_scalar(label + b"/" + i.to_bytes(4, "little"))
            for i in range(count)
        ]
