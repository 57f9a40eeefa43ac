"""Deterministic message-to-polynomial conversion.

The 256-bit SHA3 digest of the message is read as 32 bytes, bits numbered
most significant first within each byte.  Byte k contributes one term over
32 variables:

* its 5 high bits: popcount mod 3 picks the coefficient from (0, 1, -1);
* its 3 low bits sit at positions 3k, 3k+1, 3k+2 of a 96-position cycle
  labeled x1..x32 three times over (position j belongs to variable
  x_((j mod 32) + 1)); each set bit contributes its variable to the term's
  monomial, and no set bits means the constant term.

Terms from all 32 bytes are added into a single polynomial, so coinciding
monomials combine.  The layout is frozen by golden vectors in the tests.
"""

from __future__ import annotations

import hashlib

from .poly import Poly

DIGEST_BYTES = 32
POLY_NVARS = 32


def hash_message(message: bytes) -> bytes:
    """256-bit SHA3 digest of the raw message bytes."""
    return hashlib.sha3_256(message).digest()


def digest_to_poly(digest: bytes) -> Poly:
    """Map a 32-byte digest to a polynomial in 32 variables, degree at most 3."""
    if len(digest) != DIGEST_BYTES:
        raise ValueError(f"digest must be {DIGEST_BYTES} bytes, got {len(digest)}")
    terms: dict[int, int] = {}
    for k in range(DIGEST_BYTES):
        byte = digest[k]
        coeff = (0, 1, -1)[(byte >> 3).bit_count() % 3]
        if coeff == 0:
            continue
        mask = 0
        for offset, shift in ((0, 2), (1, 1), (2, 0)):
            if (byte >> shift) & 1:
                variable = ((3 * k + offset) % POLY_NVARS) + 1
                mask |= 1 << (variable - 1)
        terms[mask] = terms.get(mask, 0) + coeff
    return Poly(POLY_NVARS, terms)


def message_poly(message: bytes) -> Poly:
    return digest_to_poly(hash_message(message))
