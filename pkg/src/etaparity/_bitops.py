"""Bit-level helpers shared by the series engine.

A truncated power series over GF(2) is stored as a Python integer whose
bit ``n`` is the coefficient of ``q^n``.  Multiplication goes through
Kronecker substitution: coefficients are spaced ``s`` bits apart so that
one exact big-integer product (gmpy2/GMP) computes every convolution sum
without carry interference, and the parity of each sum is read back off
the low bit of its slot.
"""

from __future__ import annotations

import gmpy2
import numpy as np


def mask(n: int) -> int:
    return (1 << n) - 1


def to_bit_array(bits: int, length: int) -> np.ndarray:
    """Unpack the low `length` bits into a uint8 array, index = exponent."""
    raw = bits.to_bytes((length + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:length]

def from_bit_array(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def stretch(bits: int, length: int, stride: int, out_length: int) -> int:
    """Move bit i to position stride*i, dropping anything >= out_length.

    The caller guarantees the source is valid through ceil(out_length/stride)
    terms; exponents that are not multiples of stride come out zero.
    """
    if stride == 1:
        return bits & mask(out_length)
    take = min(length, (out_length - 1) // stride + 1)
    if take <= 0:
        return 0
    src = to_bit_array(bits & mask(take), take)
    out = np.zeros(out_length, dtype=np.uint8)
    out[: (take - 1) * stride + 1 : stride] = src
    return from_bit_array(out)


def take_stride(bits: int, length: int, step: int, offset: int) -> tuple[int, int]:
    """Collect bits offset, offset+step, ... below `length`; returns (bits, count)."""
    if step == 1 and offset == 0:
        return bits & mask(length), length
    arr = to_bit_array(bits, length)
    sel = arr[offset::step]
    return from_bit_array(sel), len(sel)


# Below this many output terms the plain shift-and-xor loop beats the
# numpy/gmpy round trips; measured on the randomized engine suite.
_DENSE_CUTOFF = 384
_SPARSE_POPCOUNT = 40


def _mul_sparse(a: int, b: int, n: int) -> int:
    acc = 0
    x = b
    while x:
        low = x & -x
        acc ^= a << low.bit_length() - 1
        x ^= low
    return acc & mask(n)


def _spread_for_product(a: int, nbits: int, s: int) -> gmpy2.mpz:
    raw = a.to_bytes((nbits + 7) // 8, "little")
    src = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:nbits]
    out = np.zeros(nbits * s, dtype=np.uint8)
    out[::s] = src
    packed = np.packbits(out, bitorder="little").tobytes()
    return gmpy2.mpz(int.from_bytes(packed, "little"))


def carryless_mul(a: int, b: int, n: int) -> int:
    """XOR-convolution of two bit-packed series, truncated to n terms."""
    a &= mask(n)
    b &= mask(n)
    if a == 0 or b == 0:
        return 0
    if a.bit_count() > b.bit_count():
        a, b = b, a
    if n <= _DENSE_CUTOFF or a.bit_count() <= _SPARSE_POPCOUNT:
        return _mul_sparse(b, a, n)
    # slot width: each convolution sum has at most n terms, so n < 2**s
    s = n.bit_length()
    prod = int(_spread_for_product(a, n, s) * _spread_for_product(b, n, s))
    need = n * s
    raw = prod.to_bytes((max(prod.bit_length(), need) + 7) // 8, "little")[: (need + 7) // 8]
    slots = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return from_bit_array(slots[:need:s])


def square_bits(a: int, nbits: int) -> int:
    """Frobenius square: bit i moves to bit 2i (coefficients are mod 2)."""
    return stretch(a, nbits, 2, max(2 * nbits - 1, 1))
