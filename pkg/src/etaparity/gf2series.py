"""Truncated formal power series over GF(2), bit-packed.

Every value tracks the exponent range on which it is provably correct:
an operation's result length is the largest prefix the inputs can
justify, so long dissection chains never report garbage tails.  Values
are immutable; all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _bitops
from ._bitops import mask
from .errors import BoundExceedsLength, NonUnitConstantTerm, ResidueOutOfRange


@dataclass(frozen=True, slots=True)
class Gf2Series:
    """Coefficient parities indexed by exponent; bit n of `bits` is q^n.

    `length` is the exclusive truncation bound: coefficients are correct
    for every exponent < length and are never read beyond it.
    """

    bits: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"series length must be >= 1, got {self.length}")
        if self.bits < 0:
            raise ValueError("coefficient bits must be nonnegative")
        if self.bits >> self.length:
            object.__setattr__(self, "bits", self.bits & mask(self.length))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, length: int) -> "Gf2Series":
        return cls(0, length)

    @classmethod
    def one(cls, length: int) -> "Gf2Series":
        return cls(1, length)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> "Gf2Series":
        bits = 0
        n = 0
        for n, c in enumerate(coeffs, start=1):
            if c & 1:
                bits |= 1 << (n - 1)
        return cls(bits, max(n, 1))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int], length: int) -> "Gf2Series":
        """XOR of q^e over the given exponents; entries >= length are ignored."""
        bits = 0
        for e in exponents:
            if 0 <= e < length:
                bits ^= 1 << e
        return cls(bits, length)

    # -- basic queries -----------------------------------------------------

    def coeff(self, n: int) -> int:
        if not 0 <= n < self.length:
            raise BoundExceedsLength(f"exponent {n} outside [0, {self.length})")
        return (self.bits >> n) & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def odd_exponents(self, upto: int | None = None) -> list[int]:
        """Exponents n < upto with odd coefficient."""
        upto = self.length if upto is None else upto
        if upto > self.length:
            raise BoundExceedsLength(f"bound {upto} exceeds length {self.length}")
        x = self.bits & mask(upto)
        out = []
        while x:
            low = x & -x
            out.append(low.bit_length() - 1)
            x ^= low
        return out

    def count_odd(self, upto: int | None = None) -> int:
        upto = self.length if upto is None else upto
        if upto > self.length:
            raise BoundExceedsLength(f"bound {upto} exceeds length {self.length}")
        return (self.bits & mask(upto)).bit_count()

    def coefficients(self, upto: int | None = None) -> list[int]:
        upto = self.length if upto is None else upto
        if upto > self.length:
            raise BoundExceedsLength(f"bound {upto} exceeds length {self.length}")
        return [(self.bits >> n) & 1 for n in range(upto)]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Gf2Series") -> "Gf2Series":
        n = min(self.length, other.length)
        return Gf2Series((self.bits ^ other.bits) & mask(n), n)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "Gf2Series") -> "Gf2Series":
        n = min(self.length, other.length)
        return Gf2Series(_bitops.carryless_mul(self.bits, other.bits, n), n)

    def square(self) -> "Gf2Series":
        """Freshman's dream: (sum a_n q^n)^2 = sum a_n q^(2n) over GF(2)."""
        half = (self.length + 1) // 2
        return Gf2Series(_bitops.square_bits(self.bits & mask(half), half), self.length)

    def __pow__(self, e: int) -> "Gf2Series":
        if e < 0:
            raise ValueError("negative powers go through inverse()")
        result = None
        sq = self
        while e:
            if e & 1:
                result = sq if result is None else result * sq
            e >>= 1
            if e:
                sq = sq.square()
        return Gf2Series.one(self.length) if result is None else result

    def inverse(self) -> "Gf2Series":
        """Multiplicative inverse by mod-2 Newton doubling.

        If f*g == 1 through m terms then f*(f*g*g) == (f*g)^2 == 1 through
        2m terms, because squaring only spreads exponents mod 2.
        """
        if not self.bits & 1:
            raise NonUnitConstantTerm("inverse requires constant term 1")
        n = self.length
        g = 1
        m = 1
        while m < n:
            m2 = min(2 * m, n)
            half = (m2 + 1) // 2
            g_sq = _bitops.square_bits(g & mask(half), half) & mask(m2)
            g = _bitops.carryless_mul(self.bits & mask(m2), g_sq, m2)
            m = m2
        return Gf2Series(g, n)

    # -- index manipulation ------------------------------------------------

    def magnify(self, j: int) -> "Gf2Series":
        """Substitute q -> q^j; result keeps this length.

        Callers needing correctness through exponent N must start from a
        source expanded to ceil(N/j)+1 terms.
        """
        if j < 1:
            raise ValueError("magnification factor must be >= 1")
        if j == 1:
            return self
        return Gf2Series(_bitops.stretch(self.bits, self.length, j, self.length), self.length)

    def magnify_to(self, j: int, out_length: int) -> "Gf2Series":
        """Like magnify but with an explicit output length.

        Correct iff this series covers ceil(out_length/j) terms; used by
        evaluators that pre-inflate their sources.
        """
        if j < 1:
            raise ValueError("magnification factor must be >= 1")
        if (out_length - 1) // j + 1 > self.length:
            raise BoundExceedsLength("source series too short for requested magnification")
        return Gf2Series(_bitops.stretch(self.bits, self.length, j, out_length), out_length)

    def shift(self, k: int) -> "Gf2Series":
        """Multiply by q^k; length grows by k."""
        if k < 0:
            raise ValueError("shift offset must be nonnegative")
        return Gf2Series(self.bits << k, self.length + k)

    def extract(self, modulus: int, residue: int) -> "Gf2Series":
        """Arithmetic-progression dissection: result(n) = self(modulus*n + residue)."""
        if modulus < 1:
            raise ValueError("extraction modulus must be >= 1")
        if not 0 <= residue < modulus:
            raise ResidueOutOfRange(f"residue {residue} not in [0, {modulus})")
        if residue >= self.length:
            raise BoundExceedsLength("no coefficients in the requested progression")
        bits, count = _bitops.take_stride(self.bits, self.length, modulus, residue)
        return Gf2Series(bits, count)

    def truncate(self, n: int) -> "Gf2Series":
        if n > self.length:
            raise BoundExceedsLength(f"cannot extend length {self.length} to {n}")
        return self if n == self.length else Gf2Series(self.bits & mask(n), n)

    def __repr__(self) -> str:
        shown = self.odd_exponents(min(self.length, 64))
        terms = " + ".join("1" if e == 0 else f"q^{e}" for e in shown[:8]) or "0"
        if len(shown) > 8 or self.length > 64:
            terms += " + ..."
        return f"Gf2Series({terms}, length={self.length})"
