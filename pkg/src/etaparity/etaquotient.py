"""Symbolic eta-quotients and their mod-2 expansions.

A quotient is a signed exponent map delta -> r_delta standing for the
product of f_delta^r_delta, where f_j = prod_{i>=1} (1 - q^(j*i)).  The
fractional q-prefactor (sum delta*r_delta)/24 stays symbolic and is only
applied where an integer shift is demanded.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from ._bitops import mask
from .errors import ExpressionSyntaxError
from .gf2series import Gf2Series


@dataclass(frozen=True, slots=True)
class EtaQuotient:
    """Finite product of f_delta^r_delta with distinct delta >= 1, r != 0."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = {}
        for delta, r in self.terms:
            if delta < 1:
                raise ValueError(f"eta subscript must be >= 1, got {delta}")
            seen[delta] = seen.get(delta, 0) + r
        canon = tuple(sorted((d, r) for d, r in seen.items() if r != 0))
        object.__setattr__(self, "terms", canon)

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int] | Iterable[tuple[int, int]]) -> "EtaQuotient":
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        return cls(tuple(items))

    @classmethod
    def parse(cls, text: str) -> "EtaQuotient":
        """Accepts both `f1^4 / f3` and `{1:4, 3:-1}` (optionally `eta{...}`)."""
        return parse_eta_text(text)

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.terms)

    def __mul__(self, other: "EtaQuotient") -> "EtaQuotient":
        return EtaQuotient(self.terms + other.terms)

    def __truediv__(self, other: "EtaQuotient") -> "EtaQuotient":
        return EtaQuotient(self.terms + tuple((d, -r) for d, r in other.terms))

    def prefactor_exponent(self) -> Fraction:
        """The symbolic q-power (1/24) * sum(delta * r_delta)."""
        return Fraction(sum(d * r for d, r in self.terms), 24)

    def weight_times_two(self) -> int:
        return sum(r for _, r in self.terms)

    def to_text(self) -> str:
        """Product/quotient form, e.g. `f1^4/f3`; round-trips through parse()."""
        if not self.terms:
            return "1"
        num = [f"f{d}" + (f"^{r}" if r != 1 else "") for d, r in self.terms if r > 0]
        den = [f"f{d}" + (f"^{-r}" if r != -1 else "") for d, r in self.terms if r < 0]
        head = "*".join(num) if num else "1"
        return head + ("/" + "/".join(den) if den else "")

    def to_map_text(self) -> str:
        return "{" + ", ".join(f"{d}:{r}" for d, r in self.terms) + "}"

    def __repr__(self) -> str:
        return f"EtaQuotient({self.to_text()})"


# -- parsing -----------------------------------------------------------------

_MAP_RE = re.compile(r"^\{([^{}]*)\}$")
_FACTOR_RE = re.compile(r"^f(\d+)(?:\^(-?\d+))?$")


def parse_eta_map(text: str) -> EtaQuotient:
    body = _MAP_RE.match(text.strip())
    if not body:
        raise ExpressionSyntaxError(f"not a map literal: {text!r}")
    items = []
    content = body.group(1).strip()
    if content:
        for piece in content.split(","):
            try:
                d, r = piece.split(":")
                items.append((int(d), int(r)))
            except ValueError as exc:
                raise ExpressionSyntaxError(f"bad map entry {piece!r}") from exc
    return EtaQuotient(tuple(items))


def parse_eta_text(text: str) -> EtaQuotient:
    s = "".join(text.split())
    if s.startswith("eta"):
        s = s[3:]
    if s.startswith("{"):
        return parse_eta_map(s)
    if s in ("1", ""):
        return EtaQuotient(())
    items: list[tuple[int, int]] = []
    sign = 1
    for piece in re.split(r"([*/])", s):
        if piece == "*":
            continue
        if piece == "/":
            sign = -1  # binds to the single next factor
            continue
        if piece == "1" and sign == 1:
            continue
        m = _FACTOR_RE.match(piece)
        if not m:
            raise ExpressionSyntaxError(f"bad eta factor {piece!r} in {text!r}")
        delta = int(m.group(1))
        r = int(m.group(2)) if m.group(2) else 1
        items.append((delta, sign * r))
        sign = 1
    return EtaQuotient(tuple(items))


# -- closed-form coefficient supports ----------------------------------------

def pentagonal_series(length: int) -> Gf2Series:
    """Support = generalized pentagonal numbers k(3k-1)/2, k in Z (parity of f1)."""
    exps = [0]
    k = 1
    while True:
        lo = k * (3 * k - 1) // 2
        hi = k * (3 * k + 1) // 2
        if lo >= length:
            break
        exps.append(lo)
        if hi < length:
            exps.append(hi)
        k += 1
    return Gf2Series.from_exponents(exps, length)


def triangular_series(length: int) -> Gf2Series:
    """Support = triangular numbers n(n+1)/2 (parity of f1^3)."""
    exps = []
    k = 0
    while k * (k + 1) // 2 < length:
        exps.append(k * (k + 1) // 2)
        k += 1
    return Gf2Series.from_exponents(exps, length)


def three_core(length: int) -> Gf2Series:
    """Parity of f3^3/f1: support n(3n-2) over n in Z."""
    exps = []
    n = 0
    while n * (3 * n - 2) < length or n * (3 * n + 2) < length:
        for e in (n * (3 * n - 2), n * (3 * n + 2)):
            if e < length:
                exps.append(e)
        if n == 0:
            exps = exps[:1]
        n += 1
    return Gf2Series.from_exponents(exps, length)


def five_core(length: int) -> Gf2Series:
    """Parity of f5^5/f1: XOR of q^(A n^2 - 1) over n >= 1, A in {1,2,5,10}."""
    bits = 0
    for a in (1, 2, 5, 10):
        n = 1
        while a * n * n - 1 < length:
            bits ^= 1 << (a * n * n - 1)
            n += 1
    return Gf2Series(bits, length)


# -- expansion ----------------------------------------------------------------

_EULER_CACHE: dict[int, Gf2Series] = {}
_EXPAND_CACHE: dict[tuple[tuple[int, int], ...], Gf2Series] = {}
_EXPAND_CACHE_LIMIT = 48


def expand_f(j: int, length: int) -> Gf2Series:
    """Series of f_j = f1(q^j), by direct pentagonal-number enumeration."""
    if j < 1:
        raise ValueError("eta subscript must be >= 1")
    if length < 1:
        raise ValueError("length must be >= 1")
    base_len = (length - 1) // j + 1
    cached = _EULER_CACHE.get(0)
    if cached is None or cached.length < base_len:
        cached = pentagonal_series(max(base_len, 1024))
        _EULER_CACHE[0] = cached
    if j == 1:
        return cached.truncate(length) if cached.length > length else cached
    return cached.truncate(base_len).magnify_to(j, length)


def _power_of_f(delta: int, e: int, length: int) -> Gf2Series:
    """f_delta^e over GF(2), rewriting even powers as larger subscripts first."""
    while e % 2 == 0 and 2 * delta <= length:
        delta *= 2
        e //= 2
    return expand_f(delta, length) ** e


def expand(eq: EtaQuotient, length: int) -> Gf2Series:
    """Series of prod f_delta^r_delta (no q-prefactor), correct below `length`.

    Numerator and denominator products are expanded separately so a single
    inversion covers all negative exponents.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    cached = _EXPAND_CACHE.get(eq.terms)
    if cached is not None and cached.length >= length:
        return cached.truncate(length)
    num: Gf2Series | None = None
    den: Gf2Series | None = None
    for delta, r in eq.terms:
        part = _power_of_f(delta, abs(r), length)
        if r > 0:
            num = part if num is None else num * part
        else:
            den = part if den is None else den * part
    result = num if num is not None else Gf2Series.one(length)
    if den is not None:
        result = result * den.inverse()
    if len(_EXPAND_CACHE) >= _EXPAND_CACHE_LIMIT:
        _EXPAND_CACHE.pop(next(iter(_EXPAND_CACHE)))
    _EXPAND_CACHE[eq.terms] = result
    return result


def regular_partition_series(m: int, length: int) -> Gf2Series:
    """Parities of the m-regular partition counts: f_m / f1."""
    if m < 2:
        raise ValueError("regular partition index must be >= 2")
    return expand(EtaQuotient.from_exponents({m: 1, 1: -1}), length)


def clear_caches() -> None:
    _EULER_CACHE.clear()
    _EXPAND_CACHE.clear()


# -- lacunarity criterion ------------------------------------------------------

def cotron_criterion(eq: EtaQuotient) -> bool:
    """Exact rational test sum(r/delta over r>0) >= sum(|r|*delta over r<0).

    When it holds, the quotient's coefficients are lacunary mod 2.
    """
    pos = sum((Fraction(r, d) for d, r in eq.terms if r > 0), Fraction(0))
    neg = sum((Fraction(-r * d) for d, r in eq.terms if r < 0), Fraction(0))
    return pos >= neg
