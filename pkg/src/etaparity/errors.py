"""Exception types raised across the package."""


class EtaParityError(Exception):
    """Base class for all errors raised by this package."""


class NonUnitConstantTerm(EtaParityError):
    """Series inversion requires constant term 1."""


class ResidueOutOfRange(EtaParityError):
    """Progression residue must satisfy 0 <= B < A."""


class BoundExceedsLength(EtaParityError):
    """Requested coefficient range extends past the series' valid length."""


class NonIntegralPrefactor(EtaParityError):
    """A fractional q-power shift was required where an integer is needed."""


class DeltaNotDividingLevel(EtaParityError):
    """An eta factor subscript does not divide the proposed level."""


class CongruenceConditionFailed(EtaParityError):
    """One of the two admissibility sums is nonzero mod 24."""


class HalfIntegralWeight(EtaParityError):
    """The exponent sum is odd, so the weight is not an integer."""


class InvalidDivisor(EtaParityError):
    """Cusp denominators must divide the level."""


class NotPrime(EtaParityError):
    """Hecke operators are indexed by primes."""


class LengthTooShort(EtaParityError):
    """Series too short for the requested operator."""


class UnknownPreset(EtaParityError):
    """Preset name not found in the registry."""


class NotCoprime(EtaParityError):
    """Modular inverse requires coprime arguments."""


class BadPrime(EtaParityError):
    """Residue analysis needs an odd prime coprime to the form coefficients."""


class UnknownTheorem(EtaParityError):
    """Theorem identifier not found in the registry."""


class PredicateFailed(EtaParityError):
    """The prime does not lie in the theorem's prime class."""


class IntegralityFailure(EtaParityError):
    """Family iteration parameters do not produce integral progressions."""


class MalformedClaim(EtaParityError):
    """Claim file or claim object does not match the expected schema."""


class ExpressionSyntaxError(EtaParityError):
    """Series expression or pipeline text could not be parsed."""
