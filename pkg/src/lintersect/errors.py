"""Exception types shared across the toolkit.

Validation failures (bad parameters, unparsable input) raise; a family that
merely fails a theorem's hypotheses is reported as data, not raised.
"""


class LintersectError(Exception):
    """Base class for all toolkit errors."""


class NonPrimeModulus(LintersectError):
    """Modulus failed the primality test."""


class ResidueOutOfRange(LintersectError):
    """A residue is negative or >= p in a modular context."""


class DegreeExceedsModulus(LintersectError):
    """|L| >= p: the annihilator degree leaves the modular comfort zone."""


class BasisDegenerate(LintersectError):
    """s >= p: binom(t,0..s) is no longer a basis mod p."""


class LevelOutOfRange(LintersectError):
    """A Boolean-lattice level outside 0..n was requested."""


class ParamOutOfRange(LintersectError):
    """Numeric parameters violate a documented precondition."""


class HypothesisViolated(LintersectError):
    """Raised only where a builder refuses to proceed; checkers report instead."""


class NotAlmostInitial(LintersectError):
    """No almost-initial decomposition exists for the residue set."""


class DimensionOverflow(LintersectError):
    """A certificate matrix would exceed the configured cap."""


class SearchCapExceeded(LintersectError):
    """Search problem larger than the configured ground-set cap."""


class DomainMismatch(LintersectError):
    """Mixed coefficient domains (integers vs mod p) in one computation."""


class FamilyParseError(LintersectError):
    """Family file rejected; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BoundViolation(LintersectError):
    """An empirically checked bound failed on concrete data.  Loud on purpose."""
