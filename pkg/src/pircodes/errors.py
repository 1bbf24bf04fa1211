"""Exception types shared across the package."""


class PirCodesError(Exception):
    """Base class for all package-specific errors."""


class DimensionTooLarge(PirCodesError):
    """Exhaustive minimum-distance computation refused: dimension above the cap."""


class NotFullRank(PirCodesError):
    """A generator matrix that must have full row rank does not."""


class IndexOutOfRange(PirCodesError):
    """A certificate or argument refers to a coordinate/symbol outside its range."""


class NotSystematic(PirCodesError):
    """Operation requires a generator matrix in systematic [I | P] form."""


class RankLoss(PirCodesError):
    """Deleting the requested coordinate would drop the matrix rank below k."""


class DimensionMismatch(PirCodesError):
    """Two matrices that must share a dimension do not."""


class InvalidCertificate(PirCodesError):
    """A certificate fails its structural or algebraic invariants."""


class OddT(PirCodesError):
    """Operation requires an even availability parameter t."""


class WeightMismatch(PirCodesError):
    """An extension row has the wrong Hamming weight for the search mode."""


class InvalidInput(PirCodesError):
    """Search input violates a stated precondition (form, weight, or mode check)."""


class NoPropertyS5(PirCodesError):
    """The collection does not carry a valid Steiner-type (S5) certificate."""


class EmptyTargetSet(PirCodesError):
    """The parity set selected for lengthening is empty."""


class Exhausted(PirCodesError):
    """The constant-weight vector sequence has no successor."""


class InvalidT(PirCodesError):
    """Availability parameter outside the domain of the requested bound."""


class NoReferenceData(PirCodesError):
    """No embedded reference table entry exists for the requested (k, t)."""


class ParseError(PirCodesError):
    """A text file does not conform to its format; carries line/column info."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}" if line else message)
