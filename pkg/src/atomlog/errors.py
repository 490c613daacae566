"""Exception types shared across the toolkit."""


class AtomlogError(Exception):
    """Base class for every error raised by this package."""


class ParseError(AtomlogError):
    """Syntax error with a byte offset and the set of tokens that would have been accepted."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"offset {position}: {message}"
        if self.expected:
            detail += " (expected " + " or ".join(sorted(self.expected)) + ")"
        super().__init__(detail)


class CaptureError(AtomlogError):
    """Substitution would move a term variable into the scope of a binder for it."""


class SignatureError(AtomlogError):
    """Formula uses a connective the matrix has no table for."""


class DomainError(AtomlogError):
    """Valuation does not cover an atom of the formula under evaluation."""


class CapExceeded(AtomlogError):
    """Valuation enumeration refused: too many atoms."""

    def __init__(self, atom_count: int, cap: int):
        self.atom_count = atom_count
        self.cap = cap
        super().__init__(f"formula has {atom_count} atoms, valuation cap is {cap}")


class InterpretationMissing(AtomlogError):
    """Finite structure does not interpret a symbol of the formula."""


class PreconditionError(AtomlogError):
    """Operation called on an input that violates its stated precondition."""


class EvidenceError(AtomlogError):
    """An evidence check that should hold by construction failed."""


class BudgetExceeded(AtomlogError):
    """Forward-closure probe grew past its formula-count budget."""
