"""Exception types shared across the package."""


class NotAGroupError(ValueError):
    """A multiplication table fails one of the group axioms.

    Carries a human-readable reason and, where applicable, a witness
    tuple of element indices.
    """

    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        msg = reason if witness is None else f"{reason} (witness: {witness})"
        super().__init__(msg)


class SizeGuardError(ValueError):
    """A requested object would exceed the configured size budget."""


class FieldMismatchError(ValueError):
    """Operands live over different coefficient fields or groups."""


class ArityMismatchError(ValueError):
    """An argument list does not match the expected degree/arity."""


class DegeneratePairingError(ArithmeticError):
    """The Frobenius pairing matrix is singular over the chosen field."""


class SpecParseError(ValueError):
    """A group/field/cochain specifier string could not be parsed."""
