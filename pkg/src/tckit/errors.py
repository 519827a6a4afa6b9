"""Exception types shared across the toolkit."""


class TCKitError(Exception):
    """Base class for all toolkit errors."""


class FieldMismatchError(TCKitError):
    """Arithmetic attempted between scalars of different fields."""


class ScalarDivisionByZero(TCKitError, ZeroDivisionError):
    """Inversion of the zero scalar."""


class RingValidationError(TCKitError):
    """A fusion-ring axiom fails.

    ``axiom`` names the law and ``witness`` is the index tuple exhibiting it.
    """

    def __init__(self, axiom, witness, message=None):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(message or f"{axiom} axiom fails at {self.witness}")


class CategoryValidationError(TCKitError):
    """F-symbol data is incomplete, singular or not unit-normalized."""

    def __init__(self, reason, witness=None, message=None):
        self.reason = reason
        self.witness = None if witness is None else tuple(witness)
        text = message or (reason if witness is None else f"{reason} at {self.witness}")
        super().__init__(text)


class ZigzagObstruction(TCKitError):
    """The F-entry through which a zigzag factors vanishes."""

    def __init__(self, label, entry):
        self.label = label
        self.entry = tuple(entry)
        super().__init__(f"zigzag obstruction for label {label}: F-entry {self.entry} is zero")


class CocycleError(TCKitError):
    """Input to the pointed-category constructor is not a normalized 3-cocycle."""

    def __init__(self, quadruple, message=None):
        self.quadruple = tuple(quadruple)
        super().__init__(message or f"3-cocycle condition fails at {self.quadruple}")


class TypecheckError(TCKitError):
    """A bordism word has mismatched boundaries."""


class ParseError(TCKitError):
    """Malformed input text (category file, word file, polygon file)."""
