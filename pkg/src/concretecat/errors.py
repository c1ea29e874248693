"""Exception hierarchy shared by every module."""


class ConcreteCatError(Exception):
    pass


class RejectedInput(ConcreteCatError, ValueError):
    """Arguments violate an operation's precondition (mismatched ends, bad index)."""


class EnumerationOverflow(ConcreteCatError):
    """A brute-force enumeration would exceed the configured cap."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: {size} candidates exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class NotMonotoneError(RejectedInput):
    pass


class StructuralValidationError(ConcreteCatError):
    """Data does not satisfy the axioms of its type; ``component`` names the culprit."""

    def __init__(self, component, message):
        super().__init__(f"{component}: {message}")
        self.component = component


class LevelTooLowError(ConcreteCatError):
    pass


class InfinitePathsError(RejectedInput):
    pass


class ArrowlikeViolation(ConcreteCatError):
    def __init__(self, pairs):
        super().__init__(f"backward morphisms from B to A at {pairs}")
        self.pairs = pairs


class ExtractionError(ConcreteCatError):
    pass


class SchemaError(ConcreteCatError):
    """Input file does not match the JSON schema; ``where`` is a JSON path."""

    def __init__(self, where, message):
        super().__init__(f"{where}: {message}")
        self.where = where
