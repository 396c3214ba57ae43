"""Exception hierarchy shared by every layer of the engine."""


class ModcheckError(Exception):
    """Base class for all engine errors."""


class BoundExceeded(ModcheckError):
    """A structure is larger than the configured enumeration bound."""


class RingMismatch(ModcheckError):
    """Operands live over different rings or different parent modules."""


class PredicateError(ModcheckError):
    """A predicate was asked about an object outside its domain (e.g. an improper submodule)."""


class NotMultiplication(ModcheckError):
    """The operation requires a multiplication module."""


class SpecError(ModcheckError):
    """Malformed or semantically invalid DSL input.

    ``span`` is a ``(start, end)`` character range into the source text.
    """

    def __init__(self, message, span=None, source=None):
        super().__init__(message)
        self.message = message
        self.span = span
        self.source = source

    def render(self):
        if self.span is None or self.source is None:
            return f"error: {self.message}"
        start, end = self.span
        caret = " " * start + "^" * max(1, end - start)
        return f"error: {self.message}\n  {self.source}\n  {caret}"
