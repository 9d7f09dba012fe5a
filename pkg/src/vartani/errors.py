"""Exception types shared across the package.

Plain I/O and encoding failures use the builtins (OSError,
UnicodeDecodeError); the classes here cover domain-specific failures.
"""


class VartaniError(Exception):
    """Base class for all package-specific errors."""


class MalformedWx(VartaniError):
    """A WX string contains a sequence outside the transliteration grammar.

    Attributes:
        position: codepoint offset of the offending character.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class MaskNotFound(VartaniError):
    """The requested mask index is not masked in the given sentence."""


class InvalidTable(VartaniError):
    """A mock prediction table violates the candidate-list invariants."""


class ProviderError(VartaniError):
    """A remote candidate provider failed.

    Attributes:
        kind: one of 'connect', 'timeout', 'status', 'schema'.
    """

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


class NoCandidates(VartaniError):
    """The provider returned no candidates; the word stays unchanged."""


class ConfigError(VartaniError):
    """A configuration value or referenced path is unusable."""


class FormatError(VartaniError):
    """A structured input file is malformed.

    Attributes:
        line: 1-based line number of the offending line, when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
