"""Exception hierarchy shared by all modules."""


class WorldGodelError(Exception):
    """Base class for domain errors raised by this package."""

    kind = "Error"


class ParseError(WorldGodelError, ValueError):
    kind = "SyntaxError"

    def __init__(self, message, position=None, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = message
        if position is not None:
            detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected {', '.join(self.expected)})"
        super().__init__(detail)


class ArityError(WorldGodelError, ValueError):
    kind = "ArityError"


class InvalidCode(WorldGodelError, ValueError):
    kind = "InvalidCode"


class MalformedNumber(WorldGodelError, ValueError):
    """A natural number that is not the code of any tagged expression."""

    kind = "MalformedNumber"


class BadWorld(MalformedNumber):
    kind = "BadWorld"


class BadLength(MalformedNumber):
    kind = "BadLength"


class BadCode(MalformedNumber):
    kind = "BadCode"


class BadTail(MalformedNumber):
    kind = "BadTail"


class BadParse(MalformedNumber):
    kind = "BadParse"


class AccessDenied(WorldGodelError):
    """Raised when encoding a sentence of a world the numbering cannot reach."""

    kind = "AccessDenied"


class UnknownWorld(WorldGodelError, KeyError):
    kind = "UnknownWorld"

    def __str__(self):
        return Exception.__str__(self)


class UnknownAtom(WorldGodelError, KeyError):
    kind = "UnknownAtom"

    def __str__(self):
        return Exception.__str__(self)
