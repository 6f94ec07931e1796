"""Exception hierarchy shared by every layer of the package."""


class LogicError(Exception):
    """Base class for all errors raised by locseq."""


class SignatureError(LogicError):
    """A logic definition is malformed (bad table, duplicate connective, bad n)."""


class ParseError(LogicError):
    """Text does not conform to the formula or sequent grammar."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownConnectiveError(ParseError):
    pass


class ArityError(ParseError):
    pass


class LocationError(ParseError):
    """A located formula carries a value index outside 1..n."""


class UnassignedAtomError(LogicError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class DerivationFormatError(LogicError):
    """A derivation document is not a well-formed proof tree."""


class CheckError(LogicError):
    """A derivation node is not a legal instance of the rule it cites."""

    def __init__(self, path, rule, reason):
        self.path = path
        self.rule = rule
        self.reason = reason
        super().__init__(f"node {path}: rule {rule!r}: {reason}")


class RuleMismatch(LogicError):
    """Raised by a schema matcher; carries the structural reason only."""
