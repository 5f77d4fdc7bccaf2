"""Exception types shared across the toolkit."""


class FolforgeError(Exception):
    """Base class for every error raised by this package."""


class FormulaSyntaxError(FolforgeError):
    """Malformed formula string.

    `offset` is the byte offset (UTF-8) of the offending position and
    `expected` the set of token descriptions that would have been legal there.
    """

    def __init__(self, message, offset, expected=()):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
        self.expected = frozenset(expected)


class ArityError(FolforgeError):
    """Atom does not match the arity declared by the vocabulary in scope."""


class ConfigError(FolforgeError):
    """Invalid configuration values (bad bounds, counts, ratios)."""


class DepthUnreachable(FolforgeError):
    """No production of the grammar fits the requested depth budget."""


class ExhaustedSampling(FolforgeError):
    """Rejection sampling gave up; the configuration is over-constrained."""


class NoMatchingPredicate(FolforgeError):
    """Vocabulary has no predicate of the arity required by the formula."""


class UnknownSymbol(FolforgeError):
    """Formula string contains a logical operator outside the symbol map."""


class UnlexicalizedInput(FolforgeError):
    """Formula still carries abstract predicate symbols."""


class SchemaError(FolforgeError):
    """Input record file is missing a required column."""


class EmptyInput(FolforgeError):
    """Operation received no usable records."""


class DegenerateInput(FolforgeError):
    """Both sides of a pair are empty; the normalizing denominator is zero."""
