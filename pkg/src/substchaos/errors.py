"""Exception hierarchy shared by all analysis modules."""


class SubstitutionError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SubstitutionError):
    """Malformed substitution source text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class InvariantError(SubstitutionError):
    """A constructed value violates one of its structural invariants."""


class StreamChainError(InvariantError):
    """Desubstitution entries fail the level-consistency equation."""

    def __init__(self, message, level):
        self.level = level
        super().__init__(f"level {level}: {message}")


class PreconditionError(SubstitutionError):
    """An operation was called outside its stated domain."""


class BudgetExceededError(SubstitutionError):
    """A configured word/search/iteration budget was exhausted."""


class SearchBudgetError(BudgetExceededError):
    """Simplifiability search ran out of candidate budget (distinct from
    a definite 'elementary' answer)."""


class SeparationBoundError(BudgetExceededError):
    """Fiber enumeration could not separate candidate points at the
    requested radius; carries the number found so far as a lower bound."""

    def __init__(self, message, lower_bound):
        self.lower_bound = lower_bound
        super().__init__(message)
