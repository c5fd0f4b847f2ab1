"""Exception hierarchy shared across modules."""


class SuperbottError(Exception):
    """Base class for all package-specific errors."""


class PreconditionError(SuperbottError):
    """An operation was called outside its stated domain."""


class HypothesisError(PreconditionError):
    """The main-theorem hypothesis fails for the given bundle."""


class TermLimitError(PreconditionError):
    """An expansion would exceed the configured term budget."""
