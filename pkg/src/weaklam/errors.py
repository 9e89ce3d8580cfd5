"""Exception hierarchy for the weaklam library."""


class WeaklamError(Exception):
    """Base class for all library errors."""


class ParseError(WeaklamError):
    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class InvalidPositionError(WeaklamError):
    """A position does not address a subterm of the given term."""


class NotAWeakRedexError(WeaklamError):
    """The addressed subterm is not a contractible weak redex."""


class NotALabeledRedexError(WeaklamError):
    """The addressed subterm is not a contractible labeled redex."""


class NotAMarkedRedexError(WeaklamError):
    """The addressed subterm is not a marked redex."""


class BarrierViolatedError(WeaklamError):
    """The redex mentions a variable blocked by the binding path or barrier."""


class NotInitiallyMarkedError(WeaklamError):
    """The marked term does not star exactly the weak redexes."""


class SideConditionError(WeaklamError):
    """A hypothesis of a chain-derivation constructor failed; the message
    names the offending hypothesis."""


class SizeCapError(WeaklamError):
    """An enumeration exceeded the configured result-set cap."""

    def __init__(self, cap):
        super().__init__(f"superstep enumeration exceeded the cap of {cap} terms")
        self.cap = cap


class PremisesNotDerivableError(WeaklamError):
    """A join was requested for terms that are not one-superstep reducts."""


class UnknownSuiteError(WeaklamError):
    """run_suite was called with a suite name that is not registered."""
