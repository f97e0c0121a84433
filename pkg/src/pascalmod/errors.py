"""Error types shared across the package."""


class TheoremViolation(Exception):
    """An identity that should hold unconditionally failed.

    Raised when a closed-form shortcut disagrees with its own
    preconditions (e.g. a digit-sum difference that is negative or not
    divisible by base-1).  The verify harness catches these and reports
    them as counterexamples rather than crashing.
    """
