"""Exception types shared across the package."""


class NotNilpotentError(Exception):
    """The lower central series of a finite group failed to reach the
    trivial subgroup, or a primary decomposition does not exist.

    Carries the offending evidence (a stabilized subgroup, or the prime
    whose elements are not closed under the product) in ``evidence``.
    """

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence


class UnwitnessedTowerError(Exception):
    """A tower operation needed every extension stage to carry a
    nilpotent-extension witness and at least one stage lacks it."""


class InvalidTableError(ValueError):
    """A multiplication table failed group-law validation.

    Subclasses ValueError so generic parsing error handlers still catch
    it; carries the first :class:`~bockstein.oracle.TableViolation` in
    ``violation`` when one is available.
    """

    def __init__(self, message, violation=None):
        super().__init__(message)
        self.violation = violation
