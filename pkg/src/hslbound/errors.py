"""Exception types shared across the package."""


class EmptyInputError(ValueError):
    """No nonzero generators were supplied."""


class NotPointedError(ValueError):
    """The cone generated by the input contains a line."""


class DimensionMismatchError(ValueError):
    """An operation restricted to a specific lattice rank was misapplied."""


class BudgetExhaustedError(RuntimeError):
    """The gamma search ran out of candidates before finding a certificate.

    Carries how far the search got so the failure is reproducible.
    """

    def __init__(self, examined: int, max_level: int):
        self.examined = examined
        self.max_level = max_level
        super().__init__(
            f"no valid gamma among {examined} candidates "
            f"(search exhausted up to grading level {max_level})"
        )
