"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class CapacityError(DomainError):
    """An input exceeds a configured computational bound."""


class DependentPairError(DomainError):
    """The bases are powers of a common integer, so no separation exists."""

    def __init__(self, m, n, base):
        self.m = m
        self.n = n
        self.base = base
        super().__init__(f"{m} and {n} are both powers of {base}")
