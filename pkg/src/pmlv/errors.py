"""Exception types shared across the package."""


class CapacityError(ValueError):
    """A desk-scale guard (table size, partition weight, permutation length) was exceeded."""


class DivergentSeriesError(ValueError):
    """The requested sum diverges (a weight-1 index with no root-of-unity twist)."""


class CancellationError(ArithmeticError):
    """A quantity that must cancel exactly (Euler's gamma) survived."""


class ConsistencyError(ArithmeticError):
    """An exact result failed a structural check, e.g. a cyclotomic sum that should be rational."""
