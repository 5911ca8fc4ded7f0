"""Exception types shared across the package."""


class KCrankError(Exception):
    """Base class for all errors raised by kcrank."""


class NonUnitConstant(KCrankError, ValueError):
    def __init__(self, constant):
        self.constant = constant
        super().__init__(f"series is not invertible: constant term is {constant}, need +1 or -1")


class NotDivisible(KCrankError, ValueError):
    def __init__(self, index, divisor):
        self.index = index
        self.divisor = divisor
        super().__init__(f"coefficient at q^{index} is not divisible by {divisor}")


class BadModuli(KCrankError, ValueError):
    pass


class OrderExceeded(KCrankError, IndexError):
    pass


class BudgetExceeded(KCrankError, RuntimeError):
    pass


class NeedsTwoComponents(KCrankError, ValueError):
    pass


class EmptyPartition(KCrankError, ValueError):
    pass


class CacheError(KCrankError, ValueError):
    """A cache file is malformed, truncated, or belongs to another (k, N)."""
