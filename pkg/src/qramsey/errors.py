"""Exception types shared across the package."""


class CatalogError(LookupError):
    """An operator name could not be resolved."""


class UnclassifiablePairError(CatalogError):
    """No commutation verdict exists for a pair of operators."""

    def __init__(self, a, b):
        self.a = a
        self.b = b
        super().__init__(
            f"unclassifiable pair ({a}, {b}): no computed or declared commutation rule"
        )


class OperatorSyntaxError(ValueError):
    """Malformed operator expression; ``column`` is 1-based."""

    def __init__(self, message, column):
        self.column = column
        super().__init__(f"column {column}: {message}")


class ClaimSyntaxError(ValueError):
    pass


class ConfigError(ValueError):
    pass
