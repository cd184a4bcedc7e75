"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible or non-factoring dimensions."""


class SizeError(ValueError):
    """A result would exceed the configured maximum dimension."""


class DomainError(ValueError):
    """An input violates a mathematical precondition (not Hermitian,
    rank-deficient, parameter outside its allowed interval, ...)."""


class ConfigError(ValueError):
    """A search or CLI configuration names an unknown or unsupported option."""
