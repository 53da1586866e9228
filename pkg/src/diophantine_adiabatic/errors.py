"""Exception types raised across the package."""


class DiophantineSyntaxError(ValueError):
    """Malformed equation source. ``position`` is the 0-based character offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.message = message
        self.position = position


class NegativeExponent(ArithmeticError):
    pass


class DomainError(ValueError):
    pass


class SingularMatrix(ArithmeticError):
    pass


class ValueOverflow(OverflowError):
    """A squared equation value is too large to be represented exactly as a float."""
