"""Exception types shared across the package."""


class NotPrime(ValueError):
    """Raised when a modulus fails the primality check."""


class SmallPrime(ValueError):
    """Raised when an operation requires p >= 7 but got p in {3, 5}."""


class WrongModulus(ValueError):
    """Raised when an operation is called with a modulus outside its domain."""


class ZeroInverse(ZeroDivisionError):
    """Raised when inverting 0 in a prime field."""


class DegenerateLeading(ValueError):
    """Raised when a closed form needs a nonzero leading coefficient."""
