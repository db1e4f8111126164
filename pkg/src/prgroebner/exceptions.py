"""Exception types shared across the package."""


class PRGroebnerError(Exception):
    """Base class for errors raised by prgroebner."""


class StructuralError(PRGroebnerError, ValueError):
    """Operands live in incompatible ambient rings or modules."""


class NotDivisible(PRGroebnerError, ArithmeticError):
    """Exact division of ring elements or monomials is impossible."""


class IterationLimitError(PRGroebnerError, RuntimeError):
    """A completion loop exceeded its configured ceiling."""


class ConsistencyError(PRGroebnerError, RuntimeError):
    """An internal verification step failed."""


class OracleRefusal(PRGroebnerError, ValueError):
    """The brute-force oracle declined a problem above its size ceiling."""
