"""Exception hierarchy shared across the package."""


class Z4LiftError(Exception):
    """Base class for all errors raised by z4lift."""


class LengthMismatch(Z4LiftError):
    """Operands have different coordinate counts."""


class InvalidLength(Z4LiftError):
    """Length outside the domain of the operation (e.g. not 0 mod 8)."""


class NotSelfDual(Z4LiftError):
    """Input code fails a self-duality precondition."""


class NotDoublyEven(Z4LiftError):
    """Input binary code has a codeword of weight not divisible by 4."""


class NotDoublyEvenSelfDual(Z4LiftError):
    """Lift template parity data is inconsistent (corrupted template)."""


class NotTypeII(Z4LiftError):
    """Operation requires a Type II code."""


class InconsistentSystem(Z4LiftError):
    """Solved matrix failed post-verification; indicates a bug or bad template."""


class BudgetExceeded(Z4LiftError):
    """Enumeration would visit more elements than the configured cap."""


class BudgetExhausted(Z4LiftError):
    """A search ran out of candidates or wall-clock time."""


class UnsupportedLength(Z4LiftError):
    """Lattice certificate undefined at this length."""


class UnknownName(Z4LiftError):
    """No builtin code with the requested name."""


class FormatError(Z4LiftError):
    """File contents do not parse under the documented text formats."""
