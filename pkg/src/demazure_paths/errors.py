"""Exception types shared across the package."""


class CrystalError(Exception):
    """Base class for every error raised by this package."""


class TruncationExhausted(CrystalError):
    """An ``f`` operator tried to act on the highest-weight head of a word.

    The word was truncated too early; the caller should deepen it by one
    ground-state factor and retry.
    """

    def __init__(self, i, word=None):
        super().__init__(f"f_{i} reached the head of a truncated word; deepen the truncation")
        self.i = i
        self.word = word


class BudgetExceeded(CrystalError):
    """A closure grew past the configured element cap."""


class LevelMismatch(CrystalError, ValueError):
    """A weight or element has the wrong level for the crystal it is used with."""


class InconsistentPropagation(CrystalError):
    """Energy propagation found a cycle violating the defining recursion."""


class LemmaViolation(CrystalError):
    """The (p, q) witness failed to satisfy the tensor identity."""


class DomainError(CrystalError, ValueError):
    """Arguments outside the domain of an identity (e.g. n does not divide L)."""
