"""Exception types shared across the package.

The CLI maps these onto exit codes: invalid input -> 1, exceeded work
budget -> 2, internal inconsistency -> 3.
"""


class EmptyInstance(ValueError):
    """Fewer than two parts were supplied."""


class SizeTooSmall(ValueError):
    """Some part size is below 2 (log2 magnitude below 1)."""


class BadArgs(ValueError):
    """Operation preconditions on plain arguments were violated."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of the function."""


class BadProbabilities(ValueError):
    """Probability vector is not a distribution over the parts."""


class ExactSizesRequired(ValueError):
    """Operation needs true integer part sizes, not just log2 magnitudes."""


class RegimeDegenerate(ValueError):
    """Prescribed certificate parameters collapse (r would be <= 0)."""


class InstanceTooLarge(RuntimeError):
    """Work budget exhausted or enforced size cap exceeded."""


class NoSignChange(RuntimeError):
    """Root bracket failed to straddle zero; internal consistency failure."""
