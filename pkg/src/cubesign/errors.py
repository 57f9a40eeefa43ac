"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands disagree on variable count, or a point has the wrong width."""


class CapacityError(ValueError):
    """Requested size exceeds what the representation supports."""


class SamplingError(RuntimeError):
    """A bounded sampling procedure ran out of candidates or retries."""


class GeneratorError(ValueError):
    """A polynomial is not a valid generator for an automorphism."""


class PermutationError(ValueError):
    """A sequence is not a bijection on the variable indices."""


class FormatError(ValueError):
    """Serialized data does not match the expected text format."""
