"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid user-supplied parameter (probability, distance, flag value)."""


class DimensionError(ValueError):
    """Operands have incompatible lengths or shapes."""


class StructureError(ValueError):
    """Structural defect: unmatchable check matrix, malformed layout, rank defect."""


class DecodeError(RuntimeError):
    """Decoding cannot proceed, e.g. a defect with no path to any partner."""


class FitError(RuntimeError):
    """Threshold fit cannot be performed (degenerate design, too few points)."""
