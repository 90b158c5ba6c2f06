"""Exception hierarchy shared across the package."""


class DeviatileError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(DeviatileError, ValueError):
    """Invalid argument or model parameter."""


class InfiniteMomentError(DeviatileError, ValueError):
    """A required moment of the model does not exist (tail too heavy)."""


class ConvergenceError(DeviatileError, RuntimeError):
    """A root finder or quadrature failed to reach its tolerance."""


class EstimationError(DeviatileError, RuntimeError):
    """A sample-based estimator is not applicable (for example the Hill
    estimate lands in a region where the target functional is undefined).

    Deliberately distinct from ParameterError: callers of Monte-Carlo or
    bootstrap loops catch this one to count failed replicates.
    """


class DataFormatError(DeviatileError, ValueError):
    """Malformed input data (CSV rows, config files, report files)."""
