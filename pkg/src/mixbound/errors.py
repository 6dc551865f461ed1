"""Error and warning types shared across the package.

The CLI maps these onto exit codes: InputError -> 1, CapabilityError -> 2.
"""


class InputError(ValueError):
    """Caller supplied an invalid argument (bad vertex, malformed file, ...)."""


class CapabilityError(RuntimeError):
    """The request is valid but exceeds a configured cap or the method's reach
    (brute-force size limits, enumeration caps, retry exhaustion, missing
    chain properties)."""


class VacuousRegimeWarning(UserWarning):
    """The construction is well defined but its theoretical guarantee is
    vacuous for these parameters (graph too small relative to the stationary
    ratio)."""
