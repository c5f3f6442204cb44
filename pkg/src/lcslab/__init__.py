"""Lower central series quotients of associative algebras, computed exactly."""

from lcslab.errors import DegreeCeilingError, LcsLabError, PreconditionError

__version__ = "0.1.0"

__all__ = ["DegreeCeilingError", "LcsLabError", "PreconditionError", "__version__"]
