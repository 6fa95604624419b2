"""Error taxonomy shared across the package.

InputError means the caller handed us something malformed (bad JSON, mixed
variable universes, a non-traceless matrix, ...).  UnsupportedInputError means
the value is well-formed but outside what an operation handles (indefinite
form reduction, odd-dimensional hyperbolic slice, ...).  Both map to exit
code 2 at the CLI.
"""


class InputError(ValueError):
    pass


class UnsupportedInputError(InputError):
    pass


class InternalError(RuntimeError):
    """A contract the library promises internally was violated."""
