"""Error types shared across the package.

Exit-code mapping used by the CLI: invalid input -> 1, UncoverableError -> 2,
CapExceededError -> 3, InternalInvariantError -> 4.
"""


class InvcoverError(Exception):
    """Base class for package errors."""


class UncoverableError(InvcoverError):
    """The hypergraph has an empty edge, so no vertex set covers it."""


class CapExceededError(InvcoverError):
    """An enumeration (closure, group order, oracle, search) exceeded its cap."""


class InvalidActionError(InvcoverError):
    """A supplied generator is not an automorphism of the hypergraph."""


class InternalInvariantError(InvcoverError):
    """A quantity violated a relation the underlying theorems guarantee.

    Raised only on solver bugs; never on bad input.
    """
