"""Exceptions shared across the package."""


class ExhaustionError(RuntimeError):
    """An exhaustive computation was refused because it exceeds a size bound.

    Raised instead of silently running for hours; the bound that was hit is
    named in the message.
    """


class VerificationError(RuntimeError):
    """A mechanically checked identity failed.

    Carries a ``witness`` (a counterexample permutation, word, or the
    offending class structure) when one is available.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
