"""Exception types shared across the package."""


class ContextError(ValueError):
    """Objects from incompatible rings (variable count, order or field) were mixed."""


class NoHeadTermError(ValueError):
    """The zero polynomial has no head term."""


class SignatureCollisionError(RuntimeError):
    """A critical pair reached S-polynomial construction with equal signatures.

    The rewritten criterion filters such pairs, so seeing this means the
    criteria are broken.
    """


class InvariantError(AssertionError):
    """An internal consistency check failed (only raised when checks are enabled)."""
