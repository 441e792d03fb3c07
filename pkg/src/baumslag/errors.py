"""Shared exception types."""


class DomainError(ValueError):
    """An operation was called outside its mathematical domain.

    Raised for precondition violations that are well-formed input but
    meaningless for the requested computation (mismatched group parameters,
    degenerate generators, guards like m = n = 1 for a Bezout certificate).
    """
