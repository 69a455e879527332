"""Custom exception class for errors raised while generating ACE documents."""

from utilities.custom_error import NlsError


class GenerationError(NlsError):
    """
    Raised when a model cannot be rendered as checked ACE sentences.

    exception_type is one of: GuardNotLexicalizable, IdentifierNotLexicalizable, ValidationInternalError.
    Exit status 2 (generation error).
    """

    default_status_code: int = 2
