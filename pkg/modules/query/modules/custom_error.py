"""Custom exception class for errors raised while answering questions."""

from utilities.custom_error import NlsError


class QueryError(NlsError):
    """
    Raised when a question cannot be answered from the fact base.

    exception_type is one of: UnsupportedQuestionForm, UnknownEntity. Exit status 3 (query error).
    An answer failing its own check is reported as ValidationInternalError with status 2.
    """

    default_status_code: int = 3
