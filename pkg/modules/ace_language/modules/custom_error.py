"""Custom exception classes for the ACE subset: lexicon, tokenizer and sentence reader."""

from typing import Optional

from utilities.custom_error import NlsError


class AceLanguageError(NlsError):
    """
    Raised when text is not a readable sentence of the ACE subset.

    exception_type is one of: UnknownToken, InvalidSentence, AmbiguousSentence, UnresolvedPronoun,\
    NoReading, CountMismatch. Exit status 2 (validation error).
    """

    default_status_code: int = 2

    def __init__(
        self,
        exception_type: str,
        message: str,
        details: Optional[str] = None,
        status_code: Optional[int] = None,
        position: Optional[int] = None,
    ) -> None:
        self.position = position
        super().__init__(
            exception_type=exception_type,
            message=message,
            details=details if details is not None or position is None else f"position {position}",
            status_code=status_code,
        )


class LexiconError(NlsError):
    """
    Raised when a content word cannot be registered.

    exception_type is one of: BlankSpaceInContentWord, FunctionWordCollision, CategoryConflict,\
    MalformedLexiconEntry. Exit status 1 (input error).
    """

    default_status_code: int = 1
