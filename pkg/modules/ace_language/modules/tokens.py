"""Token type produced by the tokenizer."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .lexicon import Category, FunctionRole


class TokenKind(str, Enum):
    FUNCTION_WORD = "functionWord"
    FIXED_PHRASE = "fixedPhrase"
    CONTENT_WORD = "contentWord"
    NUMBER = "number"
    PROPER_NAME = "properName"
    TERMINATOR = "terminator"


@dataclass(frozen=True)
class Token:
    """
    One word, fixed phrase or punctuation mark.

    Attributes:
        surface (str): text as written.
        kind (TokenKind): token class.
        position (int): character offset in the tokenized text.
        role (Optional[FunctionRole]): role of a function word.
        category (Optional[Category]): category of a content word.
        lexeme (Optional[str]): canonical lexeme of a content word, lowercase form of a function word,
            canonical text of a fixed phrase, "." or "?" for terminators.
        value (Optional[int]): numeric value of numbers and number words ("one").
    """

    surface: str
    kind: TokenKind
    position: int = 0
    role: Optional[FunctionRole] = None
    category: Optional[Category] = None
    lexeme: Optional[str] = None
    value: Optional[int] = None

    def is_function(self, *lexemes: str, role: Optional[FunctionRole] = None) -> bool:
        """True for a function word with one of the given lexemes (any lexeme when none given) and role."""
        if self.kind is not TokenKind.FUNCTION_WORD:
            return False
        if role is not None and self.role is not role:
            return False
        return not lexemes or self.lexeme in lexemes

    def is_content(self, category: Category, *lexemes: str) -> bool:
        if self.kind is not TokenKind.CONTENT_WORD or self.category is not category:
            return False
        return not lexemes or self.lexeme in lexemes

    def is_terminator(self, mark: Optional[str] = None) -> bool:
        return self.kind is TokenKind.TERMINATOR and (mark is None or self.lexeme == mark)
