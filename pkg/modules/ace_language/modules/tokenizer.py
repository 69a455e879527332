"""Splits ACE text into tokens using the lexicon's word classes."""
import logging
import re

from .custom_error import AceLanguageError
from .lexicon import NUMBER_WORDS, Lexicon
from .tokens import Token, TokenKind


log = logging.getLogger(name="log." + __name__)

_CHUNK = re.compile(r"'s(?!\w)|[,.?]|[^\s,.?']+|\S")
_NUMBER = re.compile(r"-?\d+")
_PLAIN_WORD = re.compile(r"[a-z]+(?:-[a-z]+)*")
_IDENTIFIER = re.compile(r"[A-Za-z0-9_\-=<>!+*/()&|]+")
_HAS_ALNUM = re.compile(r"[A-Za-z0-9]")

_ATTACHED = frozenset({",", ".", "?", "'s"})


def is_plain_word(word: str) -> bool:
    """True for lowercase (hyphenated) words, which only tokenize as proper names once registered."""
    return _PLAIN_WORD.fullmatch(word) is not None


def _match_fixed_phrase(
    chunks: list[re.Match], index: int, sentence_start: bool, lexicon: Lexicon
) -> tuple[str, int] | None:
    """Returns (canonical phrase, number of chunks) for the longest fixed phrase starting at index."""
    for phrase in sorted(lexicon.fixed_phrases, key=lambda text: -len(text.split())):
        words = phrase.split()
        candidates = [match.group() for match in chunks[index : index + len(words)]]
        if len(candidates) != len(words):
            continue
        first_ok = candidates[0] == words[0] or (
            sentence_start and candidates[0] == words[0].capitalize()
        )
        if first_ok and candidates[1:] == words[1:]:
            return phrase, len(words)
    return None


def _classify(word: str, position: int, sentence_start: bool, lexicon: Lexicon) -> Token:
    if word in (".", "?"):
        return Token(surface=word, kind=TokenKind.TERMINATOR, position=position, lexeme=word)

    if word in lexicon.proper_names:
        return Token(surface=word, kind=TokenKind.PROPER_NAME, position=position)

    role = lexicon.function_role(surface=word, sentence_start=sentence_start)
    if role is not None:
        lexeme = word.lower()
        return Token(
            surface=word,
            kind=TokenKind.FUNCTION_WORD,
            position=position,
            role=role,
            lexeme=lexeme,
            value=NUMBER_WORDS.get(lexeme),
        )

    content_word = lexicon.content_word(surface=word)
    if content_word is not None:
        return Token(
            surface=word,
            kind=TokenKind.CONTENT_WORD,
            position=position,
            category=content_word.category,
            lexeme=content_word.lexeme,
        )

    if _NUMBER.fullmatch(word):
        return Token(surface=word, kind=TokenKind.NUMBER, position=position, value=int(word))

    if _PLAIN_WORD.fullmatch(word) is None and _IDENTIFIER.fullmatch(word) and _HAS_ALNUM.search(word):
        return Token(surface=word, kind=TokenKind.PROPER_NAME, position=position)

    hint = ""
    if _PLAIN_WORD.fullmatch(word):
        hint = " Register it as a content word; multiword content words must be hyphenated (e.g. interested-in)."
    raise AceLanguageError(
        exception_type="UnknownToken",
        position=position,
        message=f"'{word}' is not a function word, fixed phrase, content word, number or proper name.{hint}",
    )


def tokenize(text: str, lexicon: Lexicon) -> list[Token]:
    """
    Tokenizes text with greedy longest match: fixed phrases first, then registered proper names, function words,
    content words, numbers and identifier-shaped proper names. Terminators end sentences.

    Parameters:
        text (str): one or more ACE sentences.
        lexicon (Lexicon): lexicon supplying content words and proper names.

    Returns:
        tokens (list[Token]): tokens of every sentence, terminators included.

    Raises:
        AceLanguageError: UnknownToken for an uncapitalized word in no class (with its character position).
    """
    chunks = list(_CHUNK.finditer(text))
    tokens: list[Token] = []
    sentence_start = True
    index = 0

    while index < len(chunks):
        match = chunks[index]
        fixed = _match_fixed_phrase(
            chunks=chunks, index=index, sentence_start=sentence_start, lexicon=lexicon
        )
        if fixed is not None:
            phrase, length = fixed
            surface = " ".join(chunk.group() for chunk in chunks[index : index + length])
            tokens.append(
                Token(
                    surface=surface,
                    kind=TokenKind.FIXED_PHRASE,
                    position=match.start(),
                    lexeme=phrase,
                )
            )
            index += length
            sentence_start = False
            continue

        token = _classify(
            word=match.group(),
            position=match.start(),
            sentence_start=sentence_start,
            lexicon=lexicon,
        )
        tokens.append(token)
        sentence_start = token.kind is TokenKind.TERMINATOR
        index += 1

    return tokens


def split_sentences(tokens: list[Token]) -> list[list[Token]]:
    """Splits a token list after every terminator; trailing tokens without terminator form a last sentence."""
    sentences: list[list[Token]] = []
    current: list[Token] = []
    for token in tokens:
        current.append(token)
        if token.kind is TokenKind.TERMINATOR:
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    return sentences


def detokenize(tokens: list[Token]) -> str:
    """Joins token surfaces with single spaces, attaching commas, terminators and the genitive marker."""
    text = ""
    for token in tokens:
        if not text or token.surface in _ATTACHED:
            text += token.surface
        else:
            text += " " + token.surface
    return text
