"""Loads user content words from a lexicon file: `<category> <surface> [<canonical-lexeme>]` per line."""
import logging
from pathlib import Path

from .custom_error import LexiconError
from .lexicon import Lexicon, register_content_word


log = logging.getLogger(name="log." + __name__)


def read_entries(text: str, source: str = "<lexicon>") -> list[tuple[int, str, str, str | None]]:
    """
    Splits lexicon text into entries, skipping blank lines and `#` comments.

    Returns:
        entries (list[tuple[int, str, str, str | None]]): (line number, category, surface, lexeme).

    Raises:
        LexiconError: MalformedLexiconEntry for a line with fewer than two or more than three fields.
    """
    entries = []
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) not in (2, 3):
            raise LexiconError(
                exception_type="MalformedLexiconEntry",
                details=f"{source}, line {number}",
                message=f"Expected '<category> <surface> [<lexeme>]', found '{line}'. "
                "Multiword content words must be hyphenated.",
            )
        lexeme = fields[2] if len(fields) == 3 else None
        entries.append((number, fields[0], fields[1], lexeme))
    return entries


def load_lexicon_text(text: str, lexicon: Lexicon, source: str = "<lexicon>") -> Lexicon:
    for number, category, surface, lexeme in read_entries(text=text, source=source):
        try:
            lexicon = register_content_word(
                lexicon=lexicon, surface=surface, category=category, lexeme=lexeme
            )
        except LexiconError as exc:
            raise LexiconError(
                exception_type=exc.exception_type,
                details=f"{source}, line {number}",
                message=exc.message,
            ) from exc
    return lexicon


def main(path: str | Path, lexicon: Lexicon) -> Lexicon:
    """
    Registers every entry of a lexicon file.

    Parameters:
        path (str | Path): UTF-8 lexicon file.
        lexicon (Lexicon): lexicon to extend.

    Returns:
        Lexicon: extended lexicon.

    Raises:
        LexiconError: MalformedLexiconEntry for unreadable files or lines, plus any registration error,
            with file and line number in details.
    """
    path = Path(path)
    log.debug(msg=f"Loading lexicon file {path}.")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LexiconError(
            exception_type="MalformedLexiconEntry",
            details=str(object=path),
            message=f"Cannot read lexicon file: {exc.strerror}.",
        ) from exc
    except UnicodeDecodeError as exc:
        raise LexiconError(
            exception_type="MalformedLexiconEntry",
            details=f"{path}, byte {exc.start}",
            message="Lexicon file is not valid UTF-8 text.",
        ) from exc

    lexicon = load_lexicon_text(text=text, lexicon=lexicon, source=str(object=path))
    log.debug(msg=f"Lexicon file {path} loaded.")
    return lexicon
