"""Facilitates tokenizing, checking and reading sentences and documents of the ACE subset."""
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .modules import lexicon_file, reader
from .modules.checker import Diagnostic, ValidationReport, check_sentence
from .modules.custom_error import AceLanguageError, LexiconError
from .modules.lexicon import Category, Lexicon, default_lexicon, register_content_word, register_proper_names
from .modules.reader import ReadingContext
from .modules.readings import Sentence
from .modules.tokenizer import split_sentences, tokenize
from .modules.tokens import Token


__all__ = [
    "AceLanguageError",
    "Category",
    "DocumentReading",
    "Lexicon",
    "LexiconError",
    "ReadingContext",
    "Sentence",
    "ValidationReport",
    "check_sentence",
    "default_lexicon",
    "load_lexicon_file",
    "parse_sentence",
    "pragma_names",
    "read_document",
    "register_content_word",
    "register_proper_names",
    "tokenize",
]

log = logging.getLogger(name="log." + __name__)

PRAGMA_PREFIX = "# proper-names:"
_PRAGMA = re.compile(r"#\s*proper-names:(?P<names>.*)")


@dataclass(frozen=True)
class DocumentReading:
    """
    Result of reading an ACE document.

    Attributes:
        sentences (tuple[Sentence, ...]): sentences that were read, in document order.
        report (ValidationReport): one diagnostic per failing sentence, with line numbers.
        lexicon (Lexicon): the lexicon extended by the document's proper-names pragma.
    """

    sentences: tuple[Sentence, ...]
    report: ValidationReport
    lexicon: Lexicon


def load_lexicon_file(path: str | Path, lexicon: Lexicon) -> Lexicon:
    return lexicon_file.main(path=path, lexicon=lexicon)


def parse_sentence(
    sentence: str | list[Token],
    lexicon: Lexicon,
    context: Optional[ReadingContext] = None,
) -> Sentence:
    """
    Reads one sentence: tokenizes text with the lexicon if needed, checks it and assigns its one reading.

    Parameters:
        sentence (str | list[Token]): sentence text or its tokens, terminator included.
        lexicon (Lexicon): lexicon used to tokenize text.
        context (Optional[ReadingContext], optional): discourse state for `It`; advanced on success.

    Returns:
        Sentence: the sentence with its reading.

    Raises:
        AceLanguageError: see reader.main, plus UnknownToken for text input.
    """
    tokens = tokenize(text=sentence, lexicon=lexicon) if isinstance(sentence, str) else sentence
    return reader.main(tokens=tokens, context=context)


def pragma_names(line: str) -> Optional[list[str]]:
    """Names listed by a `# proper-names: A b c` line, None for any other line."""
    match = _PRAGMA.fullmatch(line.strip())
    if match is None:
        return None
    return match.group("names").split()


def _diagnostic(exc: AceLanguageError, line: int, fallback: int) -> Diagnostic:
    return Diagnostic(
        position=exc.position if exc.position is not None else fallback,
        rule=exc.exception_type,
        message=exc.message,
        line=line,
    )


def read_document(text: str, lexicon: Lexicon) -> DocumentReading:
    """
    Reads an ACE document line by line with one discourse context. `#` lines are comments;
    a `# proper-names:` line registers the names it lists. A failing sentence is reported
    and reading goes on with the next one.

    Parameters:
        text (str): document text, one or more sentences per line.
        lexicon (Lexicon): session lexicon.

    Returns:
        DocumentReading: parsed sentences, the validation report and the extended lexicon.
    """
    context = ReadingContext()
    sentences: list[Sentence] = []
    diagnostics: list[Diagnostic] = []

    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            names = pragma_names(line=stripped)
            if names:
                lexicon = register_proper_names(lexicon=lexicon, names=names)
            continue

        try:
            tokens = tokenize(text=line, lexicon=lexicon)
        except AceLanguageError as exc:
            diagnostics.append(_diagnostic(exc=exc, line=number, fallback=0))
            continue

        for sentence_tokens in split_sentences(tokens=tokens):
            report = check_sentence(tokens=sentence_tokens)
            if not report.ok:
                diagnostics.extend(
                    Diagnostic(position=found.position, rule=found.rule, message=found.message, line=number)
                    for found in report.diagnostics
                )
                continue
            try:
                sentences.append(reader.main(tokens=sentence_tokens, context=context, line=number))
            except AceLanguageError as exc:
                diagnostics.append(
                    _diagnostic(exc=exc, line=number, fallback=sentence_tokens[0].position)
                )

    log.info(msg=f"Read {len(sentences)} sentence(s) with {len(diagnostics)} diagnostic(s).")
    return DocumentReading(
        sentences=tuple(sentences),
        report=ValidationReport(diagnostics=tuple(diagnostics)),
        lexicon=lexicon,
    )
