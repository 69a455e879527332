"""Facilitates rendering a Model as a checked ACE document."""
import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

from modules.ace_language import ace_language
from modules.ace_language.modules import reader
from modules.ace_language.modules.custom_error import AceLanguageError
from modules.ace_language.modules.tokenizer import is_plain_word
from modules.af3_model.modules.model_types import (
    Component,
    ConstantFunction,
    DataDictionary,
    EnumerationType,
    Model,
    StateAutomaton,
)

from .modules import templates
from .modules.custom_error import GenerationError


log = logging.getLogger(name="log." + __name__)

DATATYPES = "datatypes"
ARCHITECTURE = "architecture"
AUTOMATA = "automata"
SECTIONS: tuple[str, ...] = (DATATYPES, ARCHITECTURE, AUTOMATA)

HEADINGS = {
    DATATYPES: "# Data dictionary",
    ARCHITECTURE: "# Component architecture",
    AUTOMATA: "# State automata",
}


@dataclass(frozen=True)
class Document:
    """
    Generated ACE document.

    Attributes:
        sections (tuple[tuple[str, tuple[Sentence, ...]], ...]): (heading, sentences) per non-empty section,
            in the order data dictionary, architecture, automata.
        proper_names (tuple[str, ...]): identifiers listed in the proper-names pragma.
    """

    sections: tuple[tuple[str, tuple[ace_language.Sentence, ...]], ...] = ()
    proper_names: tuple[str, ...] = ()

    @property
    def flat_sentences(self) -> tuple[ace_language.Sentence, ...]:
        return tuple(sentence for _, sentences in self.sections for sentence in sentences)

    def render(self) -> str:
        """`.ace` text: pragma line if needed, then heading and sentence lines, LF-terminated."""
        lines: list[str] = []
        if self.proper_names:
            lines.append(f"{ace_language.PRAGMA_PREFIX} {' '.join(self.proper_names)}")
        for heading, sentences in self.sections:
            lines.append(heading)
            lines.extend(sentence.text for sentence in sentences)
        return "".join(line + "\n" for line in lines)


class _Session:
    """Lexicon and discourse context shared by the sentences of one generation run."""

    def __init__(self, lexicon: Optional[ace_language.Lexicon]) -> None:
        self.lexicon = lexicon if lexicon is not None else ace_language.default_lexicon()
        self.context = reader.ReadingContext()
        self.pragma: dict[str, None] = {}

    def name(self, identifier: str) -> str:
        templates.check_identifier(name=identifier, lexicon=self.lexicon)
        return self._register(word=identifier)

    def guard(self, text: Optional[str]) -> Optional[str]:
        if text is None:
            return None
        return self._register(word=templates.lexicalize_guard(text=text, lexicon=self.lexicon))

    def _register(self, word: str) -> str:
        if word not in self.lexicon.proper_names:
            self.lexicon = ace_language.register_proper_names(lexicon=self.lexicon, names=(word,))
        if is_plain_word(word=word) or self.lexicon.collides_with_function_word(surface=word):
            self.pragma.setdefault(word, None)
        return word

    def realize(self, texts: Iterable[str]) -> list[ace_language.Sentence]:
        """
        Checks and reads every sentence. Generated text that fails is a template defect.

        Raises:
            GenerationError: ValidationInternalError when a sentence does not check or read back.
        """
        sentences = []
        for text in texts:
            try:
                tokens = ace_language.tokenize(text=text, lexicon=self.lexicon)
                report = ace_language.check_sentence(tokens=tokens)
                if not report.ok:
                    diagnostic = report.diagnostics[0]
                    raise GenerationError(
                        exception_type="ValidationInternalError",
                        details=text,
                        message=f"Generated sentence breaks '{diagnostic.rule}': {diagnostic.message}",
                    )
                sentences.append(reader.main(tokens=tokens, context=self.context))
            except AceLanguageError as exc:
                raise GenerationError(
                    exception_type="ValidationInternalError",
                    details=text,
                    message=f"Generated sentence does not read back: {exc}",
                ) from exc
        return sentences


def _datatype(enumeration: EnumerationType, session: _Session) -> list[ace_language.Sentence]:
    session.name(identifier=enumeration.name)
    for member in enumeration.members:
        session.name(identifier=member)
    return session.realize(texts=templates.datatype(enumeration=enumeration))


def _constant(function: ConstantFunction, session: _Session) -> list[ace_language.Sentence]:
    session.name(identifier=function.name)
    return session.realize(texts=templates.constant(function=function))


def _architecture(root: Component, session: _Session) -> list[ace_language.Sentence]:
    components = root.walk()
    texts: list[str] = []
    for component in components:
        session.name(identifier=component.name)
        texts.extend(templates.component(declared=component))
    for component in components:
        for port in component.ports:
            session.name(identifier=port.name)
            session.name(identifier=port.type_name)
            texts.append(templates.port(owner=component, declared=port))
    for component in components:
        for channel in component.channels:
            session.name(identifier=channel.name)
            texts.extend(templates.channel(declared=channel))
    return session.realize(texts=texts)


def _automaton(automaton: StateAutomaton, session: _Session) -> list[ace_language.Sentence]:
    session.name(identifier=automaton.name)
    session.name(identifier=automaton.owner)
    for state in automaton.states:
        session.name(identifier=state)
    texts = templates.automaton_header(automaton=automaton)
    for transition in automaton.transitions:
        texts.extend(
            templates.transition(
                declared=transition,
                guard=session.guard(text=transition.guard),
                action=session.guard(text=transition.action),
            )
        )
    return session.realize(texts=texts)


def generate_datatype(
    enumeration: EnumerationType, lexicon: Optional[ace_language.Lexicon] = None
) -> list[ace_language.Sentence]:
    """
    `T is a datatype.` followed by `It consists-of one element that is M.` or
    `It consists-of N elements that are M1, ..., and MN.`

    Raises:
        GenerationError: IdentifierNotLexicalizable, ValidationInternalError.
    """
    return _datatype(enumeration=enumeration, session=_Session(lexicon=lexicon))


def generate_constant(
    function: ConstantFunction, lexicon: Optional[ace_language.Lexicon] = None
) -> list[ace_language.Sentence]:
    """`C is a constant. It is equal to V.`"""
    return _constant(function=function, session=_Session(lexicon=lexicon))


def generate_architecture(
    root: Component, lexicon: Optional[ace_language.Lexicon] = None
) -> list[ace_language.Sentence]:
    """
    Component declarations depth-first (each followed by its subcomponent list), then every port, then every channel.

    Raises:
        GenerationError: IdentifierNotLexicalizable, ValidationInternalError.
    """
    return _architecture(root=root, session=_Session(lexicon=lexicon))


def generate_automaton(
    automaton: StateAutomaton, lexicon: Optional[ace_language.Lexicon] = None
) -> list[ace_language.Sentence]:
    """
    Declaration, state list and initial state, then each transition with its optional trigger and action.

    Raises:
        GenerationError: GuardNotLexicalizable, IdentifierNotLexicalizable, ValidationInternalError.
    """
    return _automaton(automaton=automaton, session=_Session(lexicon=lexicon))


def _data_dictionary(data_dictionary: DataDictionary, session: _Session) -> list[ace_language.Sentence]:
    sentences = []
    for enumeration in data_dictionary.enumerations:
        sentences.extend(_datatype(enumeration=enumeration, session=session))
    for function in data_dictionary.constants:
        sentences.extend(_constant(function=function, session=session))
    return sentences


def generate_document(
    model: Model,
    lexicon: Optional[ace_language.Lexicon] = None,
    sections: Iterable[str] = SECTIONS,
) -> Document:
    """
    Renders a model as an ACE document. Every model identifier is registered as a proper name and
    every sentence is checked and read back before it is included.

    Parameters:
        model (Model): a valid model.
        lexicon (Optional[Lexicon], optional): session lexicon. Defaults to default_lexicon().
        sections (Iterable[str], optional): subset of "datatypes", "architecture", "automata". Defaults to all.

    Returns:
        Document: deterministic for equal models and lexicons.

    Raises:
        GenerationError: GuardNotLexicalizable, IdentifierNotLexicalizable or ValidationInternalError.
    """
    selected = frozenset(sections)
    session = _Session(lexicon=lexicon)
    parts: list[tuple[str, tuple[ace_language.Sentence, ...]]] = []

    if DATATYPES in selected and model.data_dictionary is not None:
        parts.append(
            (HEADINGS[DATATYPES], tuple(_data_dictionary(data_dictionary=model.data_dictionary, session=session)))
        )
    if ARCHITECTURE in selected and model.architecture is not None:
        parts.append((HEADINGS[ARCHITECTURE], tuple(_architecture(root=model.architecture, session=session))))
    if AUTOMATA in selected and model.automata:
        sentences: list[ace_language.Sentence] = []
        for automaton in model.automata:
            sentences.extend(_automaton(automaton=automaton, session=session))
        parts.append((HEADINGS[AUTOMATA], tuple(sentences)))

    document = Document(
        sections=tuple((heading, found) for heading, found in parts if found),
        proper_names=tuple(session.pragma),
    )
    log.info(msg=f"Generated {len(document.flat_sentences)} sentence(s) for model {model.name}.")
    return document
