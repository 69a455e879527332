"""Facilitates parsing ACE questions and answering them from a fact base."""
import logging
from typing import Optional

from modules.ace_language import ace_language
from modules.ace_language.modules.custom_error import AceLanguageError
from modules.ace_language.modules.readings import (
    HowManyElements,
    IsA,
    IsElementOf,
    Question,
    UnsupportedQuestion,
    WhatIs,
)
from modules.ace_language.modules.tokenizer import split_sentences
from modules.factbase.modules.facts import FactBase

from .modules import answers
from .modules.answers import Answer
from .modules.custom_error import QueryError


log = logging.getLogger(name="log." + __name__)


def lexicon_for(facts: FactBase, lexicon: Optional[ace_language.Lexicon] = None) -> ace_language.Lexicon:
    """
    Registers the entity names of a fact base as proper names, so that questions and answers about
    lowercase identifiers tokenize. Names reserved as function words or equal to content words are left out.
    """
    lexicon = lexicon if lexicon is not None else ace_language.default_lexicon()
    names = [
        name
        for name in facts.index
        if not lexicon.reserves_name(surface=name) and lexicon.content_word(surface=name) is None
    ]
    return ace_language.register_proper_names(lexicon=lexicon, names=names)


def _question_error(exc: AceLanguageError) -> QueryError:
    return QueryError(exception_type=exc.exception_type, details=exc.details, message=exc.message)


def parse_question(text: str, lexicon: ace_language.Lexicon) -> Question:
    """
    Reads one question into its question form.

    Parameters:
        text (str): one ACE question ending with "?".
        lexicon (Lexicon): session lexicon (see lexicon_for).

    Returns:
        Question: WhatIs, HowManyElements, IsElementOf or IsA.

    Raises:
        QueryError: UnsupportedQuestionForm for anything but one question of the four supported forms.
            Tokenizer and reader diagnostics (UnknownToken, AmbiguousSentence, ...) keep their name with status 3.
    """
    try:
        tokens = ace_language.tokenize(text=text, lexicon=lexicon)
    except AceLanguageError as exc:
        raise _question_error(exc=exc) from exc
    sentences = split_sentences(tokens=tokens)
    if len(sentences) != 1 or not sentences[0][-1].is_terminator("?"):
        raise QueryError(
            exception_type="UnsupportedQuestionForm",
            details=text,
            message="Expected exactly one question ending with '?'.",
        )

    report = ace_language.check_sentence(tokens=sentences[0])
    if not report.ok:
        diagnostic = report.diagnostics[0]
        raise QueryError(
            exception_type="UnsupportedQuestionForm",
            details=f"position {diagnostic.position}",
            message=f"{diagnostic.rule}: {diagnostic.message}",
        )

    try:
        question = ace_language.parse_sentence(sentence=sentences[0], lexicon=lexicon).reading
    except AceLanguageError as exc:
        raise _question_error(exc=exc) from exc
    if not isinstance(question, Question) or isinstance(question.form, UnsupportedQuestion):
        reason = question.form.reason if isinstance(question, Question) else "not a question"
        raise QueryError(
            exception_type="UnsupportedQuestionForm",
            details=text,
            message=f"Unsupported question: {reason}. Ask 'What is X?', 'How many elements does X have?', "
            "'Is X an element of T?' or 'Is X a <noun>?'.",
        )
    log.debug(msg=f"Question '{text}' reads as {question.form}.")
    return question


def answer(question: Question, facts: FactBase, lexicon: Optional[ace_language.Lexicon] = None) -> Answer:
    """
    Answers a question from the fact base with one checked ACE sentence.

    Parameters:
        question (Question): a parsed question.
        facts (FactBase): fact base of the model.
        lexicon (Optional[Lexicon], optional): lexicon used to check the answer. Defaults to lexicon_for(facts).

    Returns:
        Answer: "It is a data-type.", "It has N elements.", "Yes, it is." or "No, it is not." and the like.

    Raises:
        QueryError: UnknownEntity when the asked-about name has no facts,
            UnsupportedQuestionForm for forms that cannot be answered.
    """
    form = question.form
    match form:
        case WhatIs(name=name):
            result = answers.what_is(name=name, facts=facts)
        case HowManyElements(type_name=type_name):
            result = answers.how_many_elements(type_name=type_name, facts=facts)
        case IsElementOf(member=member, type_name=type_name):
            result = answers.is_element_of(member=member, type_name=type_name, facts=facts)
        case IsA(name=name, kind=kind):
            result = answers.is_a(name=name, kind=kind, facts=facts)
        case _:
            raise QueryError(
                exception_type="UnsupportedQuestionForm",
                details=repr(form),
                message="The question form cannot be answered.",
            )

    lexicon = lexicon if lexicon is not None else lexicon_for(facts=facts)
    report = ace_language.check_sentence(tokens=ace_language.tokenize(text=result.text, lexicon=lexicon))
    if not report.ok:
        raise QueryError(
            exception_type="ValidationInternalError",
            details=result.text,
            message=f"Answer fails its own check: {report.diagnostics[0].rule}.",
            status_code=2,
        )
    log.info(msg=f"Answered {form} with '{result.text}'.")
    return result


def ask(text: str, facts: FactBase, lexicon: Optional[ace_language.Lexicon] = None) -> Answer:
    """parse_question followed by answer, with the fact base's names registered."""
    session = lexicon_for(facts=facts, lexicon=lexicon)
    return answer(question=parse_question(text=text, lexicon=session), facts=facts, lexicon=session)
