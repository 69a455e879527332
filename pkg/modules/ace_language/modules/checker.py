"""Construction-rule checker: a recursive-descent recognizer for the ACE subset."""
import logging
from dataclasses import dataclass, field
from typing import Optional

from .lexicon import Category, FunctionRole
from .syntax import (
    Clause,
    HowQuestion,
    NounPhrase,
    NounPhraseKind,
    ParseTree,
    PrepPhrase,
    RelativeClause,
    ShortAnswer,
    VerbPhrase,
    WhQuestion,
    YesNoQuestion,
)
from .tokens import Token, TokenKind


log = logging.getLogger(name="log." + __name__)

RULE_TERMINATOR = "sentence must end with exactly one terminator"
RULE_DECLARATIVE_SUBJECT = "declarative must begin with noun phrase"
RULE_VERB_PHRASE = "noun phrase must be followed by a verb phrase"
RULE_COMPLEMENT = "copula must be followed by a noun phrase, adjective or participle"
RULE_NOUN = "determiner must be followed by a noun"
RULE_NOUN_PHRASE = "noun phrase expected"
RULE_COORDINATION = "coordinator must join two noun phrases"
RULE_RELATIVE = "relative pronoun must be followed by a form of be"
RULE_TRAILING = "unexpected words before the terminator"
RULE_QUESTION = "question must begin with a query word or a form of be"
RULE_HOW_QUESTION = "how-question must read: how many|much <noun> does <noun phrase> <verb>"
RULE_SHORT_ANSWER = "short answer must read: Yes, it is. | No, it is not."


@dataclass(frozen=True)
class Diagnostic:
    position: int
    rule: str
    message: str
    line: Optional[int] = None

    def render(self) -> str:
        where = f"line {self.line}, " if self.line is not None else ""
        return f"{where}position {self.position}: {self.rule}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    diagnostics: tuple[Diagnostic, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.diagnostics


class _Violation(Exception):
    def __init__(self, token: Optional[Token], rule: str, message: str) -> None:
        super().__init__(message)
        self.position = token.position if token is not None else 0
        self.rule = rule
        self.message = message


class _Cursor:
    """Reads the tokens of one sentence, terminator excluded."""

    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.index = 0

    def peek(self, offset: int = 0) -> Optional[Token]:
        index = self.index + offset
        return self.tokens[index] if index < len(self.tokens) else None

    def next(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def at_end(self) -> bool:
        return self.index >= len(self.tokens)

    def last(self) -> Optional[Token]:
        return self.tokens[-1] if self.tokens else None

    def fail(self, rule: str, message: str) -> _Violation:
        return _Violation(token=self.peek() or self.last(), rule=rule, message=message)


def _starts_noun_phrase(token: Optional[Token], bare_noun: bool = False) -> bool:
    if token is None:
        return False
    if token.kind in (TokenKind.PROPER_NAME, TokenKind.NUMBER):
        return True
    if token.is_function("it", role=FunctionRole.PRONOUN):
        return True
    if token.is_function(role=FunctionRole.DETERMINER) or token.is_function(role=FunctionRole.QUANTIFIER):
        return True
    return bare_noun and token.is_content(Category.NOUN)


def _is_coordinator(token: Optional[Token]) -> bool:
    return token is not None and token.is_function(role=FunctionRole.COORDINATOR)


def _modifiers(cursor: _Cursor) -> tuple[PrepPhrase, ...]:
    found: list[PrepPhrase] = []
    while (token := cursor.peek()) is not None and token.is_content(Category.PREPOSITION):
        preposition = cursor.next()
        if not _starts_noun_phrase(cursor.peek(), bare_noun=True):
            raise cursor.fail(
                rule=RULE_NOUN_PHRASE,
                message=f"preposition '{preposition.surface}' must be followed by a noun phrase",
            )
        found.append(PrepPhrase(preposition=preposition, object=noun_phrase(cursor=cursor, bare_noun=True)))
    return tuple(found)


def _common_noun_phrase(cursor: _Cursor, determiner: Optional[Token]) -> NounPhrase:
    adjectives: list[Token] = []
    while (token := cursor.peek()) is not None and token.is_content(Category.ADJECTIVE):
        adjectives.append(cursor.next())

    head = cursor.peek()
    if head is None or not head.is_content(Category.NOUN):
        raise cursor.fail(
            rule=RULE_NOUN,
            message=f"expected a noun after '{(determiner or cursor.last()).surface}'",  # type: ignore[union-attr]
        )
    cursor.next()

    apposition = None
    if (token := cursor.peek()) is not None and token.kind in (TokenKind.PROPER_NAME, TokenKind.NUMBER):
        apposition = cursor.next()

    modifiers = _modifiers(cursor=cursor)

    relative = None
    if (token := cursor.peek()) is not None and token.is_function("that", role=FunctionRole.PRONOUN):
        pronoun = cursor.next()
        verb = cursor.peek()
        if verb is None or not verb.is_function(role=FunctionRole.BE):
            raise cursor.fail(rule=RULE_RELATIVE, message="expected 'is' or 'are' after 'that'")
        cursor.next()
        if not _starts_noun_phrase(cursor.peek()):
            raise cursor.fail(rule=RULE_NOUN_PHRASE, message="relative clause needs a complement")
        relative = RelativeClause(pronoun=pronoun, verb=verb, complement=noun_phrase(cursor=cursor))

    return NounPhrase(
        kind=NounPhraseKind.COMMON,
        token=head,
        determiner=determiner,
        adjectives=tuple(adjectives),
        apposition=apposition,
        modifiers=modifiers,
        relative=relative,
    )


def simple_noun_phrase(cursor: _Cursor, bare_noun: bool = False) -> NounPhrase:
    token = cursor.peek()
    if token is None:
        raise cursor.fail(rule=RULE_NOUN_PHRASE, message="sentence ends where a noun phrase is expected")

    if token.kind is TokenKind.PROPER_NAME:
        return NounPhrase(kind=NounPhraseKind.NAME, token=cursor.next())

    if token.kind is TokenKind.NUMBER:
        following = cursor.peek(offset=1)
        if following is not None and following.is_content(Category.NOUN):
            return _common_noun_phrase(cursor=cursor, determiner=cursor.next())
        return NounPhrase(kind=NounPhraseKind.NUMBER, token=cursor.next())

    if token.is_function("it", role=FunctionRole.PRONOUN):
        return NounPhrase(kind=NounPhraseKind.PRONOUN, token=cursor.next())

    if token.is_function(role=FunctionRole.DETERMINER) or token.is_function(role=FunctionRole.QUANTIFIER):
        return _common_noun_phrase(cursor=cursor, determiner=cursor.next())

    if bare_noun and token.is_content(Category.NOUN):
        return _common_noun_phrase(cursor=cursor, determiner=None)

    raise cursor.fail(
        rule=RULE_NOUN_PHRASE, message=f"'{token.surface}' cannot start a noun phrase"
    )


def noun_phrase(cursor: _Cursor, bare_noun: bool = False) -> NounPhrase:
    """Noun phrase with optional coordination: `A and B`, `A, B, and C`."""
    first = simple_noun_phrase(cursor=cursor, bare_noun=bare_noun)
    if not _is_coordinator(cursor.peek()):
        return first

    items = [first]
    coordinators: list[Token] = []
    while _is_coordinator(cursor.peek()):
        coordinator = cursor.next()
        coordinators.append(coordinator)
        if coordinator.lexeme == "," and _is_coordinator(cursor.peek()) and cursor.peek().lexeme != ",":  # type: ignore[union-attr]
            coordinators.append(cursor.next())
        if not _starts_noun_phrase(cursor.peek(), bare_noun=bare_noun):
            raise cursor.fail(
                rule=RULE_COORDINATION,
                message=f"'{coordinator.surface}' must be followed by a noun phrase",
            )
        items.append(simple_noun_phrase(cursor=cursor, bare_noun=bare_noun))

    return NounPhrase(
        kind=NounPhraseKind.COORDINATION, items=tuple(items), coordinators=tuple(coordinators)
    )


def verb_phrase(cursor: _Cursor) -> VerbPhrase:
    verb = cursor.peek()
    if verb is None:
        raise cursor.fail(rule=RULE_VERB_PHRASE, message="sentence ends after its subject")

    if verb.is_function(role=FunctionRole.BE):
        cursor.next()
        negation = None
        if (token := cursor.peek()) is not None and token.is_function("not", role=FunctionRole.NEGATION):
            negation = cursor.next()
        token = cursor.peek()
        if token is not None and token.is_content(Category.ADJECTIVE):
            adjective = cursor.next()
            return VerbPhrase(
                verb=verb, negation=negation, adjective=adjective, modifiers=_modifiers(cursor=cursor)
            )
        if token is not None and token.is_content(Category.VERB):
            participle = cursor.next()
            complement = noun_phrase(cursor=cursor) if _starts_noun_phrase(cursor.peek()) else None
            return VerbPhrase(
                verb=verb,
                negation=negation,
                participle=participle,
                complement=complement,
                modifiers=_modifiers(cursor=cursor),
            )
        if _starts_noun_phrase(token):
            return VerbPhrase(verb=verb, negation=negation, complement=noun_phrase(cursor=cursor))
        raise cursor.fail(rule=RULE_COMPLEMENT, message=f"'{verb.surface}' lacks a complement")

    if verb.is_content(Category.VERB):
        cursor.next()
        complement = noun_phrase(cursor=cursor) if _starts_noun_phrase(cursor.peek()) else None
        return VerbPhrase(verb=verb, complement=complement, modifiers=_modifiers(cursor=cursor))

    raise cursor.fail(
        rule=RULE_VERB_PHRASE, message=f"expected a verb or a form of be, found '{verb.surface}'"
    )


def _expect_end(cursor: _Cursor) -> None:
    if not cursor.at_end():
        raise cursor.fail(
            rule=RULE_TRAILING, message=f"'{cursor.peek().surface}' is not part of the sentence"  # type: ignore[union-attr]
        )


def _short_answer(cursor: _Cursor) -> ShortAnswer:
    particle = cursor.next()
    comma = cursor.peek()
    pronoun = cursor.peek(offset=1)
    verb = cursor.peek(offset=2)
    if (
        comma is None
        or comma.lexeme != ","
        or pronoun is None
        or not pronoun.is_function("it", role=FunctionRole.PRONOUN)
        or verb is None
        or not verb.is_function(role=FunctionRole.BE)
    ):
        raise cursor.fail(rule=RULE_SHORT_ANSWER, message=f"malformed answer after '{particle.surface}'")
    cursor.index += 3
    negated = False
    if (token := cursor.peek()) is not None and token.is_function("not", role=FunctionRole.NEGATION):
        cursor.next()
        negated = True
    if negated != (particle.lexeme == "no"):
        raise cursor.fail(rule=RULE_SHORT_ANSWER, message="answer polarity and negation disagree")
    _expect_end(cursor=cursor)
    return ShortAnswer(particle=particle, negated=negated)


def declarative(cursor: _Cursor) -> ParseTree:
    first = cursor.peek()
    if first is not None and (
        first.is_function("yes", role=FunctionRole.RESPONSE)
        or (first.is_function("no", role=FunctionRole.NEGATION) and cursor.peek(offset=1) is not None
            and cursor.peek(offset=1).lexeme == ",")  # type: ignore[union-attr]
    ):
        return _short_answer(cursor=cursor)

    frame = None
    if first is not None and first.kind is TokenKind.FIXED_PHRASE and first.lexeme == "it is true that":
        frame = cursor.next()
        first = cursor.peek()

    if first is not None and first.kind is TokenKind.FIXED_PHRASE and first.lexeme in ("there is", "there are"):
        cursor.next()
        if not _starts_noun_phrase(cursor.peek()):
            raise cursor.fail(rule=RULE_NOUN_PHRASE, message=f"'{first.surface}' must be followed by a noun phrase")
        existential = noun_phrase(cursor=cursor)
        _expect_end(cursor=cursor)
        return Clause(existential=existential, frame=frame)

    if not _starts_noun_phrase(first):
        raise cursor.fail(
            rule=RULE_DECLARATIVE_SUBJECT,
            message=f"'{first.surface if first else ''}' cannot start a declarative sentence",
        )
    subject = noun_phrase(cursor=cursor)
    predicate = verb_phrase(cursor=cursor)
    _expect_end(cursor=cursor)
    return Clause(subject=subject, verb_phrase=predicate, frame=frame)


def question(cursor: _Cursor) -> ParseTree:
    first = cursor.peek()
    if first is None:
        raise cursor.fail(rule=RULE_QUESTION, message="empty question")

    if first.is_function("how", role=FunctionRole.QUERY_WORD):
        cursor.next()
        quantity, noun, auxiliary = cursor.peek(), cursor.peek(offset=1), cursor.peek(offset=2)
        if (
            quantity is None
            or not quantity.is_function("many", "much", role=FunctionRole.QUANTIFIER)
            or noun is None
            or not noun.is_content(Category.NOUN)
            or auxiliary is None
            or not auxiliary.is_function("does", "do", role=FunctionRole.AUXILIARY)
        ):
            raise cursor.fail(rule=RULE_HOW_QUESTION, message="unsupported how-question")
        cursor.index += 3
        subject = noun_phrase(cursor=cursor)
        verb = cursor.peek()
        if verb is None or not verb.is_content(Category.VERB):
            raise cursor.fail(rule=RULE_HOW_QUESTION, message="how-question must end with a verb")
        cursor.next()
        _expect_end(cursor=cursor)
        return HowQuestion(quantity=quantity, noun=noun, subject=subject, verb=verb)

    if first.is_function(role=FunctionRole.QUERY_WORD):
        cursor.next()
        verb = cursor.peek()
        if verb is None or not verb.is_function(role=FunctionRole.BE):
            raise cursor.fail(rule=RULE_QUESTION, message=f"'{first.surface}' must be followed by a form of be")
        cursor.next()
        subject = noun_phrase(cursor=cursor)
        _expect_end(cursor=cursor)
        return WhQuestion(query_word=first, subject=subject)

    if first.is_function(role=FunctionRole.BE):
        cursor.next()
        subject = simple_noun_phrase(cursor=cursor)
        if not _starts_noun_phrase(cursor.peek()):
            raise cursor.fail(rule=RULE_NOUN_PHRASE, message="yes/no-question needs a predicate noun phrase")
        predicate = noun_phrase(cursor=cursor)
        _expect_end(cursor=cursor)
        return YesNoQuestion(subject=subject, predicate=predicate)

    raise cursor.fail(rule=RULE_QUESTION, message=f"'{first.surface}' cannot start a question")


def analyse(tokens: list[Token]) -> tuple[Optional[ParseTree], ValidationReport]:
    """
    Checks a sentence against the construction rules and builds its phrase-structure tree.

    Parameters:
        tokens (list[Token]): tokens of one sentence, ending with its terminator.

    Returns:
        tuple (Optional[ParseTree], ValidationReport): the tree (None when the check fails) and the report,
            whose single diagnostic names the first violated rule.
    """
    try:
        if not tokens or not tokens[-1].is_terminator():
            raise _Violation(
                token=tokens[-1] if tokens else None,
                rule=RULE_TERMINATOR,
                message="missing '.' or '?' at the end of the sentence",
            )
        for token in tokens[:-1]:
            if token.is_terminator():
                raise _Violation(token=token, rule=RULE_TERMINATOR, message="terminator inside the sentence")

        cursor = _Cursor(tokens=tokens[:-1])
        if tokens[-1].is_terminator("?"):
            tree = question(cursor=cursor)
        else:
            tree = declarative(cursor=cursor)

    except _Violation as violation:
        log.debug(msg=f"Sentence rejected: {violation.rule} at position {violation.position}.")
        diagnostic = Diagnostic(position=violation.position, rule=violation.rule, message=violation.message)
        return None, ValidationReport(diagnostics=(diagnostic,))

    return tree, ValidationReport()


def check_sentence(tokens: list[Token]) -> ValidationReport:
    """Returns the ValidationReport of one sentence; ok iff it matches the ACE-subset grammar."""
    _, report = analyse(tokens=tokens)
    return report
