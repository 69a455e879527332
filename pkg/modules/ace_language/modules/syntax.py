"""Phrase-structure trees built by the construction-rule checker."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .tokens import Token


class NounPhraseKind(str, Enum):
    NAME = "name"
    PRONOUN = "pronoun"
    NUMBER = "number"
    COMMON = "common"
    COORDINATION = "coordination"


@dataclass(frozen=True)
class PrepPhrase:
    preposition: Token
    object: "NounPhrase"


@dataclass(frozen=True)
class RelativeClause:
    pronoun: Token
    verb: Token
    complement: "NounPhrase"


@dataclass(frozen=True)
class NounPhrase:
    """
    A noun phrase. `token` is the name, pronoun or number for the simple kinds and the head noun
    for common noun phrases; `determiner` may be an article, a quantifier or a count.
    """

    kind: NounPhraseKind
    token: Optional[Token] = None
    determiner: Optional[Token] = None
    adjectives: tuple[Token, ...] = ()
    apposition: Optional[Token] = None
    modifiers: tuple[PrepPhrase, ...] = ()
    relative: Optional[RelativeClause] = None
    items: tuple["NounPhrase", ...] = ()
    coordinators: tuple[Token, ...] = ()

    def head_lexeme(self) -> Optional[str]:
        if self.kind is NounPhraseKind.COMMON and self.token is not None:
            return self.token.lexeme
        return None


@dataclass(frozen=True)
class VerbPhrase:
    """Either a copula (`be` + complement noun phrase, adjective or participle) or a content verb with an object."""

    verb: Token
    negation: Optional[Token] = None
    adjective: Optional[Token] = None
    participle: Optional[Token] = None
    complement: Optional[NounPhrase] = None
    modifiers: tuple[PrepPhrase, ...] = ()

    @property
    def is_copula(self) -> bool:
        return self.verb.lexeme in ("is", "are", "be")


@dataclass(frozen=True)
class Clause:
    """Declarative sentence: `subject verb_phrase` or an existential `there is` clause."""

    subject: Optional[NounPhrase] = None
    verb_phrase: Optional[VerbPhrase] = None
    existential: Optional[NounPhrase] = None
    frame: Optional[Token] = None


@dataclass(frozen=True)
class ShortAnswer:
    particle: Token
    negated: bool


@dataclass(frozen=True)
class WhQuestion:
    query_word: Token
    subject: NounPhrase


@dataclass(frozen=True)
class HowQuestion:
    quantity: Token
    noun: Token
    subject: NounPhrase
    verb: Token


@dataclass(frozen=True)
class YesNoQuestion:
    subject: NounPhrase
    predicate: NounPhrase


ParseTree = Union[Clause, ShortAnswer, WhQuestion, HowQuestion, YesNoQuestion]
