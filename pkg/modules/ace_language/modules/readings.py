"""Readings: the single meaning assigned to each accepted sentence."""

from dataclasses import dataclass
from typing import Optional, Union

from .syntax import ParseTree
from .tokenizer import detokenize
from .tokens import Token


@dataclass(frozen=True)
class DatatypeDecl:
    type: str


@dataclass(frozen=True)
class ConsistsOf:
    type: str
    count: int
    members: tuple[str, ...]


@dataclass(frozen=True)
class ConstantDecl:
    name: str


@dataclass(frozen=True)
class EqualsValue:
    name: str
    v: int


@dataclass(frozen=True)
class ComponentDecl:
    name: str


@dataclass(frozen=True)
class SubcomponentList:
    component: str
    count: int
    children: tuple[str, ...]


@dataclass(frozen=True)
class PortDecl:
    component: str
    direction: str
    port: str
    type_name: str


@dataclass(frozen=True)
class ChannelDecl:
    name: str


@dataclass(frozen=True)
class ConnectsDecl:
    channel: str
    source_component: str
    source_port: str
    target_component: str
    target_port: str


@dataclass(frozen=True)
class AutomatonDecl:
    automaton: str
    owner: str


@dataclass(frozen=True)
class StateList:
    automaton: str
    count: int
    states: tuple[str, ...]


@dataclass(frozen=True)
class InitialDecl:
    automaton: str
    state: str


@dataclass(frozen=True)
class TransitionDecl:
    automaton: str
    source: str
    target: str


@dataclass(frozen=True)
class TriggerDecl:
    transition: TransitionDecl
    guard: str


@dataclass(frozen=True)
class ActionDecl:
    transition: TransitionDecl
    action: str


@dataclass(frozen=True)
class ShortAnswerReading:
    truth: bool


@dataclass(frozen=True)
class WhatIs:
    name: str


@dataclass(frozen=True)
class HowManyElements:
    type_name: str


@dataclass(frozen=True)
class IsElementOf:
    member: str
    type_name: str


@dataclass(frozen=True)
class IsA:
    """`kind` is the canonical lexeme of the noun, e.g. DATATYPE or COMPONENT."""

    name: str
    kind: str


@dataclass(frozen=True)
class UnsupportedQuestion:
    reason: str


QuestionForm = Union[WhatIs, HowManyElements, IsElementOf, IsA, UnsupportedQuestion]


@dataclass(frozen=True)
class Question:
    form: QuestionForm


Reading = Union[
    DatatypeDecl,
    ConsistsOf,
    ConstantDecl,
    EqualsValue,
    ComponentDecl,
    SubcomponentList,
    PortDecl,
    ChannelDecl,
    ConnectsDecl,
    AutomatonDecl,
    StateList,
    InitialDecl,
    TransitionDecl,
    TriggerDecl,
    ActionDecl,
    ShortAnswerReading,
    Question,
]


@dataclass(frozen=True)
class Sentence:
    """
    A checked and parsed sentence.

    Attributes:
        tokens (tuple[Token, ...]): tokens including the terminator.
        reading (Reading): the one meaning of the sentence.
        tree (Optional[ParseTree]): phrase-structure tree from the checker.
        line (Optional[int]): line number in the document it was read from.
    """

    tokens: tuple[Token, ...]
    reading: Reading
    tree: Optional[ParseTree] = None
    line: Optional[int] = None

    @property
    def text(self) -> str:
        return detokenize(tokens=list(self.tokens))
