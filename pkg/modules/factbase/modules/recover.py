"""Rebuilds facts from the readings of parsed sentences."""
import logging
from collections.abc import Iterable, Iterator
from typing import Optional

from modules.ace_language.modules.readings import (
    ActionDecl,
    AutomatonDecl,
    ComponentDecl,
    ConnectsDecl,
    ConsistsOf,
    ConstantDecl,
    DatatypeDecl,
    EqualsValue,
    InitialDecl,
    PortDecl,
    Sentence,
    StateList,
    SubcomponentList,
    TransitionDecl,
    TriggerDecl,
)

from .facts import (
    Connects,
    ElementOf,
    Fact,
    HasElementCount,
    HasPort,
    HasState,
    HasTransition,
    HasValue,
    IsAutomaton,
    IsComponent,
    IsConstant,
    IsDatatype,
    IsInitialState,
    Subcomponent,
)


log = logging.getLogger(name="log." + __name__)


class _OpenTransition:
    """Transition whose trigger and action sentences may still follow."""

    def __init__(self, declaration: TransitionDecl) -> None:
        self.declaration = declaration
        self.guard: Optional[str] = None
        self.action: Optional[str] = None

    def fact(self) -> HasTransition:
        return HasTransition(
            automaton=self.declaration.automaton,
            source=self.declaration.source,
            target=self.declaration.target,
            guard=self.guard,
            action=self.action,
        )


def main(sentences: Iterable[Sentence]) -> Iterator[Fact]:
    """
    Yields the facts stated by a sequence of sentences. A transition's fact is emitted once the
    sentences that may attach a guard or an action to it have been read.

    Parameters:
        sentences (Iterable[Sentence]): sentences in document order.

    Returns:
        Iterator[Fact]: recovered facts. Questions and short answers state nothing.
    """
    open_transition: Optional[_OpenTransition] = None

    for sentence in sentences:
        reading = sentence.reading

        if open_transition is not None:
            if isinstance(reading, TriggerDecl) and reading.transition == open_transition.declaration:
                open_transition.guard = reading.guard
                continue
            if isinstance(reading, ActionDecl) and reading.transition == open_transition.declaration:
                open_transition.action = reading.action
                continue
            yield open_transition.fact()
            open_transition = None

        match reading:
            case DatatypeDecl(type=name):
                yield IsDatatype(type=name)
            case ConsistsOf(type=name, count=count, members=members):
                yield HasElementCount(type=name, n=count)
                for member in members:
                    yield ElementOf(member=member, type=name)
            case ConstantDecl(name=name):
                yield IsConstant(name=name)
            case EqualsValue(name=name, v=value):
                yield HasValue(name=name, v=value)
            case ComponentDecl(name=name):
                yield IsComponent(name=name)
            case SubcomponentList(component=parent, children=children):
                for child in children:
                    yield Subcomponent(parent=parent, child=child)
            case PortDecl():
                yield HasPort(
                    component=reading.component,
                    port=reading.port,
                    direction=reading.direction,
                    type_name=reading.type_name,
                )
            case ConnectsDecl():
                yield Connects(
                    channel=reading.channel,
                    source_component=reading.source_component,
                    source_port=reading.source_port,
                    target_component=reading.target_component,
                    target_port=reading.target_port,
                )
            case AutomatonDecl(automaton=name, owner=owner):
                yield IsAutomaton(automaton=name, owner_component=owner)
            case StateList(automaton=name, states=states):
                for state in states:
                    yield HasState(automaton=name, state=state)
            case InitialDecl(automaton=name, state=state):
                yield IsInitialState(automaton=name, state=state)
            case TransitionDecl():
                open_transition = _OpenTransition(declaration=reading)
            case TriggerDecl() | ActionDecl():
                log.warning(msg=f"'{sentence.text}' does not follow the transition it refers to; ignored.")
            case _:
                pass

    if open_transition is not None:
        yield open_transition.fact()
