"""Looks up the facts behind each question form and words the answer."""
import logging
from dataclasses import dataclass
from typing import Optional

from modules.af3_model.modules.model_types import BUILTIN_TYPES
from modules.factbase.modules.facts import (
    Connects,
    ElementOf,
    FactBase,
    HasElementCount,
    HasPort,
    HasState,
    HasTransition,
    IsAutomaton,
    IsComponent,
    IsConstant,
    IsDatatype,
)

from .custom_error import QueryError


log = logging.getLogger(name="log." + __name__)

YES = "Yes, it is."
NO = "No, it is not."


@dataclass(frozen=True)
class Answer:
    """
    One-sentence answer.

    Attributes:
        text (str): the answer sentence.
        truth (Optional[bool]): truth value of yes/no-questions.
        count (Optional[int]): number asked for by how-many-questions.
    """

    text: str
    truth: Optional[bool] = None
    count: Optional[int] = None


def _unknown(name: str) -> QueryError:
    return QueryError(
        exception_type="UnknownEntity",
        details=repr(name),
        message=f"The fact base knows nothing about '{name}'.",
    )


def is_known(name: str, facts: FactBase) -> bool:
    return bool(facts.about(name=name)) or name in BUILTIN_TYPES


def kind_of(name: str, facts: FactBase) -> Optional[str]:
    """
    Answer sentence describing what name is, e.g. "It is a data-type." or "It is a port of Controller.".
    The first matching kind wins: datatype, constant, component, state-automaton, channel, element, port,
    state, guard, action.
    """
    if IsDatatype(type=name) in facts or name in BUILTIN_TYPES:
        return "It is a data-type."
    if IsConstant(name=name) in facts:
        return "It is a constant."
    if IsComponent(name=name) in facts:
        return "It is a component."

    about = facts.about(name=name)
    for fact in about:
        if isinstance(fact, IsAutomaton) and fact.automaton == name:
            return "It is a state-automaton."
    for fact in about:
        if isinstance(fact, Connects) and fact.channel == name:
            return "It is a channel."
    for fact in about:
        if isinstance(fact, ElementOf) and fact.member == name:
            return f"It is an element of {fact.type}."
    for fact in about:
        if isinstance(fact, HasPort) and fact.port == name:
            return f"It is a port of {fact.component}."
    for fact in about:
        if isinstance(fact, HasState) and fact.state == name:
            return f"It is a state of {fact.automaton}."
    for fact in about:
        if isinstance(fact, HasTransition) and fact.guard == name:
            return "It is a guard."
    for fact in about:
        if isinstance(fact, HasTransition) and fact.action == name:
            return "It is an action."
    return None


def what_is(name: str, facts: FactBase) -> Answer:
    text = kind_of(name=name, facts=facts)
    if text is None:
        raise _unknown(name=name)
    return Answer(text=text)


def how_many_elements(type_name: str, facts: FactBase) -> Answer:
    counts = [fact.n for fact in facts.about(name=type_name) if isinstance(fact, HasElementCount)]
    if not counts:
        raise QueryError(
            exception_type="UnknownEntity",
            details=repr(type_name),
            message=f"'{type_name}' is not an enumeration data type of the model.",
        )
    count = counts[0]
    noun = "element" if count == 1 else "elements"
    return Answer(text=f"It has {count} {noun}.", count=count)


def _yes_no(truth: bool) -> Answer:
    return Answer(text=YES if truth else NO, truth=truth)


def is_element_of(member: str, type_name: str, facts: FactBase) -> Answer:
    if not is_known(name=type_name, facts=facts):
        raise _unknown(name=type_name)
    return _yes_no(truth=ElementOf(member=member, type=type_name) in facts)


def _has_role(name: str, facts: FactBase, fact_type: type, field: str) -> bool:
    return any(
        isinstance(fact, fact_type) and getattr(fact, field) == name for fact in facts.about(name=name)
    )


def is_a(name: str, kind: str, facts: FactBase) -> Answer:
    """Yes/no answer to `Is X a <noun>?`; kind is the canonical lexeme of the noun."""
    if not is_known(name=name, facts=facts):
        raise _unknown(name=name)

    checks = {
        "DATATYPE": lambda: IsDatatype(type=name) in facts or name in BUILTIN_TYPES,
        "TYPE": lambda: IsDatatype(type=name) in facts or name in BUILTIN_TYPES,
        "CONSTANT": lambda: IsConstant(name=name) in facts,
        "COMPONENT": lambda: IsComponent(name=name) in facts,
        "STATE_AUTOMATON": lambda: _has_role(name=name, facts=facts, fact_type=IsAutomaton, field="automaton"),
        "CHANNEL": lambda: _has_role(name=name, facts=facts, fact_type=Connects, field="channel"),
        "ELEMENT": lambda: _has_role(name=name, facts=facts, fact_type=ElementOf, field="member"),
        "PORT": lambda: _has_role(name=name, facts=facts, fact_type=HasPort, field="port"),
        "STATE": lambda: _has_role(name=name, facts=facts, fact_type=HasState, field="state"),
        "GUARD": lambda: _has_role(name=name, facts=facts, fact_type=HasTransition, field="guard"),
        "ACTION": lambda: _has_role(name=name, facts=facts, fact_type=HasTransition, field="action"),
    }
    check = checks.get(kind)
    truth = bool(check()) if check is not None else False
    log.debug(msg=f"Is {name} a {kind}? {truth}")
    return _yes_no(truth=truth)
