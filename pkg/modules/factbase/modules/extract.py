"""Reduces a Model to its atomic facts, in deterministic model order."""
import logging
import re
from collections.abc import Iterator
from typing import Optional

from modules.af3_model.modules.model_types import Component, DataDictionary, Model, StateAutomaton

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

_BLANKS = re.compile(r"\s+")


def blank_free(text: Optional[str]) -> Optional[str]:
    """Joins whitespace-separated parts of guard/action text with hyphens ("a == b" -> "a-==-b")."""
    if text is None:
        return None
    return _BLANKS.sub("-", text.strip())


def data_dictionary_facts(data_dictionary: DataDictionary) -> Iterator[Fact]:
    for enumeration in data_dictionary.enumerations:
        yield IsDatatype(type=enumeration.name)
        yield HasElementCount(type=enumeration.name, n=len(enumeration.members))
        for member in enumeration.members:
            yield ElementOf(member=member, type=enumeration.name)
    for constant in data_dictionary.constants:
        yield IsConstant(name=constant.name)
        yield HasValue(name=constant.name, v=constant.value)


def architecture_facts(root: Component) -> Iterator[Fact]:
    components = root.walk()
    for component in components:
        yield IsComponent(name=component.name)
        for child in component.subcomponents:
            yield Subcomponent(parent=component.name, child=child.name)
    for component in components:
        for port in component.ports:
            yield HasPort(
                component=component.name,
                port=port.name,
                direction=port.direction.value,
                type_name=port.type_name,
            )
    for component in components:
        for channel in component.channels:
            yield Connects(
                channel=channel.name,
                source_component=channel.source.component,
                source_port=channel.source.port,
                target_component=channel.target.component,
                target_port=channel.target.port,
            )


def automaton_facts(automaton: StateAutomaton) -> Iterator[Fact]:
    yield IsAutomaton(automaton=automaton.name, owner_component=automaton.owner)
    for state in automaton.states:
        yield HasState(automaton=automaton.name, state=state)
    yield IsInitialState(automaton=automaton.name, state=automaton.initial_state)
    for transition in automaton.transitions:
        yield HasTransition(
            automaton=automaton.name,
            source=transition.source,
            target=transition.target,
            guard=blank_free(text=transition.guard),
            action=blank_free(text=transition.action),
        )


def main(model: Model) -> Iterator[Fact]:
    """
    Yields the facts of a model: data dictionary, architecture, then automata, each in model order.

    Parameters:
        model (Model): a model satisfying all Model invariants.

    Returns:
        Iterator[Fact]: facts in deterministic order (duplicates are dropped by FactBase).
    """
    log.debug(msg=f"Extracting facts from model {model.name}.")
    if model.data_dictionary is not None:
        yield from data_dictionary_facts(data_dictionary=model.data_dictionary)
    if model.architecture is not None:
        yield from architecture_facts(root=model.architecture)
    for automaton in model.automata:
        yield from automaton_facts(automaton=automaton)
