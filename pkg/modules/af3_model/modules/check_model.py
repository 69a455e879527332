"""Checks the Model invariants that cannot be enforced while reading single elements."""
import logging
from collections.abc import Iterable

from .custom_error import ModelError
from .model_types import BUILTIN_TYPES, Component, Direction, Endpoint, Model, StateAutomaton


log = logging.getLogger(name="log." + __name__)


def check_unique(names: Iterable[tuple[str, str]], scope: str) -> None:
    """
    Raises DuplicateName for the first name seen twice.

    Parameters:
        names (Iterable[tuple[str, str]]): (name, location description) pairs in model order.
        scope (str): where uniqueness is required, used in the message.

    Raises:
        ModelError: DuplicateName, reported with both locations.
    """
    seen: dict[str, str] = {}
    for name, where in names:
        if name in seen:
            raise ModelError(
                exception_type="DuplicateName",
                details=f"{seen[name]} and {where}",
                message=f"Name {name} is declared twice in {scope}.",
            )
        seen[name] = where


def check_declared_names(model: Model) -> None:
    """Types, constants, components, channels and automata share one namespace."""
    names: list[tuple[str, str]] = []
    if model.data_dictionary is not None:
        for position, enumeration in enumerate(model.data_dictionary.enumerations, start=1):
            names.append((enumeration.name, f"enumeration #{position}"))
        for position, constant in enumerate(model.data_dictionary.constants, start=1):
            names.append((constant.name, f"constant #{position}"))
    for component in model.components():
        names.append((component.name, f"component {component.name}"))
        for channel in component.channels:
            names.append((channel.name, f"channel of component {component.name}"))
    for position, automaton in enumerate(model.automata, start=1):
        names.append((automaton.name, f"state automaton #{position}"))
    check_unique(names=names, scope="the model")


def check_component(component: Component, type_names: frozenset[str]) -> None:
    check_unique(
        names=((port.name, f"port #{i} of {component.name}") for i, port in enumerate(component.ports, start=1)),
        scope=f"the ports of {component.name}",
    )
    for port in component.ports:
        if port.type_name not in type_names:
            raise ModelError(
                exception_type="UnknownPortType",
                details=f"port {port.name} of {component.name}",
                message=f"Port type {port.type_name} is neither a declared data type nor a built-in type.",
            )

    for channel in component.channels:
        for endpoint, role in ((channel.source, "source"), (channel.target, "target")):
            direction = _endpoint_direction(component=component, endpoint=endpoint)
            if direction is None:
                raise ModelError(
                    exception_type="UnknownEndpoint",
                    details=f"channel {channel.name} in {component.name}",
                    message=f"The {role} ({endpoint.component}, {endpoint.port}) is not a port of "
                    f"{component.name} or of one of its subcomponents.",
                )
            enclosing = endpoint.component == component.name
            # a source emits into the channel: subcomponent output or enclosing input
            expected = (
                (Direction.INPUT if enclosing else Direction.OUTPUT)
                if role == "source"
                else (Direction.OUTPUT if enclosing else Direction.INPUT)
            )
            if direction is not expected:
                raise ModelError(
                    exception_type="InvalidChannelDirection",
                    details=f"channel {channel.name} in {component.name}",
                    message=f"The {role} port {endpoint.port} of {endpoint.component} is an "
                    f"{direction.value} port, expected {expected.value}.",
                )


def _endpoint_direction(component: Component, endpoint: Endpoint) -> Direction | None:
    candidates = [component, *component.subcomponents]
    for candidate in candidates:
        if candidate.name != endpoint.component:
            continue
        for port in candidate.ports:
            if port.name == endpoint.port:
                return port.direction
    return None


def check_automaton(automaton: StateAutomaton, component_names: frozenset[str] | None) -> None:
    check_unique(
        names=((state, f"state #{i}") for i, state in enumerate(automaton.states, start=1)),
        scope=f"the states of {automaton.name}",
    )
    states = frozenset(automaton.states)
    if automaton.initial_state not in states:
        raise ModelError(
            exception_type="UnknownState",
            details=f"state automaton {automaton.name}",
            message=f"Initial state {automaton.initial_state} is not one of its states.",
        )
    for position, transition in enumerate(automaton.transitions, start=1):
        for state in (transition.source, transition.target):
            if state not in states:
                raise ModelError(
                    exception_type="UnknownState",
                    details=f"transition #{position} of {automaton.name}",
                    message=f"Transition endpoint {state} is not one of its states.",
                )
    if component_names is not None and automaton.owner not in component_names:
        raise ModelError(
            exception_type="UnknownOwner",
            details=f"state automaton {automaton.name}",
            message=f"Owner {automaton.owner} is not a component of the architecture.",
        )


def main(model: Model) -> Model:
    """
    Checks all Model invariants.

    Parameters:
        model (Model): freshly read model.

    Returns:
        model (Model): the same model, unchanged, once every invariant holds.

    Raises:
        ModelError: DuplicateName, UnknownPortType, UnknownEndpoint, InvalidChannelDirection,
            UnknownState or UnknownOwner for the first violated invariant.
    """
    log.debug(msg=f"Checking invariants of model {model.name}.")
    check_declared_names(model=model)

    type_names = set(BUILTIN_TYPES)
    if model.data_dictionary is not None:
        for enumeration in model.data_dictionary.enumerations:
            check_unique(
                names=((member, f"member #{i}") for i, member in enumerate(enumeration.members, start=1)),
                scope=f"the members of {enumeration.name}",
            )
            type_names.add(enumeration.name)

    for component in model.components():
        check_component(component=component, type_names=frozenset(type_names))

    component_names = (
        frozenset(component.name for component in model.components())
        if model.architecture is not None
        else None
    )
    for automaton in model.automata:
        check_automaton(automaton=automaton, component_names=component_names)

    log.debug(msg=f"Model {model.name} satisfies its invariants.")
    return model
