"""Reads the three AutoFocus3 section kinds (data dictionary, component architecture, state automata)."""
import logging

from lxml import etree

from .custom_error import ModelError
from .model_types import (
    Channel,
    Component,
    ConstantFunction,
    DataDictionary,
    Direction,
    Endpoint,
    EnumerationType,
    Port,
    StateAutomaton,
    Transition,
)
from .read_xml import (
    local_name,
    location,
    raw_type,
    require_attribute,
    require_identifier,
    type_kind,
)


log = logging.getLogger(name="log." + __name__)

DATA_DICTIONARY = "DataDictionary"
COMPONENT_ARCHITECTURE = "ComponentArchitecture"
STATE_AUTOMATON = "StateAutomaton"
SECTION_KINDS = (DATA_DICTIONARY, COMPONENT_ARCHITECTURE, STATE_AUTOMATON)


class SectionReader:
    """
    Reads known sections and decides what happens to elements it does not know.

    Parameters:
        strict (bool): if True, unknown elements inside known sections raise UnknownElement;
            otherwise they are skipped with a logged warning.

    Attributes:
        ignored (list[str]): descriptions of skipped elements, in document order.
    """

    def __init__(self, strict: bool = False) -> None:
        self.strict = strict
        self.ignored: list[str] = []

    def ignore(self, element: etree._Element, section: str) -> None:
        description = f"<{local_name(element=element)}> at {location(element=element)}"
        if self.strict:
            raise ModelError(
                exception_type="UnknownElement",
                details=location(element=element),
                message=f"Unknown element <{local_name(element=element)}> inside {section}.",
            )
        log.warning(msg=f"Ignoring {description} inside {section}.")
        self.ignored.append(description)

    # data dictionary

    def read_enumeration(self, element: etree._Element) -> EnumerationType:
        name = require_identifier(element=element)
        members: list[str] = []
        for child in element:
            if not isinstance(child.tag, str):
                continue
            if local_name(element=child) == "members":
                members.append(require_identifier(element=child))
            else:
                self.ignore(element=child, section=f"enumeration {name}")

        if not members:
            raise ModelError(
                exception_type="EmptyEnumeration",
                details=location(element=element),
                message=f"Enumeration {name} has no members.",
            )
        return EnumerationType(name=name, members=tuple(members))

    def read_constant(self, element: etree._Element) -> ConstantFunction:
        """
        Reads one <functions> block: the name sits on <function>, the value on
        definition/statements(Return)/value(IntConst), the type on <returnType>.

        Raises:
            ModelError: MissingAttribute, UnknownSectionType (non-integer constants), InvalidAttribute.
        """
        function = None
        value_element = None
        for child in element:
            if not isinstance(child.tag, str):
                continue
            tag = local_name(element=child)
            if tag == "function":
                function = child
            elif tag == "definition":
                value_element = self._read_definition(definition=child)
            elif tag == "returnType":
                if type_kind(element=child) != "TInt":
                    raise ModelError(
                        exception_type="UnknownSectionType",
                        details=f"{raw_type(element=child)} at {location(element=child)}",
                        message="Only integer constants (TInt) are supported.",
                    )
            else:
                self.ignore(element=child, section="functions")

        if function is None:
            raise ModelError(
                exception_type="MissingAttribute",
                details=location(element=element),
                message="<functions> lacks a <function> element carrying 'name'.",
            )
        name = require_identifier(element=function)

        if value_element is None:
            raise ModelError(
                exception_type="MissingAttribute",
                details=location(element=element),
                message=f"Constant {name} lacks a 'value'.",
            )
        raw_value = require_attribute(element=value_element, attribute="value")
        try:
            value = int(raw_value)
        except ValueError as exc:
            raise ModelError(
                exception_type="InvalidAttribute",
                details=location(element=value_element),
                message=f"Constant {name} has non-integer value '{raw_value}'.",
            ) from exc

        return ConstantFunction(name=name, value=value)

    def _read_definition(self, definition: etree._Element) -> etree._Element | None:
        for statement in definition:
            if not isinstance(statement.tag, str):
                continue
            if local_name(element=statement) != "statements" or type_kind(element=statement) != "Return":
                self.ignore(element=statement, section="definition")
                continue
            for value in statement:
                if not isinstance(value.tag, str):
                    continue
                if local_name(element=value) != "value":
                    self.ignore(element=value, section="statements")
                    continue
                if type_kind(element=value) != "IntConst":
                    raise ModelError(
                        exception_type="UnknownSectionType",
                        details=f"{raw_type(element=value)} at {location(element=value)}",
                        message="Only integer constants (IntConst) are supported.",
                    )
                return value
        return None

    def read_data_dictionary(self, section: etree._Element) -> DataDictionary:
        log.debug(msg="Reading data dictionary.")
        enumerations: list[EnumerationType] = []
        constants: list[ConstantFunction] = []

        for child in section:
            if not isinstance(child.tag, str):
                continue
            tag = local_name(element=child)
            if tag == "typeDefinitions":
                if type_kind(element=child) != "Enumeration":
                    raise ModelError(
                        exception_type="UnknownSectionType",
                        details=f"{raw_type(element=child)} at {location(element=child)}",
                        message="Only Enumeration type definitions are supported.",
                    )
                enumerations.append(self.read_enumeration(element=child))
            elif tag == "functions":
                constants.append(self.read_constant(element=child))
            else:
                self.ignore(element=child, section="data dictionary")

        log.debug(
            msg=f"Data dictionary read: {len(enumerations)} enumerations, {len(constants)} constants."
        )
        return DataDictionary(enumerations=tuple(enumerations), constants=tuple(constants))

    # architecture

    def read_port(self, element: etree._Element) -> Port:
        name = require_identifier(element=element)
        raw_direction = require_attribute(element=element, attribute="direction")
        try:
            direction = Direction(raw_direction)
        except ValueError as exc:
            raise ModelError(
                exception_type="InvalidAttribute",
                details=location(element=element),
                message=f"Port {name} has direction '{raw_direction}', expected input or output.",
            ) from exc
        type_name = require_identifier(element=element, attribute="type")
        return Port(name=name, direction=direction, type_name=type_name)

    def read_channel(self, element: etree._Element) -> Channel:
        return Channel(
            name=require_identifier(element=element),
            source=Endpoint(
                component=require_identifier(element=element, attribute="sourceComponent"),
                port=require_identifier(element=element, attribute="sourcePort"),
            ),
            target=Endpoint(
                component=require_identifier(element=element, attribute="targetComponent"),
                port=require_identifier(element=element, attribute="targetPort"),
            ),
        )

    def read_component(
        self, element: etree._Element, automata: list[StateAutomaton]
    ) -> Component:
        """
        Reads a component and, recursively, its subcomponents. State automata found in its
        <containedElements> are appended to automata with this component as owner.
        """
        name = require_identifier(element=element)
        ports: list[Port] = []
        subcomponents: list[Component] = []
        channels: list[Channel] = []

        for child in element:
            if not isinstance(child.tag, str):
                continue
            tag = local_name(element=child)
            if tag == "ports":
                ports.append(self.read_port(element=child))
            elif tag == "component":
                subcomponents.append(self.read_component(element=child, automata=automata))
            elif tag == "channels":
                channels.append(self.read_channel(element=child))
            elif tag == "containedElements":
                check_section_kind(element=child, allowed=(STATE_AUTOMATON,))
                automata.append(self.read_automaton(element=child, owner=name))
            else:
                self.ignore(element=child, section=f"component {name}")

        return Component(
            name=name,
            ports=tuple(ports),
            subcomponents=tuple(subcomponents),
            channels=tuple(channels),
        )

    def read_architecture(
        self, section: etree._Element, automata: list[StateAutomaton]
    ) -> Component:
        log.debug(msg="Reading component architecture.")
        roots: list[etree._Element] = []
        for child in section:
            if not isinstance(child.tag, str):
                continue
            if local_name(element=child) == "component":
                roots.append(child)
            else:
                self.ignore(element=child, section="component architecture")

        if len(roots) != 1:
            raise ModelError(
                exception_type="InvalidSection",
                details=location(element=section),
                message=f"Component architecture must hold exactly one root component, found {len(roots)}.",
            )
        root = self.read_component(element=roots[0], automata=automata)
        log.debug(msg=f"Component architecture read, root component {root.name}.")
        return root

    # automata

    def read_automaton(self, element: etree._Element, owner: str | None = None) -> StateAutomaton:
        name = require_identifier(element=element)
        if owner is None:
            owner = require_identifier(element=element, attribute="owner")
        initial_state = require_identifier(element=element, attribute="initialState")

        states: list[str] = []
        transitions: list[Transition] = []
        for child in element:
            if not isinstance(child.tag, str):
                continue
            tag = local_name(element=child)
            if tag == "states":
                states.append(require_identifier(element=child))
            elif tag == "transitions":
                transitions.append(
                    Transition(
                        source=require_identifier(element=child, attribute="source"),
                        target=require_identifier(element=child, attribute="target"),
                        guard=_optional_text(element=child, attribute="guard"),
                        action=_optional_text(element=child, attribute="action"),
                    )
                )
            else:
                self.ignore(element=child, section=f"state automaton {name}")

        if not states:
            raise ModelError(
                exception_type="EmptyAutomaton",
                details=location(element=element),
                message=f"State automaton {name} has no states.",
            )
        return StateAutomaton(
            name=name,
            owner=owner,
            states=tuple(states),
            initial_state=initial_state,
            transitions=tuple(transitions),
        )


def _optional_text(element: etree._Element, attribute: str) -> str | None:
    value = element.get(attribute)
    if value is None or not value.strip():
        return None
    return value.strip()


def check_section_kind(element: etree._Element, allowed: tuple[str, ...] = SECTION_KINDS) -> str:
    """
    Returns the section kind of a rootElements/containedElements element.

    Raises:
        ModelError: UnknownSectionType, reported with the offending xsi:type string.
    """
    kind = type_kind(element=element)
    if kind not in allowed:
        raise ModelError(
            exception_type="UnknownSectionType",
            details=f"{raw_type(element=element) or '(no xsi:type)'} at {location(element=element)}",
            message=f"Section type is not one of {', '.join(allowed)}.",
        )
    return kind
