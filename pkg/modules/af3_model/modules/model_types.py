"""Typed, immutable in-memory representation of an AutoFocus3 model."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional


BUILTIN_TYPES: frozenset[str] = frozenset({"integer", "boolean"})


class Direction(str, Enum):
    """Port direction."""

    INPUT = "input"
    OUTPUT = "output"


@dataclass(frozen=True)
class EnumerationType:
    """Enumeration data type with its members in model order."""

    name: str
    members: tuple[str, ...]


@dataclass(frozen=True)
class ConstantFunction:
    """Zero-argument function returning a constant integer."""

    name: str
    value: int
    return_type: str = "integer"


@dataclass(frozen=True)
class DataDictionary:
    enumerations: tuple[EnumerationType, ...] = ()
    constants: tuple[ConstantFunction, ...] = ()


@dataclass(frozen=True)
class Port:
    name: str
    direction: Direction
    type_name: str


@dataclass(frozen=True)
class Endpoint:
    """A (component name, port name) pair."""

    component: str
    port: str


@dataclass(frozen=True)
class Channel:
    name: str
    source: Endpoint
    target: Endpoint


@dataclass(frozen=True)
class Component:
    name: str
    ports: tuple[Port, ...] = ()
    subcomponents: tuple["Component", ...] = ()
    channels: tuple[Channel, ...] = ()

    def walk(self) -> tuple["Component", ...]:
        """Returns this component and all nested subcomponents, depth-first pre-order."""
        found: list[Component] = [self]
        for child in self.subcomponents:
            found.extend(child.walk())
        return tuple(found)


@dataclass(frozen=True)
class Transition:
    source: str
    target: str
    guard: Optional[str] = None
    action: Optional[str] = None


@dataclass(frozen=True)
class StateAutomaton:
    name: str
    owner: str
    states: tuple[str, ...]
    initial_state: str
    transitions: tuple[Transition, ...] = ()


@dataclass(frozen=True)
class Model:
    """
    Parsed representation of one AutoFocus3-style XML file.

    Attributes:
        name (str): model name (root element's name attribute, or the file stem).
        data_dictionary (Optional[DataDictionary]): types and constants, if the section is present.
        architecture (Optional[Component]): the root component, if the section is present.
        automata (tuple[StateAutomaton, ...]): state automata in document order.
    """

    name: str
    data_dictionary: Optional[DataDictionary] = None
    architecture: Optional[Component] = None
    automata: tuple[StateAutomaton, ...] = field(default=())

    def components(self) -> tuple[Component, ...]:
        """All components of the architecture, depth-first; empty when there is no architecture."""
        if self.architecture is None:
            return ()
        return self.architecture.walk()
