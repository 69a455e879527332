"""Atomic semantic facts and the ordered, indexed FactBase that holds them."""

from collections.abc import Iterable
from dataclasses import astuple, dataclass
from types import MappingProxyType
from typing import Optional, TypeVar


@dataclass(frozen=True)
class Fact:
    """Base class of all facts. Facts are first-order: every argument is a name, a number or None."""

    def arguments(self) -> tuple:
        return astuple(self)

    def render(self) -> str:
        """Stable textual form `FactName(arg1, arg2, ...)`."""
        rendered = ", ".join(str(object=argument) for argument in self.arguments())
        return f"{type(self).__name__}({rendered})"

    def names(self) -> tuple[str, ...]:
        """Entity names mentioned by this fact (string arguments)."""
        return tuple(argument for argument in self.arguments() if isinstance(argument, str))


@dataclass(frozen=True)
class IsDatatype(Fact):
    type: str


@dataclass(frozen=True)
class HasElementCount(Fact):
    type: str
    n: int


@dataclass(frozen=True)
class ElementOf(Fact):
    member: str
    type: str


@dataclass(frozen=True)
class IsConstant(Fact):
    name: str


@dataclass(frozen=True)
class HasValue(Fact):
    name: str
    v: int


@dataclass(frozen=True)
class IsComponent(Fact):
    name: str


@dataclass(frozen=True)
class Subcomponent(Fact):
    parent: str
    child: str


@dataclass(frozen=True)
class HasPort(Fact):
    component: str
    port: str
    direction: str
    type_name: str


@dataclass(frozen=True)
class Connects(Fact):
    channel: str
    source_component: str
    source_port: str
    target_component: str
    target_port: str


@dataclass(frozen=True)
class IsAutomaton(Fact):
    automaton: str
    owner_component: str


@dataclass(frozen=True)
class HasState(Fact):
    automaton: str
    state: str


@dataclass(frozen=True)
class IsInitialState(Fact):
    automaton: str
    state: str


@dataclass(frozen=True)
class HasTransition(Fact):
    """Guard and action are kept in their blank-free token form, None when absent."""

    automaton: str
    source: str
    target: str
    guard: Optional[str] = None
    action: Optional[str] = None


FACT_TYPES: tuple[type[Fact], ...] = (
    IsDatatype,
    HasElementCount,
    ElementOf,
    IsConstant,
    HasValue,
    IsComponent,
    Subcomponent,
    HasPort,
    Connects,
    IsAutomaton,
    HasState,
    IsInitialState,
    HasTransition,
)

F = TypeVar("F", bound=Fact)


class FactBase:
    """
    Ordered, duplicate-free, immutable collection of facts with a name index.

    Parameters:
        facts (Iterable[Fact]): facts in insertion order; later duplicates are dropped.

    Attributes:
        facts (tuple[Fact, ...]): facts in deterministic insertion order.
        index (Mapping[str, tuple[Fact, ...]]): entity name -> facts mentioning it, in order.
    """

    __slots__ = ("facts", "index", "_members")

    def __init__(self, facts: Iterable[Fact] = ()) -> None:
        ordered: dict[Fact, None] = dict.fromkeys(facts)
        index: dict[str, list[Fact]] = {}
        for fact in ordered:
            for name in dict.fromkeys(fact.names()):
                index.setdefault(name, []).append(fact)

        object.__setattr__(self, "facts", tuple(ordered))
        object.__setattr__(self, "_members", frozenset(ordered))
        object.__setattr__(
            self,
            "index",
            MappingProxyType({name: tuple(found) for name, found in index.items()}),
        )

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FactBase is immutable.")

    def __len__(self) -> int:
        return len(self.facts)

    def __iter__(self):
        return iter(self.facts)

    def __contains__(self, fact: object) -> bool:
        return fact in self._members

    def __repr__(self) -> str:
        return f"FactBase({len(self.facts)} facts)"

    def as_set(self) -> frozenset[Fact]:
        return self._members

    def about(self, name: str) -> tuple[Fact, ...]:
        """Facts mentioning name; empty when the name is unknown."""
        return self.index.get(name, ())

    def of_type(self, fact_type: type[F]) -> tuple[F, ...]:
        return tuple(fact for fact in self.facts if isinstance(fact, fact_type))

    def render(self) -> list[str]:
        """One `FactName(arg1, ...)` line per fact, in insertion order."""
        return [fact.render() for fact in self.facts]

