"""Sentence templates and the lexicalization policies for model identifiers, guards and actions."""
import re
from collections.abc import Sequence
from typing import Optional

from modules.ace_language.modules.lexicon import Lexicon
from modules.af3_model.modules.model_types import (
    Channel,
    Component,
    ConstantFunction,
    EnumerationType,
    Port,
    StateAutomaton,
    Transition,
)
from modules.factbase.modules.extract import blank_free

from .custom_error import GenerationError


_IDENTIFIER = re.compile(r"[A-Za-z0-9_]+")
_GUARD = re.compile(r"[A-Za-z0-9_\-=<>!+*/()&|]+")
_LETTER = re.compile(r"[A-Za-z]")


def _reserved(word: str, lexicon: Lexicon) -> Optional[str]:
    """Why word cannot be a proper name of this lexicon, None if it can."""
    if lexicon.reserves_name(surface=word):
        return f"'{word}' reads as the function word '{word.lower()}'"
    if lexicon.content_word(surface=word) is not None:
        return f"'{word}' is a content word of the lexicon"
    return None


def check_identifier(name: str, lexicon: Lexicon) -> str:
    """
    Checks that a model identifier can be written as a proper name.

    Raises:
        GenerationError: IdentifierNotLexicalizable for names outside [A-Za-z0-9_]+, without a letter,
            or reserved as a function word (Lexicon.reserves_name) or equal to a content word.
    """
    reason = None
    if _IDENTIFIER.fullmatch(name) is None or _LETTER.search(name) is None:
        reason = f"'{name}' must consist of letters, digits and underscores and contain a letter"
    else:
        reason = _reserved(word=name, lexicon=lexicon)
    if reason is not None:
        raise GenerationError(
            exception_type="IdentifierNotLexicalizable",
            details=repr(name),
            message=f"Identifier cannot be used as a proper name: {reason}.",
        )
    return name


def lexicalize_guard(text: str, lexicon: Lexicon) -> str:
    """
    Turns guard or action text into a single blank-free token ("a == b" -> "a-==-b").

    Raises:
        GenerationError: GuardNotLexicalizable when the joined text holds characters outside
            [A-Za-z0-9_-=<>!+*/()&|], has no letter or collides with a function word or content word.
    """
    token = blank_free(text=text) or ""
    reason = None
    if _GUARD.fullmatch(token) is None:
        reason = "only letters, digits and _ - = < > ! + * / ( ) & | can be written"
    elif _LETTER.search(token) is None:
        reason = "it needs at least one letter"
    else:
        reason = _reserved(word=token, lexicon=lexicon)
    if reason is not None:
        raise GenerationError(
            exception_type="GuardNotLexicalizable",
            details=repr(text),
            message=f"Guard or action cannot be written as one ACE token: {reason}.",
        )
    return token


def join_names(names: Sequence[str]) -> str:
    """`A`, `A and B`, `A, B, and C`."""
    if len(names) == 1:
        return names[0]
    if len(names) == 2:
        return f"{names[0]} and {names[1]}"
    return ", ".join(names[:-1]) + f", and {names[-1]}"


def list_phrase(names: Sequence[str], singular: str, plural: str) -> str:
    """`one element that is A` for one name, `3 elements that are A, B, and C` otherwise."""
    if len(names) == 1:
        return f"one {singular} that is {names[0]}"
    return f"{len(names)} {plural} that are {join_names(names=names)}"


def datatype(enumeration: EnumerationType) -> list[str]:
    return [
        f"{enumeration.name} is a datatype.",
        f"It consists-of {list_phrase(names=enumeration.members, singular='element', plural='elements')}.",
    ]


def constant(function: ConstantFunction) -> list[str]:
    return [f"{function.name} is a constant.", f"It is equal to {function.value}."]


def component(declared: Component) -> list[str]:
    sentences = [f"{declared.name} is a component."]
    if declared.subcomponents:
        children = [child.name for child in declared.subcomponents]
        sentences.append(
            f"It consists-of {list_phrase(names=children, singular='component', plural='components')}."
        )
    return sentences


def port(owner: Component, declared: Port) -> str:
    return f"{owner.name} has an {declared.direction.value} port {declared.name} of type {declared.type_name}."


def channel(declared: Channel) -> list[str]:
    return [
        f"{declared.name} is a channel.",
        f"It connects the port {declared.source.port} of {declared.source.component} "
        f"to the port {declared.target.port} of {declared.target.component}.",
    ]


def transition(declared: Transition, guard: Optional[str], action: Optional[str]) -> list[str]:
    sentences = [f"There is a transition from {declared.source} to {declared.target}."]
    if guard is not None:
        sentences.append(f"It is triggered-by {guard}.")
    if action is not None:
        sentences.append(f"It performs {action}.")
    return sentences


def automaton_header(automaton: StateAutomaton) -> list[str]:
    return [
        f"{automaton.name} is a state-automaton of the component {automaton.owner}.",
        f"It consists-of {list_phrase(names=automaton.states, singular='state', plural='states')}.",
        f"The initial state is {automaton.initial_state}.",
    ]
