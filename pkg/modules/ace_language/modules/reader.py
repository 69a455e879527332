"""Assigns each checked sentence its one reading and resolves the pronoun `It`."""
import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Optional

from .checker import analyse
from .custom_error import AceLanguageError
from .readings import (
    ActionDecl,
    AutomatonDecl,
    ChannelDecl,
    ComponentDecl,
    ConnectsDecl,
    ConsistsOf,
    ConstantDecl,
    DatatypeDecl,
    EqualsValue,
    HowManyElements,
    InitialDecl,
    IsA,
    IsElementOf,
    PortDecl,
    Question,
    Reading,
    Sentence,
    ShortAnswerReading,
    StateList,
    SubcomponentList,
    TransitionDecl,
    TriggerDecl,
    UnsupportedQuestion,
    WhatIs,
)
from .syntax import (
    Clause,
    HowQuestion,
    NounPhrase,
    NounPhraseKind,
    ParseTree,
    PrepPhrase,
    ShortAnswer,
    VerbPhrase,
    WhQuestion,
    YesNoQuestion,
)
from .tokenizer import detokenize
from .tokens import Token


log = logging.getLogger(name="log." + __name__)

# head noun of "X is a <noun>." -> declaration it introduces
_DECLARATIONS: dict[str, Callable[[str], Reading]] = {
    "DATATYPE": lambda name: DatatypeDecl(type=name),
    "CONSTANT": lambda name: ConstantDecl(name=name),
    "COMPONENT": lambda name: ComponentDecl(name=name),
    "CHANNEL": lambda name: ChannelDecl(name=name),
}

# head noun of "It consists-of N <noun> that are ..." -> kind of the subject it needs
_LIST_OWNERS = {"ELEMENT": "datatype", "COMPONENT": "component", "STATE": "automaton"}


@dataclass(frozen=True)
class Referent:
    """What `It` can point to: a named entity of some kind, or a transition."""

    kind: str
    name: str
    transition: Optional[TransitionDecl] = None


@dataclass
class ReadingContext:
    """
    Discourse state shared by the sentences of one document.

    Attributes:
        subject (Optional[Referent]): subject of the preceding declarative sentence.
        automaton (Optional[str]): most recently declared state-automaton.
    """

    subject: Optional[Referent] = None
    automaton: Optional[str] = None

    def resolve(self, pronoun: Token) -> Referent:
        if self.subject is None:
            raise AceLanguageError(
                exception_type="UnresolvedPronoun",
                position=pronoun.position,
                message=f"'{pronoun.surface}' has no preceding sentence subject to refer to.",
            )
        return self.subject

    def current_automaton(self, anchor: Token, phrase: str) -> str:
        if self.automaton is None:
            raise AceLanguageError(
                exception_type="UnresolvedPronoun",
                position=anchor.position,
                message=f"'{phrase}' needs a preceding state-automaton declaration.",
            )
        return self.automaton

    def advance(self, reading: Reading) -> None:
        """Moves the discourse forward after a sentence with this reading was accepted."""
        match reading:
            case DatatypeDecl(type=name) | ConsistsOf(type=name):
                self.subject = Referent(kind="datatype", name=name)
            case ConstantDecl(name=name) | EqualsValue(name=name):
                self.subject = Referent(kind="constant", name=name)
            case ComponentDecl(name=name) | SubcomponentList(component=name) | PortDecl(component=name):
                self.subject = Referent(kind="component", name=name)
            case ChannelDecl(name=name) | ConnectsDecl(channel=name):
                self.subject = Referent(kind="channel", name=name)
            case AutomatonDecl(automaton=name):
                self.subject = Referent(kind="automaton", name=name)
                self.automaton = name
            case StateList(automaton=name):
                self.subject = Referent(kind="automaton", name=name)
            case InitialDecl(state=state):
                self.subject = Referent(kind="state", name=state)
            case TransitionDecl(source=source, target=target):
                self.subject = Referent(
                    kind="transition", name=f"{source}->{target}", transition=reading
                )
            case _:
                pass


def _ambiguous(phrase: NounPhrase) -> AceLanguageError:
    names = ", ".join(item.token.surface for item in phrase.items if item.token is not None)
    return AceLanguageError(
        exception_type="AmbiguousSentence",
        position=phrase.items[0].token.position if phrase.items[0].token is not None else None,
        message=f"The coordination '{names}' stands where one entity is expected; it can be read "
        "distributively (each one) or collectively (all together).",
    )


def _name(phrase: NounPhrase) -> Optional[str]:
    """Name of a proper-name phrase; raises AmbiguousSentence for coordinated names."""
    if phrase.kind is NounPhraseKind.NAME and phrase.token is not None:
        return phrase.token.surface
    if phrase.kind is NounPhraseKind.COORDINATION:
        raise _ambiguous(phrase=phrase)
    return None


def _names(phrase: NounPhrase) -> Optional[tuple[str, ...]]:
    """Names of a single name or a coordination of names."""
    if phrase.kind is NounPhraseKind.NAME and phrase.token is not None:
        return (phrase.token.surface,)
    if phrase.kind is NounPhraseKind.COORDINATION:
        if all(item.kind is NounPhraseKind.NAME for item in phrase.items):
            return tuple(item.token.surface for item in phrase.items)  # type: ignore[union-attr]
    return None


def _subject(phrase: Optional[NounPhrase], context: ReadingContext, kind: Optional[str] = None) -> Optional[str]:
    """
    Name the subject refers to. `It` resolves to the preceding subject; with kind given,
    a referent of another kind gives no reading.
    """
    if phrase is None:
        return None
    if phrase.kind is NounPhraseKind.PRONOUN and phrase.token is not None:
        referent = context.resolve(pronoun=phrase.token)
        if kind is not None and referent.kind != kind:
            return None
        return referent.name
    return _name(phrase=phrase)


def _is_common(
    phrase: Optional[NounPhrase],
    head: str,
    determiners: tuple[str, ...] = ("a", "an"),
    adjectives: tuple[str, ...] = (),
) -> bool:
    if phrase is None or phrase.kind is not NounPhraseKind.COMMON or phrase.head_lexeme() != head:
        return False
    determiner = phrase.determiner.lexeme if phrase.determiner is not None else None
    if determiner not in determiners:
        return False
    return tuple(adjective.lexeme for adjective in phrase.adjectives) == adjectives and phrase.relative is None


def _preposition(modifier: PrepPhrase, lexeme: str) -> bool:
    return modifier.preposition.lexeme == lexeme


def _copula(verb_phrase: Optional[VerbPhrase]) -> bool:
    return verb_phrase is not None and verb_phrase.is_copula and verb_phrase.negation is None


def read_declaration(clause: Clause, context: ReadingContext) -> Optional[Reading]:
    """`X is a datatype|constant|component|channel.`"""
    verb_phrase = clause.verb_phrase
    if not _copula(verb_phrase) or verb_phrase.modifiers:  # type: ignore[union-attr]
        return None
    complement = verb_phrase.complement  # type: ignore[union-attr]
    if complement is None or complement.kind is not NounPhraseKind.COMMON:
        return None
    build = _DECLARATIONS.get(complement.head_lexeme() or "")
    if build is None or not _is_common(phrase=complement, head=complement.head_lexeme() or ""):
        return None
    if complement.apposition is not None or complement.modifiers:
        return None
    name = _subject(phrase=clause.subject, context=context)
    return build(name) if name is not None else None


def read_automaton(clause: Clause, context: ReadingContext) -> Optional[Reading]:
    """`A is a state-automaton of the component O.`"""
    verb_phrase = clause.verb_phrase
    if not _copula(verb_phrase) or verb_phrase.modifiers:  # type: ignore[union-attr]
        return None
    complement = verb_phrase.complement  # type: ignore[union-attr]
    if not _is_common(phrase=complement, head="STATE_AUTOMATON") or complement.apposition is not None:  # type: ignore[union-attr]
        return None
    if len(complement.modifiers) != 1 or not _preposition(complement.modifiers[0], "OF"):  # type: ignore[union-attr]
        return None
    owner = complement.modifiers[0].object  # type: ignore[union-attr]
    if not _is_common(phrase=owner, head="COMPONENT", determiners=("the",)) or owner.modifiers:
        return None
    if owner.apposition is None:
        return None
    name = _subject(phrase=clause.subject, context=context)
    if name is None:
        return None
    return AutomatonDecl(automaton=name, owner=owner.apposition.surface)


def read_list(clause: Clause, context: ReadingContext) -> Optional[Reading]:
    """`It consists-of N elements|components|states that are A, B, and C.`"""
    verb_phrase = clause.verb_phrase
    if verb_phrase is None or verb_phrase.verb.lexeme != "CONSISTS_OF" or verb_phrase.modifiers:
        return None
    complement = verb_phrase.complement
    if complement is None or complement.kind is not NounPhraseKind.COMMON or complement.relative is None:
        return None
    owner_kind = _LIST_OWNERS.get(complement.head_lexeme() or "")
    count_token = complement.determiner
    if owner_kind is None or count_token is None or count_token.value is None:
        return None
    if complement.adjectives or complement.apposition is not None or complement.modifiers:
        return None
    members = _names(phrase=complement.relative.complement)
    if members is None:
        return None
    owner = _subject(phrase=clause.subject, context=context, kind=owner_kind)
    if owner is None:
        return None

    if count_token.value != len(members):
        raise AceLanguageError(
            exception_type="CountMismatch",
            position=count_token.position,
            message=f"The sentence announces {count_token.value} but lists {len(members)}: {', '.join(members)}.",
        )
    if owner_kind == "datatype":
        return ConsistsOf(type=owner, count=count_token.value, members=members)
    if owner_kind == "component":
        return SubcomponentList(component=owner, count=count_token.value, children=members)
    return StateList(automaton=owner, count=count_token.value, states=members)


def read_value(clause: Clause, context: ReadingContext) -> Optional[Reading]:
    """`It is equal to V.`"""
    verb_phrase = clause.verb_phrase
    if not _copula(verb_phrase) or verb_phrase.adjective is None:  # type: ignore[union-attr]
        return None
    if verb_phrase.adjective.lexeme != "EQUAL" or len(verb_phrase.modifiers) != 1:  # type: ignore[union-attr]
        return None
    modifier = verb_phrase.modifiers[0]  # type: ignore[union-attr]
    if not _preposition(modifier, "TO") or modifier.object.kind is not NounPhraseKind.NUMBER:
        return None
    name = _subject(phrase=clause.subject, context=context, kind="constant")
    if name is None:
        return None
    return EqualsValue(name=name, v=modifier.object.token.value)  # type: ignore[union-attr]


def read_port(clause: Clause, context: ReadingContext) -> Optional[Reading]:
    """`C has an input|output port P of type T.`"""
    verb_phrase = clause.verb_phrase
    if verb_phrase is None or verb_phrase.verb.lexeme != "HAVE" or verb_phrase.modifiers:
        return None
    complement = verb_phrase.complement
    if complement is None or complement.apposition is None or len(complement.adjectives) != 1:
        return None
    direction = complement.adjectives[0].lexeme
    if direction not in ("INPUT", "OUTPUT"):
        return None
    if not _is_common(phrase=complement, head="PORT", adjectives=(direction,)):
        return None
    if len(complement.modifiers) != 1 or not _preposition(complement.modifiers[0], "OF"):
        return None
    port_type = complement.modifiers[0].object
    if not _is_common(phrase=port_type, head="TYPE", determiners=(None,)):  # type: ignore[arg-type]
        return None
    if port_type.apposition is None or port_type.modifiers:
        return None
    component = _subject(phrase=clause.subject, context=context, kind="component")
    if component is None:
        return None
    return PortDecl(
        component=component,
        direction=direction.lower(),
        port=complement.apposition.surface,
        type_name=port_type.apposition.surface,
    )


def _port_of(phrase: Optional[NounPhrase], trailing: int) -> Optional[tuple[str, str, tuple[PrepPhrase, ...]]]:
    """`the port P of C` followed by `trailing` more modifiers: returns (component, port, trailing modifiers)."""
    if not _is_common(phrase=phrase, head="PORT", determiners=("the",)) or phrase.apposition is None:  # type: ignore[union-attr]
        return None
    modifiers = phrase.modifiers  # type: ignore[union-attr]
    if len(modifiers) != 1 + trailing or not _preposition(modifiers[0], "OF"):
        return None
    component = _name(phrase=modifiers[0].object)
    if component is None:
        return None
    return component, phrase.apposition.surface, modifiers[1:]  # type: ignore[union-attr]


def read_connection(clause: Clause, context: ReadingContext) -> Optional[Reading]:
    """`It connects the port P1 of A to the port P2 of B.`"""
    verb_phrase = clause.verb_phrase
    if verb_phrase is None or verb_phrase.verb.lexeme != "CONNECTS" or verb_phrase.modifiers:
        return None
    source = _port_of(phrase=verb_phrase.complement, trailing=1)
    if source is None:
        return None
    source_component, source_port, (to_phrase,) = source
    if not _preposition(to_phrase, "TO"):
        return None
    target = _port_of(phrase=to_phrase.object, trailing=0)
    if target is None:
        return None
    target_component, target_port, _ = target
    channel = _subject(phrase=clause.subject, context=context, kind="channel")
    if channel is None:
        return None
    return ConnectsDecl(
        channel=channel,
        source_component=source_component,
        source_port=source_port,
        target_component=target_component,
        target_port=target_port,
    )


def read_initial_state(clause: Clause, context: ReadingContext) -> Optional[Reading]:
    """`The initial state is S.`"""
    subject = clause.subject
    if not _is_common(phrase=subject, head="STATE", determiners=("the",), adjectives=("INITIAL",)):
        return None
    if subject.apposition is not None or subject.modifiers:  # type: ignore[union-attr]
        return None
    verb_phrase = clause.verb_phrase
    if not _copula(verb_phrase) or verb_phrase.complement is None or verb_phrase.modifiers:  # type: ignore[union-attr]
        return None
    state = _name(phrase=verb_phrase.complement)  # type: ignore[union-attr]
    if state is None:
        return None
    automaton = context.current_automaton(anchor=subject.token, phrase="the initial state")  # type: ignore[union-attr, arg-type]
    return InitialDecl(automaton=automaton, state=state)


def read_transition(clause: Clause, context: ReadingContext) -> Optional[Reading]:
    """`There is a transition from S to T.`"""
    phrase = clause.existential
    if not _is_common(phrase=phrase, head="TRANSITION") or phrase.apposition is not None:  # type: ignore[union-attr]
        return None
    modifiers = phrase.modifiers  # type: ignore[union-attr]
    if len(modifiers) != 2 or not _preposition(modifiers[0], "FROM") or not _preposition(modifiers[1], "TO"):
        return None
    source = _name(phrase=modifiers[0].object)
    target = _name(phrase=modifiers[1].object)
    if source is None or target is None:
        return None
    automaton = context.current_automaton(anchor=phrase.token, phrase="a transition")  # type: ignore[union-attr, arg-type]
    return TransitionDecl(automaton=automaton, source=source, target=target)


def _transition_subject(clause: Clause, context: ReadingContext) -> Optional[TransitionDecl]:
    subject = clause.subject
    if subject is None or subject.kind is not NounPhraseKind.PRONOUN or subject.token is None:
        return None
    return context.resolve(pronoun=subject.token).transition


def read_trigger(clause: Clause, context: ReadingContext) -> Optional[Reading]:
    """`It is triggered-by G.`"""
    verb_phrase = clause.verb_phrase
    if not _copula(verb_phrase) or verb_phrase.participle is None:  # type: ignore[union-attr]
        return None
    if verb_phrase.participle.lexeme != "TRIGGERED_BY" or verb_phrase.complement is None or verb_phrase.modifiers:  # type: ignore[union-attr]
        return None
    guard = _name(phrase=verb_phrase.complement)  # type: ignore[union-attr]
    if guard is None:
        return None
    transition = _transition_subject(clause=clause, context=context)
    return TriggerDecl(transition=transition, guard=guard) if transition is not None else None


def read_action(clause: Clause, context: ReadingContext) -> Optional[Reading]:
    """`It performs A.`"""
    verb_phrase = clause.verb_phrase
    if verb_phrase is None or verb_phrase.verb.lexeme != "PERFORMS" or verb_phrase.complement is None:
        return None
    if verb_phrase.modifiers:
        return None
    action = _name(phrase=verb_phrase.complement)
    if action is None:
        return None
    transition = _transition_subject(clause=clause, context=context)
    return ActionDecl(transition=transition, action=action) if transition is not None else None


CLAUSE_READERS: tuple[Callable[[Clause, ReadingContext], Optional[Reading]], ...] = (
    read_declaration,
    read_automaton,
    read_list,
    read_value,
    read_port,
    read_connection,
    read_initial_state,
    read_transition,
    read_trigger,
    read_action,
)


def read_wh_question(tree: WhQuestion) -> Question:
    if tree.query_word.lexeme != "what":
        return Question(form=UnsupportedQuestion(reason=f"query word '{tree.query_word.surface}' is not supported"))
    name = _name(phrase=tree.subject)
    if name is None:
        return Question(form=UnsupportedQuestion(reason="'what' questions must ask about a proper name"))
    return Question(form=WhatIs(name=name))


def read_how_question(tree: HowQuestion) -> Question:
    if tree.quantity.lexeme != "many":
        return Question(form=UnsupportedQuestion(reason="'how much' questions need mass nouns, the model has none"))
    if tree.noun.lexeme != "ELEMENT" or tree.verb.lexeme != "HAVE":
        return Question(form=UnsupportedQuestion(reason="only 'How many elements does T have?' is supported"))
    type_name = _name(phrase=tree.subject)
    if type_name is None:
        return Question(form=UnsupportedQuestion(reason="'how many' questions must ask about a proper name"))
    return Question(form=HowManyElements(type_name=type_name))


def read_yes_no_question(tree: YesNoQuestion) -> Question:
    name = _name(phrase=tree.subject)
    predicate = tree.predicate
    head = predicate.head_lexeme()
    if name is None or head is None or not _is_common(phrase=predicate, head=head) or predicate.apposition is not None:
        return Question(form=UnsupportedQuestion(reason="only 'Is X a <noun>?' and 'Is X an element of T?' are supported"))

    if head == "ELEMENT" and len(predicate.modifiers) == 1 and _preposition(predicate.modifiers[0], "OF"):
        type_name = _name(phrase=predicate.modifiers[0].object)
        if type_name is not None:
            return Question(form=IsElementOf(member=name, type_name=type_name))
    if not predicate.modifiers:
        return Question(form=IsA(name=name, kind=head))
    return Question(form=UnsupportedQuestion(reason="unsupported yes/no-question predicate"))


def read_tree(tree: ParseTree, context: ReadingContext) -> list[Reading]:
    """All readings of a tree; one for every sentence of the catalogue."""
    if isinstance(tree, ShortAnswer):
        return [ShortAnswerReading(truth=not tree.negated)]
    if isinstance(tree, WhQuestion):
        return [read_wh_question(tree=tree)]
    if isinstance(tree, HowQuestion):
        return [read_how_question(tree=tree)]
    if isinstance(tree, YesNoQuestion):
        return [read_yes_no_question(tree=tree)]

    readings = []
    for read in CLAUSE_READERS:
        reading = read(tree, context)
        if reading is not None:
            readings.append(reading)
    return readings


def main(tokens: list[Token], context: Optional[ReadingContext] = None, line: Optional[int] = None) -> Sentence:
    """
    Parses one checked sentence into its single reading and advances the discourse context.

    Parameters:
        tokens (list[Token]): tokens of one sentence, terminator included.
        context (Optional[ReadingContext], optional): discourse state of the document. Defaults to a fresh one.
        line (Optional[int], optional): document line, kept on the Sentence.

    Returns:
        Sentence: tokens, reading and parse tree.

    Raises:
        AceLanguageError:
            InvalidSentence if the tokens break a construction rule.
            UnresolvedPronoun if `It` (or `the initial state`, `a transition`) has nothing to refer to.
            AmbiguousSentence if the sentence has more than one reading.
            CountMismatch if an announced count disagrees with the listed names.
            NoReading if the sentence is grammatical but outside the reading catalogue.
    """
    context = context if context is not None else ReadingContext()
    text = detokenize(tokens=tokens)

    tree, report = analyse(tokens=tokens)
    if tree is None:
        diagnostic = report.diagnostics[0]
        raise AceLanguageError(
            exception_type="InvalidSentence",
            position=diagnostic.position,
            message=f"{diagnostic.rule}: {diagnostic.message}",
        )

    readings = read_tree(tree=tree, context=context)
    if not readings:
        raise AceLanguageError(
            exception_type="NoReading",
            details=text,
            message="The sentence is grammatical but has no meaning in terms of the model.",
        )
    if len(readings) > 1:
        raise AceLanguageError(
            exception_type="AmbiguousSentence",
            details=text,
            message=f"The sentence has {len(readings)} readings.",
        )

    reading = readings[0]
    context.advance(reading=reading)
    log.debug(msg=f"Read '{text}' as {reading}.")
    return Sentence(tokens=tuple(tokens), reading=reading, tree=tree, line=line)
