"""Facilitates building, comparing and rendering fact bases."""
import logging
from collections.abc import Iterable

from modules.af3_model.modules.model_types import Model
from modules.ace_language.modules.readings import Sentence

from .modules import extract, recover
from .modules.facts import FactBase


log = logging.getLogger(name="log." + __name__)


def extract_facts(model: Model) -> FactBase:
    """
    Reduces a model to its fact base.

    Parameters:
        model (Model): a parsed, valid model.

    Returns:
        FactBase: IsDatatype/HasElementCount/ElementOf per enumeration, IsConstant/HasValue per constant,
            IsComponent/Subcomponent/HasPort/Connects for the architecture and IsAutomaton/HasState/
            IsInitialState/HasTransition per automaton, in model order.
    """
    fact_base = FactBase(facts=extract.main(model=model))
    log.info(msg=f"Extracted {len(fact_base)} fact(s) from model {model.name}.")
    return fact_base


def facts_from_sentences(sentences: Iterable[Sentence]) -> FactBase:
    """Fact base stated by parsed sentences; the inverse of generation."""
    fact_base = FactBase(facts=recover.main(sentences=sentences))
    log.debug(msg=f"Recovered {len(fact_base)} fact(s) from sentences.")
    return fact_base


def facts_equal(first: FactBase, second: FactBase) -> bool:
    """Set equality of two fact bases; insertion order does not matter."""
    return first.as_set() == second.as_set()


def render_facts(fact_base: FactBase) -> list[str]:
    return fact_base.render()
