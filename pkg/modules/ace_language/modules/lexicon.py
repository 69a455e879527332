"""ACE vocabulary: closed-class function words, fixed phrases and the registry of content words."""
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, replace
from enum import Enum
from types import MappingProxyType
from typing import Optional

from .custom_error import LexiconError


log = logging.getLogger(name="log." + __name__)


class FunctionRole(str, Enum):
    DETERMINER = "determiner"
    QUANTIFIER = "quantifier"
    COORDINATOR = "coordinator"
    NEGATION = "negation"
    PRONOUN = "pronoun"
    QUERY_WORD = "query word"
    AUXILIARY = "auxiliary"
    BE = "be"
    GENITIVE = "genitive"
    RESPONSE = "response"


class Category(str, Enum):
    NOUN = "noun"
    VERB = "verb"
    ADJECTIVE = "adj"
    ADVERB = "adv"
    PREPOSITION = "prep"


# closed classes; nothing at runtime adds to or removes from them
FUNCTION_WORDS: Mapping[str, FunctionRole] = MappingProxyType(
    {
        **dict.fromkeys(("a", "an", "the"), FunctionRole.DETERMINER),
        **dict.fromkeys(("every", "each", "all", "some", "many", "much", "one"), FunctionRole.QUANTIFIER),
        **dict.fromkeys(("and", "or", ","), FunctionRole.COORDINATOR),
        **dict.fromkeys(("not", "no"), FunctionRole.NEGATION),
        **dict.fromkeys(("it", "that"), FunctionRole.PRONOUN),
        **dict.fromkeys(("what", "who", "which", "where", "when", "how"), FunctionRole.QUERY_WORD),
        **dict.fromkeys(("does", "do", "can", "must", "may", "should"), FunctionRole.AUXILIARY),
        **dict.fromkeys(("is", "are", "be"), FunctionRole.BE),
        "'s": FunctionRole.GENITIVE,
        "yes": FunctionRole.RESPONSE,
    }
)

FIXED_PHRASES: tuple[str, ...] = ("it is true that", "there is", "there are")
FIXED_PHRASE_WORDS: frozenset[str] = frozenset(
    word for phrase in FIXED_PHRASES for word in phrase.split()
)

# capitalized words that open generated sentences, answers and questions; they stay unavailable as names
SENTENCE_OPENERS: frozenset[str] = frozenset(
    word.capitalize()
    for word in ("it", "the", "there", "yes", "no", "is", "are", "does", "do", "what", "who", "which", "where", "when", "how")
)

# quantity words that behave like numbers
NUMBER_WORDS: Mapping[str, int] = MappingProxyType({"one": 1})

FORBIDDEN_CHARACTERS = frozenset(",.?'\"")


@dataclass(frozen=True)
class ContentWord:
    surface: str
    category: Category
    lexeme: str


@dataclass(frozen=True, eq=False)
class Lexicon:
    """
    Immutable ACE lexicon. Registration functions return a new Lexicon.

    Attributes:
        content_words (Mapping[str, ContentWord]): surface form -> content word.
        proper_names (frozenset[str]): model identifiers registered for this session.
    """

    content_words: Mapping[str, ContentWord] = field(default_factory=lambda: MappingProxyType({}))
    proper_names: frozenset[str] = frozenset()

    @property
    def function_words(self) -> Mapping[str, FunctionRole]:
        return FUNCTION_WORDS

    @property
    def fixed_phrases(self) -> tuple[str, ...]:
        return FIXED_PHRASES

    def function_role(self, surface: str, sentence_start: bool = False) -> Optional[FunctionRole]:
        """
        Role of a function word. Function words are lowercase; the capitalized form is
        accepted only at the start of a sentence ("It", "The", "Is").
        """
        if surface in FUNCTION_WORDS:
            return FUNCTION_WORDS[surface]
        if sentence_start and surface[:1].isupper() and surface == surface.lower().capitalize():
            return FUNCTION_WORDS.get(surface.lower())
        return None

    def content_word(self, surface: str) -> Optional[ContentWord]:
        return self.content_words.get(surface)

    def collides_with_function_word(self, surface: str) -> bool:
        lowered = surface.lower()
        return lowered in FUNCTION_WORDS or lowered in FIXED_PHRASE_WORDS

    def reserves_name(self, surface: str) -> bool:
        """True when surface cannot be a proper name: a closed-class word as written, or a sentence opener."""
        return surface in FUNCTION_WORDS or surface in FIXED_PHRASE_WORDS or surface in SENTENCE_OPENERS


def _check_surface(surface: str) -> None:
    if not surface:
        raise LexiconError(
            exception_type="MalformedLexiconEntry",
            details=None,
            message="Content word surface form is empty.",
        )
    if any(character.isspace() for character in surface):
        raise LexiconError(
            exception_type="BlankSpaceInContentWord",
            details=repr(surface),
            message=f"Content word '{surface}' contains a blank space; hyphenate it "
            f"(e.g. '{'-'.join(surface.split())}').",
        )
    if FORBIDDEN_CHARACTERS.intersection(surface):
        raise LexiconError(
            exception_type="MalformedLexiconEntry",
            details=repr(surface),
            message=f"Content word '{surface}' contains punctuation.",
        )


def register_content_word(
    lexicon: Lexicon,
    surface: str,
    category: Category | str,
    lexeme: Optional[str] = None,
) -> Lexicon:
    """
    Registers a content word and returns the extended lexicon. Registering an identical entry again is a no-op.

    Parameters:
        lexicon (Lexicon): lexicon to extend.
        surface (str): surface form; multiword forms must be hyphenated.
        category (Category | str): lexical category (noun, verb, adj, adv, prep).
        lexeme (Optional[str], optional): canonical lexeme. Defaults to the surface itself.

    Returns:
        Lexicon: a new lexicon containing the word.

    Raises:
        LexiconError:
            BlankSpaceInContentWord if surface contains a space.
            FunctionWordCollision if surface is a predefined function word or fixed-phrase word.
            CategoryConflict if surface is already registered with another category or lexeme.
            MalformedLexiconEntry if surface is empty, contains punctuation or category is unknown.
    """
    _check_surface(surface=surface)
    try:
        category = Category(category)
    except ValueError as exc:
        raise LexiconError(
            exception_type="MalformedLexiconEntry",
            details=repr(category),
            message=f"Unknown lexical category '{category}'; expected noun, verb, adj, adv or prep.",
        ) from exc

    if lexicon.collides_with_function_word(surface=surface):
        raise LexiconError(
            exception_type="FunctionWordCollision",
            details=repr(surface),
            message=f"'{surface}' is a predefined function word and cannot be a content word.",
        )

    entry = ContentWord(surface=surface, category=category, lexeme=lexeme or surface)
    existing = lexicon.content_words.get(surface)
    if existing == entry:
        return lexicon
    if existing is not None:
        raise LexiconError(
            exception_type="CategoryConflict",
            details=repr(surface),
            message=f"'{surface}' is already registered as {existing.category.value} "
            f"({existing.lexeme}), not {category.value} ({entry.lexeme}).",
        )

    log.debug(msg=f"Registering {category.value} '{surface}' as {entry.lexeme}.")
    words = dict(lexicon.content_words)
    words[surface] = entry
    return replace(lexicon, content_words=MappingProxyType(words))


def register_proper_names(lexicon: Lexicon, names: Iterable[str]) -> Lexicon:
    """Returns a lexicon that tokenizes the given model identifiers as proper names."""
    new_names = frozenset(names) - lexicon.proper_names
    if not new_names:
        return lexicon
    return replace(lexicon, proper_names=lexicon.proper_names | new_names)


_BASE_CONTENT_WORDS: tuple[tuple[str, Category, str], ...] = (
    ("datatype", Category.NOUN, "DATATYPE"),
    ("data-type", Category.NOUN, "DATATYPE"),
    ("constant", Category.NOUN, "CONSTANT"),
    ("element", Category.NOUN, "ELEMENT"),
    ("elements", Category.NOUN, "ELEMENT"),
    ("component", Category.NOUN, "COMPONENT"),
    ("components", Category.NOUN, "COMPONENT"),
    ("port", Category.NOUN, "PORT"),
    ("channel", Category.NOUN, "CHANNEL"),
    ("state", Category.NOUN, "STATE"),
    ("states", Category.NOUN, "STATE"),
    ("state-automaton", Category.NOUN, "STATE_AUTOMATON"),
    ("transition", Category.NOUN, "TRANSITION"),
    ("type", Category.NOUN, "TYPE"),
    ("guard", Category.NOUN, "GUARD"),
    ("action", Category.NOUN, "ACTION"),
    ("consists-of", Category.VERB, "CONSISTS_OF"),
    ("connects", Category.VERB, "CONNECTS"),
    ("triggered-by", Category.VERB, "TRIGGERED_BY"),
    ("performs", Category.VERB, "PERFORMS"),
    ("has", Category.VERB, "HAVE"),
    ("have", Category.VERB, "HAVE"),
    ("equal", Category.ADJECTIVE, "EQUAL"),
    ("initial", Category.ADJECTIVE, "INITIAL"),
    ("input", Category.ADJECTIVE, "INPUT"),
    ("output", Category.ADJECTIVE, "OUTPUT"),
    ("of", Category.PREPOSITION, "OF"),
    ("to", Category.PREPOSITION, "TO"),
    ("from", Category.PREPOSITION, "FROM"),
)


def default_lexicon() -> Lexicon:
    """
    Returns the built-in lexicon: the closed function-word and fixed-phrase classes plus the
    content words the generator templates need. "datatype" and "data-type" share the lexeme DATATYPE.
    """
    lexicon = Lexicon()
    for surface, category, lexeme in _BASE_CONTENT_WORDS:
        lexicon = register_content_word(
            lexicon=lexicon, surface=surface, category=category, lexeme=lexeme
        )
    return lexicon
