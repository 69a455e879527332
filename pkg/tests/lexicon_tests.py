import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

import context  # noqa: F401 # context imported for mocking environment variables and inserting PATH

from modules.ace_language.modules.custom_error import LexiconError
from modules.ace_language.modules.lexicon import (
    Category,
    FunctionRole,
    default_lexicon,
    register_content_word,
    register_proper_names,
)
from modules.ace_language.modules import lexicon_file

# turn off logs for testing
context.turn_off_logging(module="modules.ace_language.modules.lexicon")
context.turn_off_logging(module="modules.ace_language.modules.lexicon_file")


class TestRegisterContentWord(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        print(f"\n### STARTING TEST: {__name__}.{cls.__name__} ###")
        cls.lexicon = default_lexicon()

    @classmethod
    def tearDownClass(cls) -> None:
        patch.stopall()
        print(f"\n### FINISHED TEST: {__name__}.{cls.__name__} ###\n")

    def test_blank_space(self) -> None:
        with self.assertRaises(expected_exception=LexiconError) as raised:
            register_content_word(lexicon=self.lexicon, surface="interested in", category=Category.ADJECTIVE)

        self.assertEqual(first=raised.exception.exception_type, second="BlankSpaceInContentWord")
        self.assertIn(member="interested-in", container=raised.exception.message)

    def test_hyphenated(self) -> None:
        lexicon = register_content_word(lexicon=self.lexicon, surface="interested-in", category=Category.ADJECTIVE)

        self.assertEqual(first=lexicon.content_word(surface="interested-in").category, second=Category.ADJECTIVE)
        self.assertIsNone(obj=self.lexicon.content_word(surface="interested-in"))

    def test_fixed_phrase_word(self) -> None:
        with self.assertRaises(expected_exception=LexiconError) as raised:
            register_content_word(lexicon=self.lexicon, surface="there", category="noun")

        self.assertEqual(first=raised.exception.exception_type, second="FunctionWordCollision")

    def test_function_word(self) -> None:
        with self.assertRaises(expected_exception=LexiconError) as raised:
            register_content_word(lexicon=self.lexicon, surface="every", category="adj")

        self.assertEqual(first=raised.exception.exception_type, second="FunctionWordCollision")

    def test_category_conflict(self) -> None:
        with self.assertRaises(expected_exception=LexiconError) as raised:
            register_content_word(lexicon=self.lexicon, surface="port", category=Category.VERB)

        self.assertEqual(first=raised.exception.exception_type, second="CategoryConflict")

    def test_same_entry_twice(self) -> None:
        lexicon = register_content_word(lexicon=self.lexicon, surface="port", category="noun", lexeme="PORT")

        self.assertIs(expr1=lexicon, expr2=self.lexicon)

    def test_unknown_category(self) -> None:
        with self.assertRaises(expected_exception=LexiconError) as raised:
            register_content_word(lexicon=self.lexicon, surface="lamp", category="pronoun")

        self.assertEqual(first=raised.exception.exception_type, second="MalformedLexiconEntry")
        self.assertEqual(first=raised.exception.status_code, second=1)


class TestDefaultLexicon(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        print(f"\n### STARTING TEST: {__name__}.{cls.__name__} ###")
        cls.lexicon = default_lexicon()

    @classmethod
    def tearDownClass(cls) -> None:
        patch.stopall()
        print(f"\n### FINISHED TEST: {__name__}.{cls.__name__} ###\n")

    def test_shared_lexeme(self) -> None:
        self.assertEqual(
            first=self.lexicon.content_word(surface="datatype").lexeme,
            second=self.lexicon.content_word(surface="data-type").lexeme,
        )

    def test_function_roles(self) -> None:
        self.assertEqual(first=self.lexicon.function_role(surface="every"), second=FunctionRole.QUANTIFIER)
        self.assertEqual(first=self.lexicon.function_role(surface="how"), second=FunctionRole.QUERY_WORD)
        self.assertEqual(first=self.lexicon.function_role(surface="'s"), second=FunctionRole.GENITIVE)

    def test_capitalized_function_word_only_at_sentence_start(self) -> None:
        self.assertIsNone(obj=self.lexicon.function_role(surface="It"))
        self.assertEqual(first=self.lexicon.function_role(surface="It", sentence_start=True), second=FunctionRole.PRONOUN)

    def test_fixed_phrases(self) -> None:
        self.assertIn(member="there is", container=self.lexicon.fixed_phrases)
        self.assertIn(member="it is true that", container=self.lexicon.fixed_phrases)

    def test_function_words_are_closed(self) -> None:
        self.assertEqual(first=self.lexicon.function_words["that"], second=FunctionRole.PRONOUN)
        with self.assertRaises(expected_exception=TypeError):
            self.lexicon.function_words["widget"] = FunctionRole.DETERMINER  # type: ignore

    def test_proper_names(self) -> None:
        lexicon = register_proper_names(lexicon=self.lexicon, names=["speed"])

        self.assertIn(member="speed", container=lexicon.proper_names)
        self.assertNotIn(member="speed", container=self.lexicon.proper_names)


class TestLexiconFile(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        print(f"\n### STARTING TEST: {__name__}.{cls.__name__} ###")

    @classmethod
    def tearDownClass(cls) -> None:
        patch.stopall()
        print(f"\n### FINISHED TEST: {__name__}.{cls.__name__} ###\n")

    def test_load_file(self) -> None:
        lexicon = lexicon_file.main(path=context.fixture(name="user.lexicon"), lexicon=default_lexicon())

        self.assertEqual(first=lexicon.content_word(surface="interested-in").category, second=Category.ADJECTIVE)
        self.assertEqual(first=lexicon.content_word(surface="light-bulbs").lexeme, second="light-bulb")

    def test_read_entries_skips_comments(self) -> None:
        entries = lexicon_file.read_entries(text="# words\n\nnoun lamp  # a comment\nverb blinks BLINK\n")

        self.assertEqual(first=entries, second=[(3, "noun", "lamp", None), (4, "verb", "blinks", "BLINK")])

    def test_malformed_line(self) -> None:
        with self.assertRaises(expected_exception=LexiconError) as raised:
            lexicon_file.read_entries(text="noun\n", source="words.lex")

        self.assertEqual(first=raised.exception.exception_type, second="MalformedLexiconEntry")
        self.assertEqual(first=raised.exception.details, second="words.lex, line 1")

    def test_registration_error_carries_line(self) -> None:
        with self.assertRaises(expected_exception=LexiconError) as raised:
            lexicon_file.load_lexicon_text(text="noun lamp\nnoun there\n", lexicon=default_lexicon(), source="words.lex")

        self.assertEqual(first=raised.exception.exception_type, second="FunctionWordCollision")
        self.assertEqual(first=raised.exception.details, second="words.lex, line 2")

    def test_missing_file(self) -> None:
        with self.assertRaises(expected_exception=LexiconError):
            lexicon_file.main(path=context.fixture(name="missing.lexicon"), lexicon=default_lexicon())

    def test_file_not_utf8(self) -> None:
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "words.lexicon"
            path.write_bytes(b"noun lamp\nnoun caf\xe9\n")

            with self.assertRaises(expected_exception=LexiconError) as raised:
                lexicon_file.main(path=path, lexicon=default_lexicon())

        self.assertEqual(first=raised.exception.exception_type, second="MalformedLexiconEntry")
        self.assertEqual(first=raised.exception.details, second=f"{path}, byte 18")
        self.assertEqual(first=raised.exception.status_code, second=1)


if __name__ == "__main__":
    unittest.main()
