import unittest
from unittest.mock import patch

import context  # noqa: F401 # context imported for mocking environment variables and inserting PATH

from modules.ace_language.modules import checker
from modules.ace_language.modules.checker import Diagnostic, analyse, check_sentence
from modules.ace_language.modules.lexicon import default_lexicon
from modules.ace_language.modules.syntax import Clause, HowQuestion, NounPhraseKind, ShortAnswer, WhQuestion, YesNoQuestion
from modules.ace_language.modules.tokenizer import tokenize

# turn off logs for testing
context.turn_off_logging(module="modules.ace_language.modules.checker")


class TestCheckSentence(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        print(f"\n### STARTING TEST: {__name__}.{cls.__name__} ###")
        cls.lexicon = default_lexicon()

    @classmethod
    def tearDownClass(cls) -> None:
        patch.stopall()
        print(f"\n### FINISHED TEST: {__name__}.{cls.__name__} ###\n")

    def check(self, text: str) -> checker.ValidationReport:
        return check_sentence(tokens=tokenize(text=text, lexicon=self.lexicon))

    def test_accepted_sentences(self) -> None:
        for text in (
            "TrafficColor is a datatype.",
            "It consists-of 2 elements that are Off, On.",
            "It consists-of 4 elements that are Green, Red, RedYellow, and Yellow.",
            "It consists-of one element that is Present.",
            "It is equal to 30.",
            "It is true that Signal is a datatype.",
            "Signal is not a constant.",
            "Every component has a port.",
            "There is a transition from Red to Green.",
            "It connects the port out1 of A1 to the port in1 of B1.",
            "Yes, it is.",
            "No, it is not.",
            "What is IndicatorSignal?",
            "How many elements does IndicatorSignal have?",
            "Is On an element of IndicatorSignal?",
        ):
            with self.subTest(text=text):
                report = self.check(text=text)
                self.assertTrue(expr=report.ok, msg=report.diagnostics)

    def test_rejected_sentences(self) -> None:
        """Every construction rule has at least one violating sentence."""
        cases = (
            ("is a datatype TrafficColor.", checker.RULE_DECLARATIVE_SUBJECT),
            ("Signal is a datatype", checker.RULE_TERMINATOR),
            ("Signal . is a datatype.", checker.RULE_TERMINATOR),
            ("Signal a datatype.", checker.RULE_VERB_PHRASE),
            ("Signal is.", checker.RULE_COMPLEMENT),
            ("Signal is a.", checker.RULE_NOUN),
            ("Signal is a Red.", checker.RULE_NOUN),
            ("Signal is a datatype and.", checker.RULE_COORDINATION),
            ("It consists-of 2 elements that Off and On.", checker.RULE_RELATIVE),
            ("Signal is a datatype Red Green.", checker.RULE_TRAILING),
            ("Signal is a datatype of.", checker.RULE_NOUN_PHRASE),
            ("Signal is TrafficColor?", checker.RULE_QUESTION),
            ("How many elements IndicatorSignal have?", checker.RULE_HOW_QUESTION),
            ("Yes, it is not.", checker.RULE_SHORT_ANSWER),
            ("Is Signal?", checker.RULE_NOUN_PHRASE),
        )
        for text, rule in cases:
            with self.subTest(text=text):
                report = self.check(text=text)
                self.assertFalse(expr=report.ok)
                self.assertEqual(first=len(report.diagnostics), second=1)
                self.assertEqual(first=report.diagnostics[0].rule, second=rule)

    def test_diagnostic_position(self) -> None:
        report = self.check(text="Signal is a datatype and.")

        self.assertEqual(first=report.diagnostics[0].position, second=21)

    def test_verb_first_position(self) -> None:
        report = self.check(text="is a datatype TrafficColor.")

        self.assertEqual(first=report.diagnostics[0].position, second=0)
        self.assertEqual(first=report.diagnostics[0].rule, second="declarative must begin with noun phrase")

    def test_empty_sentence(self) -> None:
        self.assertEqual(first=check_sentence(tokens=[]).diagnostics[0].rule, second=checker.RULE_TERMINATOR)


class TestAnalyse(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        print(f"\n### STARTING TEST: {__name__}.{cls.__name__} ###")
        cls.lexicon = default_lexicon()

    @classmethod
    def tearDownClass(cls) -> None:
        patch.stopall()
        print(f"\n### FINISHED TEST: {__name__}.{cls.__name__} ###\n")

    def tree(self, text: str):
        tree, report = analyse(tokens=tokenize(text=text, lexicon=self.lexicon))
        self.assertTrue(expr=report.ok, msg=report.diagnostics)
        return tree

    def test_tree_kinds(self) -> None:
        self.assertIsInstance(obj=self.tree(text="Signal is a datatype."), cls=Clause)
        self.assertIsInstance(obj=self.tree(text="Yes, it is."), cls=ShortAnswer)
        self.assertIsInstance(obj=self.tree(text="What is Signal?"), cls=WhQuestion)
        self.assertIsInstance(obj=self.tree(text="How many elements does Signal have?"), cls=HowQuestion)
        self.assertIsInstance(obj=self.tree(text="Is Signal a datatype?"), cls=YesNoQuestion)

    def test_coordination(self) -> None:
        tree = self.tree(text="It consists-of 4 elements that are Green, Red, RedYellow, and Yellow.")

        members = tree.verb_phrase.complement.relative.complement
        self.assertEqual(first=members.kind, second=NounPhraseKind.COORDINATION)
        self.assertEqual(
            first=[item.token.surface for item in members.items],
            second=["Green", "Red", "RedYellow", "Yellow"],
        )

    def test_prepositional_phrases_attach_to_the_object(self) -> None:
        """`to ...` attaches to the object noun phrase, after its `of ...` phrase."""
        tree = self.tree(text="It connects the port out1 of A1 to the port in1 of B1.")

        complement = tree.verb_phrase.complement
        self.assertEqual(first=tree.verb_phrase.modifiers, second=())
        self.assertEqual(
            first=[modifier.preposition.lexeme for modifier in complement.modifiers],
            second=["OF", "TO"],
        )

    def test_frame(self) -> None:
        tree = self.tree(text="It is true that Signal is a datatype.")

        self.assertEqual(first=tree.frame.lexeme, second="it is true that")
        self.assertEqual(first=tree.subject.token.surface, second="Signal")

    def test_negated_short_answer(self) -> None:
        self.assertTrue(expr=self.tree(text="No, it is not.").negated)


class TestDiagnostic(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        print(f"\n### STARTING TEST: {__name__}.{cls.__name__} ###")

    @classmethod
    def tearDownClass(cls) -> None:
        patch.stopall()
        print(f"\n### FINISHED TEST: {__name__}.{cls.__name__} ###\n")

    def test_render(self) -> None:
        diagnostic = Diagnostic(position=21, rule="noun phrase expected", message="sentence ends", line=3)

        self.assertEqual(first=diagnostic.render(), second="line 3, position 21: noun phrase expected: sentence ends")

    def test_render_without_line(self) -> None:
        diagnostic = Diagnostic(position=0, rule="noun phrase expected", message="sentence ends")

        self.assertEqual(first=diagnostic.render(), second="position 0: noun phrase expected: sentence ends")


if __name__ == "__main__":
    unittest.main()
