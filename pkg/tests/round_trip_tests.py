import unittest
from unittest.mock import patch

from hypothesis import given, settings

import context  # noqa: F401 # context imported for mocking environment variables and inserting PATH
from model_strategies import corpus_settings, models

from modules.ace_language import ace_language
from modules.af3_model.modules import check_model
from modules.af3_model.modules.model_types import Model
from modules.factbase import factbase
from modules.factbase.modules.facts import ElementOf, HasElementCount, IsDatatype
from modules.generator import generator
from modules.query import query

# turn off logs for testing
context.turn_off_logging(module="modules.generator.generator")
context.turn_off_logging(module="modules.factbase.factbase")
context.turn_off_logging(module="modules.ace_language.ace_language")
context.turn_off_logging(module="modules.ace_language.modules.reader")
context.turn_off_logging(module="modules.ace_language.modules.checker")
context.turn_off_logging(module="modules.query.query")
context.turn_off_logging(module="modules.query.modules.answers")


class TestRoundTrip(unittest.TestCase):
    """Model -> facts equals model -> document -> sentences -> facts."""

    @classmethod
    def setUpClass(cls) -> None:
        print(f"\n### STARTING TEST: {__name__}.{cls.__name__} ###")
        cls.lexicon = ace_language.default_lexicon()

    @classmethod
    def tearDownClass(cls) -> None:
        patch.stopall()
        print(f"\n### FINISHED TEST: {__name__}.{cls.__name__} ###\n")

    @corpus_settings
    @given(model=models())
    def test_generated_models_are_valid(self, model: Model) -> None:
        self.assertIs(expr1=check_model.main(model=model), expr2=model)

    @corpus_settings
    @given(model=models())
    def test_generated_documents_validate(self, model: Model) -> None:
        document = generator.generate_document(model=model)

        reading = ace_language.read_document(text=document.render(), lexicon=self.lexicon)

        self.assertTrue(expr=reading.report.ok, msg=[diagnostic.render() for diagnostic in reading.report.diagnostics])
        self.assertEqual(first=len(reading.sentences), second=len(document.flat_sentences))

    @corpus_settings
    @given(model=models())
    def test_facts_survive_the_round_trip(self, model: Model) -> None:
        expected = factbase.extract_facts(model=model)
        reading = ace_language.read_document(text=generator.generate_document(model=model).render(), lexicon=self.lexicon)

        recovered = factbase.facts_from_sentences(sentences=reading.sentences)

        self.assertTrue(
            expr=factbase.facts_equal(first=expected, second=recovered),
            msg=sorted(set(expected.render()) ^ set(recovered.render())),
        )

    @corpus_settings
    @given(model=models())
    def test_element_counts_are_coherent(self, model: Model) -> None:
        facts = factbase.extract_facts(model=model)
        counts = facts.of_type(HasElementCount)

        self.assertEqual(
            first=sorted(count.type for count in counts),
            second=sorted(datatype.type for datatype in facts.of_type(IsDatatype)),
        )
        for count in counts:
            members = [element for element in facts.of_type(ElementOf) if element.type == count.type]
            self.assertEqual(first=count.n, second=len(members), msg=count.type)

    @settings(corpus_settings, max_examples=20)
    @given(model=models())
    def test_generation_is_deterministic(self, model: Model) -> None:
        self.assertEqual(
            first=generator.generate_document(model=model).render(),
            second=generator.generate_document(model=model).render(),
        )


class TestQuerySoundness(unittest.TestCase):
    """Every answer agrees with membership in the fact base it was computed from."""

    @classmethod
    def setUpClass(cls) -> None:
        print(f"\n### STARTING TEST: {__name__}.{cls.__name__} ###")

    @classmethod
    def tearDownClass(cls) -> None:
        patch.stopall()
        print(f"\n### FINISHED TEST: {__name__}.{cls.__name__} ###\n")

    @settings(corpus_settings, max_examples=40)
    @given(model=models())
    def test_element_questions(self, model: Model) -> None:
        facts = factbase.extract_facts(model=model)
        lexicon = query.lexicon_for(facts=facts)
        enumerations = model.data_dictionary.enumerations
        every_member = [member for enumeration in enumerations for member in enumeration.members]

        for enumeration in enumerations:
            for member in every_member:
                answer = query.ask(text=f"Is {member} an element of {enumeration.name}?", facts=facts, lexicon=lexicon)
                self.assertEqual(
                    first=answer.truth,
                    second=ElementOf(member=member, type=enumeration.name) in facts,
                    msg=f"{member} / {enumeration.name}",
                )

    @settings(corpus_settings, max_examples=40)
    @given(model=models())
    def test_count_questions(self, model: Model) -> None:
        facts = factbase.extract_facts(model=model)

        for enumeration in model.data_dictionary.enumerations:
            answer = query.ask(text=f"How many elements does {enumeration.name} have?", facts=facts)
            self.assertEqual(first=answer.count, second=len(enumeration.members))

    @settings(corpus_settings, max_examples=40)
    @given(model=models())
    def test_kind_questions(self, model: Model) -> None:
        facts = factbase.extract_facts(model=model)

        for enumeration in model.data_dictionary.enumerations:
            self.assertEqual(first=query.ask(text=f"What is {enumeration.name}?", facts=facts).text, second="It is a data-type.")
            self.assertTrue(expr=query.ask(text=f"Is {enumeration.name} a datatype?", facts=facts).truth)
            self.assertFalse(expr=query.ask(text=f"Is {enumeration.name} a constant?", facts=facts).truth)
        for function in model.data_dictionary.constants:
            self.assertEqual(first=query.ask(text=f"What is {function.name}?", facts=facts).text, second="It is a constant.")
            self.assertTrue(expr=query.ask(text=f"Is {function.name} a constant?", facts=facts).truth)


if __name__ == "__main__":
    unittest.main()
