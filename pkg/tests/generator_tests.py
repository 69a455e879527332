import unittest
from unittest.mock import patch

import context  # noqa: F401 # context imported for mocking environment variables and inserting PATH

from modules.ace_language import ace_language
from modules.af3_model import af3_model
from modules.af3_model.modules.model_types import (
    Channel,
    Component,
    ConstantFunction,
    DataDictionary,
    Direction,
    Endpoint,
    EnumerationType,
    Model,
    Port,
    StateAutomaton,
    Transition,
)
from modules.factbase import factbase
from modules.generator import generator
from modules.generator.modules import templates
from modules.generator.modules.custom_error import GenerationError

# turn off logs for testing
context.turn_off_logging(module="modules.generator.generator")
context.turn_off_logging(module="modules.ace_language.modules.reader")
context.turn_off_logging(module="modules.af3_model.af3_model")


def texts(sentences: list) -> list[str]:
    return [sentence.text for sentence in sentences]


class TestGenerateDefinitions(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        print(f"\n### STARTING TEST: {__name__}.{cls.__name__} ###")

    @classmethod
    def tearDownClass(cls) -> None:
        patch.stopall()
        print(f"\n### FINISHED TEST: {__name__}.{cls.__name__} ###\n")

    def test_single_member_datatype(self) -> None:
        sentences = generator.generate_datatype(enumeration=EnumerationType(name="Signal", members=("Present",)))

        self.assertEqual(
            first=texts(sentences=sentences),
            second=["Signal is a datatype.", "It consists-of one element that is Present."],
        )

    def test_two_member_datatype(self) -> None:
        sentences = generator.generate_datatype(enumeration=EnumerationType(name="IndicatorSignal", members=("Off", "On")))

        self.assertEqual(
            first=texts(sentences=sentences),
            second=["IndicatorSignal is a datatype.", "It consists-of 2 elements that are Off and On."],
        )

    def test_four_member_datatype(self) -> None:
        sentences = generator.generate_datatype(
            enumeration=EnumerationType(name="TrafficColor", members=("Green", "Red", "RedYellow", "Yellow"))
        )

        self.assertEqual(
            first=texts(sentences=sentences)[1],
            second="It consists-of 4 elements that are Green, Red, RedYellow, and Yellow.",
        )

    def test_constants(self) -> None:
        for function, expected in (
            (ConstantFunction(name="tGreen", value=30), ["tGreen is a constant.", "It is equal to 30."]),
            (ConstantFunction(name="x", value=0), ["x is a constant.", "It is equal to 0."]),
            (ConstantFunction(name="tRed", value=-5), ["tRed is a constant.", "It is equal to -5."]),
        ):
            with self.subTest(constant=function.name):
                self.assertEqual(first=texts(sentences=generator.generate_constant(function=function)), second=expected)

    def test_readings_are_attached(self) -> None:
        sentences = generator.generate_constant(function=ConstantFunction(name="tGreen", value=30))

        self.assertEqual(first=sentences[1].reading.v, second=30)

    def test_minimal_component(self) -> None:
        sentences = generator.generate_architecture(root=Component(name="Controller"))

        self.assertEqual(first=texts(sentences=sentences), second=["Controller is a component."])

    def test_port(self) -> None:
        root = Component(
            name="TrafficLightsCtrl",
            ports=(Port(name="pedestrian", direction=Direction.INPUT, type_name="Signal"),),
        )

        sentences = generator.generate_architecture(root=root)

        self.assertEqual(
            first=texts(sentences=sentences)[-1],
            second="TrafficLightsCtrl has an input port pedestrian of type Signal.",
        )

    def test_channel(self) -> None:
        root = Component(
            name="Top",
            subcomponents=(
                Component(name="A", ports=(Port(name="out1", direction=Direction.OUTPUT, type_name="integer"),)),
                Component(name="B", ports=(Port(name="in1", direction=Direction.INPUT, type_name="integer"),)),
            ),
            channels=(Channel(name="c", source=Endpoint(component="A", port="out1"), target=Endpoint(component="B", port="in1")),),
        )

        sentences = generator.generate_architecture(root=root)

        self.assertEqual(
            first=texts(sentences=sentences),
            second=[
                "Top is a component.",
                "It consists-of 2 components that are A and B.",
                "A is a component.",
                "B is a component.",
                "A has an output port out1 of type integer.",
                "B has an input port in1 of type integer.",
                "c is a channel.",
                "It connects the port out1 of A to the port in1 of B.",
            ],
        )

    def test_minimal_automaton(self) -> None:
        automaton = StateAutomaton(name="Cycle", owner="Ctrl", states=("Idle",), initial_state="Idle")

        self.assertEqual(
            first=texts(sentences=generator.generate_automaton(automaton=automaton)),
            second=[
                "Cycle is a state-automaton of the component Ctrl.",
                "It consists-of one state that is Idle.",
                "The initial state is Idle.",
            ],
        )

    def test_transition_with_guard(self) -> None:
        automaton = StateAutomaton(
            name="LightCycle",
            owner="TrafficLightsCtrl",
            states=("Red", "RedYellow"),
            initial_state="Red",
            transitions=(Transition(source="Red", target="RedYellow", guard="counter==tRed", action="counter = 0"),),
        )

        self.assertEqual(
            first=texts(sentences=generator.generate_automaton(automaton=automaton))[3:],
            second=[
                "There is a transition from Red to RedYellow.",
                "It is triggered-by counter==tRed.",
                "It performs counter-=-0.",
            ],
        )


class TestGenerateDocument(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        print(f"\n### STARTING TEST: {__name__}.{cls.__name__} ###")
        cls.trafficlight = af3_model.main(path=context.fixture(name="trafficlight.xml"))
        cls.controller = af3_model.main(path=context.fixture(name="controller.xml"))

    @classmethod
    def tearDownClass(cls) -> None:
        patch.stopall()
        print(f"\n### FINISHED TEST: {__name__}.{cls.__name__} ###\n")

    def test_trafficlight_golden(self) -> None:
        """4 datatypes and 3 constants, two sentences each."""
        document = generator.generate_document(model=self.trafficlight)

        self.assertEqual(first=len(document.flat_sentences), second=14)
        self.assertEqual(first=document.proper_names, second=())
        self.assertEqual(
            first=document.render(),
            second=context.fixture(name="trafficlight.ace").read_text(encoding="utf-8"),
        )

    def test_controller_golden(self) -> None:
        document = generator.generate_document(model=self.controller)

        self.assertEqual(
            first=document.render(),
            second=context.fixture(name="controller.ace").read_text(encoding="utf-8"),
        )

    def test_deterministic(self) -> None:
        self.assertEqual(
            first=generator.generate_document(model=self.controller).render(),
            second=generator.generate_document(model=self.controller).render(),
        )

    def test_section_filter(self) -> None:
        document = generator.generate_document(model=self.controller, sections=(generator.DATATYPES,))

        self.assertEqual(first=[heading for heading, _ in document.sections], second=["# Data dictionary"])
        self.assertEqual(first=len(document.flat_sentences), second=4)

    def test_empty_model(self) -> None:
        document = generator.generate_document(model=Model(name="empty"))

        self.assertEqual(first=document.sections, second=())
        self.assertEqual(first=document.render(), second="")

    def test_only_signal(self) -> None:
        model = Model(
            name="signal",
            data_dictionary=DataDictionary(enumerations=(EnumerationType(name="Signal", members=("Present",)),)),
        )

        document = generator.generate_document(model=model)

        self.assertEqual(
            first=texts(sentences=list(document.flat_sentences)),
            second=["Signal is a datatype.", "It consists-of one element that is Present."],
        )

    def test_names_spelled_like_function_words(self) -> None:
        """A and True are proper names for the whole document; the pragma lists them for the reader."""
        model = Model(
            name="flags",
            data_dictionary=DataDictionary(enumerations=(EnumerationType(name="Bool", members=("True", "False")),)),
            architecture=Component(
                name="Top",
                subcomponents=(
                    Component(name="A", ports=(Port(name="out1", direction=Direction.OUTPUT, type_name="Bool"),)),
                    Component(name="B", ports=(Port(name="in1", direction=Direction.INPUT, type_name="Bool"),)),
                ),
                channels=(
                    Channel(name="c", source=Endpoint(component="A", port="out1"), target=Endpoint(component="B", port="in1")),
                ),
            ),
        )

        document = generator.generate_document(model=model)
        reading = ace_language.read_document(text=document.render(), lexicon=ace_language.default_lexicon())

        self.assertEqual(first=document.proper_names, second=("True", "A", "c"))
        self.assertEqual(first=document.render().splitlines()[0], second="# proper-names: True A c")
        self.assertIn(member="It consists-of 2 elements that are True and False.", container=document.render())
        self.assertTrue(expr=reading.report.ok, msg=reading.report.diagnostics)
        self.assertTrue(
            expr=factbase.facts_equal(
                first=factbase.extract_facts(model=model),
                second=factbase.facts_from_sentences(sentences=reading.sentences),
            )
        )

    def test_generated_document_validates(self) -> None:
        document = generator.generate_document(model=self.controller)

        reading = ace_language.read_document(text=document.render(), lexicon=ace_language.default_lexicon())

        self.assertTrue(expr=reading.report.ok, msg=reading.report.diagnostics)
        self.assertEqual(first=len(reading.sentences), second=len(document.flat_sentences))


class TestLexicalizationPolicy(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        print(f"\n### STARTING TEST: {__name__}.{cls.__name__} ###")
        cls.lexicon = ace_language.default_lexicon()

    @classmethod
    def tearDownClass(cls) -> None:
        patch.stopall()
        print(f"\n### FINISHED TEST: {__name__}.{cls.__name__} ###\n")

    def test_identifier_function_word(self) -> None:
        for name in ("Is", "that", "There", "It", "No", "a", "true"):
            with self.subTest(name=name):
                with self.assertRaises(expected_exception=GenerationError) as raised:
                    templates.check_identifier(name=name, lexicon=self.lexicon)
                self.assertEqual(first=raised.exception.exception_type, second="IdentifierNotLexicalizable")

    def test_identifier_content_word(self) -> None:
        with self.assertRaises(expected_exception=GenerationError):
            templates.check_identifier(name="port", lexicon=self.lexicon)

    def test_identifier_characters(self) -> None:
        for name in ("traffic light", "42", "a.b"):
            with self.subTest(name=name):
                with self.assertRaises(expected_exception=GenerationError):
                    templates.check_identifier(name=name, lexicon=self.lexicon)

    def test_valid_identifiers(self) -> None:
        for name in ("TrafficColor", "tGreen", "x", "in_1", "A", "True", "Every"):
            with self.subTest(name=name):
                self.assertEqual(first=templates.check_identifier(name=name, lexicon=self.lexicon), second=name)

    def test_guard(self) -> None:
        self.assertEqual(first=templates.lexicalize_guard(text="a == b", lexicon=self.lexicon), second="a-==-b")

    def test_guard_not_lexicalizable(self) -> None:
        for text in ("x.y > 0", "1 == 1", "it", "counter := 0"):
            with self.subTest(text=text):
                with self.assertRaises(expected_exception=GenerationError) as raised:
                    templates.lexicalize_guard(text=text, lexicon=self.lexicon)
                self.assertEqual(first=raised.exception.exception_type, second="GuardNotLexicalizable")

    def test_bad_identifier_in_model(self) -> None:
        model = Model(
            name="bad",
            data_dictionary=DataDictionary(enumerations=(EnumerationType(name="Color", members=("every", "Red")),)),
        )

        with self.assertRaises(expected_exception=GenerationError) as raised:
            generator.generate_document(model=model)

        self.assertEqual(first=raised.exception.status_code, second=2)

    def test_list_phrases(self) -> None:
        self.assertEqual(first=templates.join_names(names=["A"]), second="A")
        self.assertEqual(first=templates.join_names(names=["A", "B"]), second="A and B")
        self.assertEqual(first=templates.join_names(names=["A", "B", "C"]), second="A, B, and C")
        self.assertEqual(
            first=templates.list_phrase(names=["S"], singular="state", plural="states"),
            second="one state that is S",
        )


if __name__ == "__main__":
    unittest.main()
