"""Facilitates process of reading an AutoFocus3-style XML model into a typed Model."""
import logging
from pathlib import Path

from lxml import etree

from .modules import check_model
from .modules.custom_error import ModelError
from .modules.model_types import Component, DataDictionary, Model, StateAutomaton
from .modules.read_sections import (
    COMPONENT_ARCHITECTURE,
    DATA_DICTIONARY,
    SectionReader,
    check_section_kind,
)
from .modules.read_xml import local_name, location, parse_xml


log = logging.getLogger(name="log." + __name__)


def read_sections(
    root: etree._Element, reader: SectionReader, default_name: str
) -> Model:
    """
    Walks the document root and reads every rootElements/containedElements section in document order.

    Raises:
        ModelError: UnknownSectionType for a section kind other than the three known ones,
            InvalidSection when a data dictionary or architecture appears twice.
    """
    data_dictionary: DataDictionary | None = None
    architecture: Component | None = None
    automata: list[StateAutomaton] = []

    for section in root:
        if not isinstance(section.tag, str):
            continue
        tag = local_name(element=section)
        if tag not in ("rootElements", "containedElements"):
            reader.ignore(element=section, section="model root")
            continue

        kind = check_section_kind(element=section)
        if kind == DATA_DICTIONARY:
            if data_dictionary is not None:
                raise ModelError(
                    exception_type="InvalidSection",
                    details=location(element=section),
                    message="Model holds more than one data dictionary.",
                )
            data_dictionary = reader.read_data_dictionary(section=section)
        elif kind == COMPONENT_ARCHITECTURE:
            if architecture is not None:
                raise ModelError(
                    exception_type="InvalidSection",
                    details=location(element=section),
                    message="Model holds more than one component architecture.",
                )
            architecture = reader.read_architecture(section=section, automata=automata)
        else:
            automata.append(reader.read_automaton(element=section))

    return Model(
        name=root.get("name", default_name),
        data_dictionary=data_dictionary,
        architecture=architecture,
        automata=tuple(automata),
    )


def parse_model(xml_text: str | bytes, strict: bool = False, default_name: str = "model") -> Model:
    """
    Parses AutoFocus3-style XML text into a Model. Element order is preserved in every list;
    internal `id` attributes are never read into the Model.

    Parameters:
        xml_text (str | bytes): UTF-8 XML text.
        strict (bool, optional): raise UnknownElement instead of warning about unknown elements. Defaults to False.
        default_name (str, optional): model name when the root element has no 'name'. Defaults to "model".

    Returns:
        model (Model): a Model satisfying all invariants.

    Raises:
        ModelError:
            MalformedXml if the text is not parseable.
            UnknownSectionType if a section (or constant value type) is not supported.
            MissingAttribute if an element lacks 'name' or a constant lacks 'value'.
            DuplicateName if a uniqueness invariant is violated.
            EmptyEnumeration if an Enumeration has no members.
            Any other structural diagnostic raised by check_model.
    """
    root = parse_xml(xml_text=xml_text)
    reader = SectionReader(strict=strict)
    model = read_sections(root=root, reader=reader, default_name=default_name)
    model = check_model.main(model=model)

    log.info(
        msg=f"Model {model.name} parsed ({len(reader.ignored)} element(s) ignored)."
    )
    return model


def main(path: str | Path, strict: bool = False) -> Model:
    """
    Reads a model file from disk and parses it.

    Parameters:
        path (str | Path): path of the XML model file.
        strict (bool, optional): see parse_model. Defaults to False.

    Returns:
        model (Model): parsed model; its default name is the file stem.

    Raises:
        ModelError: NoSuchFile if the file cannot be read, otherwise as parse_model.
    """
    model_path = Path(path)
    log.debug(msg=f"Reading model file {model_path}.")
    try:
        xml_bytes = model_path.read_bytes()
    except OSError as exc:
        raise ModelError(
            exception_type="NoSuchFile",
            details=str(object=model_path),
            message=f"no such file: {model_path}",
        ) from exc

    return parse_model(xml_text=xml_bytes, strict=strict, default_name=model_path.stem)
