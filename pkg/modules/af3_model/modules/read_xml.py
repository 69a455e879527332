"""lxml helpers for reading AutoFocus3 XML: parsing, xsi:type kinds and required attributes."""
import logging
from typing import Optional

from lxml import etree

from .custom_error import ModelError


log = logging.getLogger(name="log." + __name__)

XSI_NAMESPACE = "http://www.w3.org/2001/XMLSchema-instance"
XSI_TYPE = f"{{{XSI_NAMESPACE}}}type"


def parse_xml(xml_text: str | bytes) -> etree._Element:
    """
    Parses model XML text into an lxml element tree.

    Parameters:
        xml_text (str | bytes): UTF-8 XML text of one model file.

    Returns:
        root (etree._Element): document root element.

    Raises:
        ModelError: MalformedXml, if the text is not well-formed XML.
    """
    if isinstance(xml_text, str):
        xml_text = xml_text.encode(encoding="utf-8")

    xml_parser = etree.XMLParser(remove_blank_text=True, resolve_entities=False)
    try:
        root = etree.fromstring(text=xml_text, parser=xml_parser)
    except etree.XMLSyntaxError as exc:
        raise ModelError(
            exception_type="MalformedXml",
            details=str(object=exc),
            message="Model file is not well-formed XML.",
        ) from exc

    if root is None:
        raise ModelError(
            exception_type="MalformedXml",
            details=None,
            message="Model file contains no root element.",
        )

    log.debug(msg=f"XML tree created with root <{local_name(element=root)}>.")
    return root


def local_name(element: etree._Element) -> str:
    """Returns the element tag without its namespace."""
    return etree.QName(element).localname


def type_kind(element: etree._Element) -> Optional[str]:
    """
    Returns the final segment of an element's xsi:type, e.g. "Enumeration" for
    "org-fortiss-af3-expression-definitions:Enumeration". The prefix carries no meaning here.
    """
    xsi_type = element.get(XSI_TYPE)
    if xsi_type is None:
        return None
    return xsi_type.rsplit(":", maxsplit=1)[-1]


def raw_type(element: etree._Element) -> str:
    """Returns the xsi:type string as written, for diagnostics."""
    return str(object=element.get(XSI_TYPE, ""))


def location(element: etree._Element) -> str:
    """Returns a short 'line N' location string for diagnostics."""
    return f"line {element.sourceline}"


def require_attribute(element: etree._Element, attribute: str) -> str:
    """
    Reads a mandatory attribute.

    Parameters:
        element (etree._Element): element carrying the attribute.
        attribute (str): attribute name.

    Returns:
        value (str): attribute value, stripped of surrounding whitespace.

    Raises:
        ModelError: MissingAttribute, if the attribute is absent or empty.
    """
    value = element.get(attribute)
    if value is None or not value.strip():
        raise ModelError(
            exception_type="MissingAttribute",
            details=location(element=element),
            message=f"<{local_name(element=element)}> lacks the '{attribute}' attribute.",
        )
    return value.strip()


def require_identifier(element: etree._Element, attribute: str = "name") -> str:
    """
    Reads a mandatory identifier attribute; identifiers cannot contain blank spaces.

    Raises:
        ModelError: MissingAttribute if absent, InvalidAttribute if it contains blank spaces.
    """
    value = require_attribute(element=element, attribute=attribute)
    if any(character.isspace() for character in value):
        raise ModelError(
            exception_type="InvalidAttribute",
            details=location(element=element),
            message=f"Identifier '{value}' in '{attribute}' contains blank spaces.",
        )
    return value
