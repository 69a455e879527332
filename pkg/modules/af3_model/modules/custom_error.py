"""Custom exception class for handling errors found while reading AutoFocus3 model files."""

from utilities.custom_error import NlsError


class ModelError(NlsError):
    """
    Raised when a model file cannot be turned into a valid Model.

    exception_type is one of: NoSuchFile, MalformedXml, UnknownSectionType, MissingAttribute, InvalidAttribute,\
    DuplicateName, EmptyEnumeration, UnknownEndpoint, UnknownPortType, UnknownState, UnknownElement.
    Exit status 1 (input/model error).
    """

    default_status_code: int = 1
