"""Base exception class for errors raised by the ace_nls pipeline."""

import json
import logging
from typing import Optional


log = logging.getLogger(name="log." + __name__)


class NlsError(Exception):
    """
    Base exception class for handling common errors in ace_nls.

    Collects error details and builds error_response following the format:
        {
            "exception": exception_type,
            "message": message,
            "status_code": status_code,
            "details": details,
        },
    to be printed as a single-line diagnostic on the error stream.

    Parameters:
        exception_type (str): Diagnostic name, e.g. "MalformedXml" or "UnknownToken".
        details (Optional[str]): Exception details (file, line, token position).
        message (str): Human readable message.
        status_code (Optional[int]): Process exit status. Defaults to the subclass' default_status_code.

    Attributes:
        exception_type (str): Diagnostic name.
        details (Optional[str]): Exception details.
        message (str): Human readable message.
        status_code (int): Process exit status.
        error_response (str): JSON string representing error_response_dict.

    Examples:
        try:
            etree.fromstring(text=xml_bytes)
        except etree.XMLSyntaxError as exc:
            raise ModelError(
                exception_type="MalformedXml",
                details=str(object=exc),
                message="Model file is not well-formed XML.",
            ) from exc
    """

    default_status_code: int = 2

    exception_type: str
    details: Optional[str]
    message: str
    status_code: int

    def __init__(
        self,
        exception_type: str,
        message: str,
        details: Optional[str] = None,
        status_code: Optional[int] = None,
    ) -> None:
        super().__init__(message)
        self.exception_type = exception_type
        self.details = details
        self.message = message
        self.status_code = (
            self.default_status_code if status_code is None else status_code
        )

        error_response_dict = self.build_error_response()
        self.error_response = self.convert_to_json(
            error_response_dict=error_response_dict
        )
        log.debug(msg=self.error_response)

    def __str__(self) -> str:
        if self.details:
            return f"{self.exception_type}: {self.message} ({self.details})"
        return f"{self.exception_type}: {self.message}"

    def build_error_response(self) -> dict[str, Optional[str] | Optional[int]]:
        """
        Builds error_response from exception info following the format:
            {
                "exception" (str): exception_type,
                "message" (str): message,
                "status_code" (int): status_code,
                "details" (Optional[str]): details,
            }
        """
        return {
            "exception": self.exception_type,
            "message": self.message,
            "status_code": self.status_code,
            "details": self.details,
        }

    def convert_to_json(self, error_response_dict: dict) -> str:
        """
        Converts error_response_dict to a single-line JSON string. Provides fallback in case of TypeError.

        Returns:
            error_response (str):
                JSON string representing error_response_dict. In case of error, returns string representation\
                of error_response_dict (without JSON formatting).
        """
        try:
            error_response = json.dumps(
                obj=error_response_dict, sort_keys=False, ensure_ascii=False
            )

        except TypeError:
            for key, value in error_response_dict.items():
                error_response_dict[key] = str(object=value)

            try:
                error_response = json.dumps(
                    obj=error_response_dict, sort_keys=False, ensure_ascii=False
                )
            except Exception:  # pylint: disable=W0718
                log.warning(
                    msg=f"Failed to convert error_response_dict to JSON after converting values to string.\
                        error_response_dict: {error_response_dict}"
                )
                error_response = str(object=error_response_dict)

        return error_response
