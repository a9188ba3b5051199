"""Application layer exceptions."""

from typing import Optional


class ApplicationException(Exception):
    """Application layer exception."""

    def __init__(self, message: str, cause: Optional[Exception] = None):
        super().__init__(message)
        self.message = message
        self.cause = cause


class HandlerNotRegistered(ApplicationException):
    """Raised when a command reaches the bus without a registered handler."""
