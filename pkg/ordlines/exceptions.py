#!/usr/bin/python
# -*- coding: utf8


class OrdLinesException(Exception):
    pass


class UsageError(OrdLinesException):
    pass


class DegenerateInputError(OrdLinesException):
    pass


class DomainError(OrdLinesException):
    pass


class GenerationError(OrdLinesException):
    pass


class InvariantViolation(OrdLinesException):
    pass


class PointSetFormatError(OrdLinesException):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InvalidHeader(PointSetFormatError):
    pass


class MalformedRational(PointSetFormatError):
    pass


class WrongCoordinateCount(PointSetFormatError):
    pass


class DuplicatePoint(PointSetFormatError):
    pass


class UnknownField(PointSetFormatError):
    pass
