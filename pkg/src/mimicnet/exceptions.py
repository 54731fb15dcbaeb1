class MimicError(Exception):
    """Base class for every error raised by mimicnet."""


class InvalidTerminalSetError(MimicError, ValueError):
    pass


class IllegalMergeError(MimicError, ValueError):
    pass


class VertexNotFoundError(MimicError, KeyError):
    pass


class InvalidSideError(MimicError, ValueError):
    pass


class ConnectivityError(MimicError, ValueError):
    pass


class OracleTooLargeError(MimicError, ValueError):
    pass


class ProfileMismatchError(MimicError, ValueError):
    pass


class PreconditionError(MimicError, ValueError):
    pass


class ConstructionError(MimicError, RuntimeError):
    pass


class ParameterError(MimicError, ValueError):
    pass


class SizeGuardError(MimicError, ValueError):
    pass


class ParseError(MimicError, ValueError):
    def __init__(self, message, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)
        self.line = line
        self.field = field
