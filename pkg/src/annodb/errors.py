"""Exception types shared across the engine."""


class AnnodbError(Exception):
    """Base class for every error raised by annodb."""


class ParseError(AnnodbError):
    """A-SQL syntax error with source position and the tokens that were expected."""

    def __init__(self, message, line=0, col=0, expected=()):
        self.line = line
        self.col = col
        self.expected = frozenset(expected)
        self.statement_index = None
        loc = f" at line {line}:{col}" if line else ""
        exp = f" (expected {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message}{loc}{exp}")


class UnknownKeywordError(ParseError):
    """Statement begins with a word that is not an A-SQL command."""


# --- catalog / storage ---

class UnknownTableError(AnnodbError):
    pass


class UnknownColumnError(AnnodbError):
    pass


class DuplicateTableError(AnnodbError):
    pass


class BadColumnError(AnnodbError):
    pass


class TypeMismatchError(AnnodbError):
    pass


class HeaderMismatchError(AnnodbError):
    pass


class RaggedRowError(AnnodbError):
    def __init__(self, message, line):
        self.line = line
        super().__init__(f"{message} (line {line})")


class CorruptFormatError(AnnodbError):
    def __init__(self, file, reason):
        self.file = str(file)
        self.reason = reason
        super().__init__(f"{file}: {reason}")


class VersionMismatchError(AnnodbError):
    pass


# --- annotations ---

class UnknownAnnotationTableError(AnnodbError):
    pass


class DuplicateAnnotationTableError(AnnodbError):
    pass


class MalformedXmlError(AnnodbError):
    pass


class MissingRequiredTagError(AnnodbError):
    pass


class WriterForbiddenError(AnnodbError):
    pass


class EmptyTargetError(AnnodbError):
    pass


class SystemTableError(AnnodbError):
    pass


class InvertedRangeError(AnnodbError):
    pass


# --- dependencies ---

class CycleDetectedError(AnnodbError):
    def __init__(self, path):
        self.path = list(path)
        pretty = " -> ".join(f"{t}.{c}" for t, c in self.path)
        super().__init__(f"dependency cycle: {pretty}")


class UnknownProcedureError(AnnodbError):
    pass


class ArityMismatchError(AnnodbError):
    pass


class BadRuleError(AnnodbError):
    pass


class MalformedRunsError(AnnodbError):
    pass


# --- approval ---

class AlreadyMonitoredError(AnnodbError):
    pass


class NotApproverError(AnnodbError):
    pass


class NotPendingError(AnnodbError):
    pass


class UnknownOpError(AnnodbError):
    pass


class InverseConflictError(AnnodbError):
    pass
