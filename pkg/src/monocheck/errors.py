"""Exception hierarchy shared by all modules."""


class MonoCheckError(Exception):
    pass


class ContextError(MonoCheckError, ValueError):
    """Operands live in different polynomial rings."""


class DegenerateInputError(MonoCheckError, ValueError):
    """An operation received the zero polynomial where it is undefined."""


class ContractError(MonoCheckError, ValueError):
    """A documented precondition of a rewriting operation does not hold."""


class ResourceLimitError(MonoCheckError, RuntimeError):
    """A time, system-count or enumeration bound was exceeded.

    ``kind`` is ``"timeout"``, ``"systems"``, ``"enumeration"`` or ``"oom"``;
    ``stats`` carries a counter snapshot taken when the limit was hit.
    """

    def __init__(self, message, kind="timeout", stats=None):
        super().__init__(message)
        self.kind = kind
        self.stats = dict(stats or {})


class ParseError(MonoCheckError, ValueError):
    def __init__(self, message, line=0, column=0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column
