"""Exception hierarchy shared by every module of the package."""


class PartialHopfError(Exception):
    """Base class for all errors raised by partialhopf."""


class MissingParameter(PartialHopfError, KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"no value assigned to parameter {self.name!r}"


class NotDivisible(PartialHopfError, ArithmeticError):
    """Raised by exact polynomial division when the divisor does not divide."""


class AlgebraMismatch(PartialHopfError, ValueError):
    """Operands live in different algebras."""


class UnknownBasisLabel(PartialHopfError, KeyError):
    def __init__(self, label: str, algebra: str = ""):
        super().__init__(label)
        self.label = label
        self.algebra = algebra

    def __str__(self) -> str:
        where = f" in algebra {self.algebra!r}" if self.algebra else ""
        return f"unknown basis label {self.label!r}{where}"


class NotInSpan(PartialHopfError, ValueError):
    """An element is not in the span of the extracted crossed-product basis."""


class UnknownCatalogId(PartialHopfError, KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown catalog id {self.name!r}"


class DefinitionError(PartialHopfError, ValueError):
    """Problem in a definition document, located by 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = ""):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(str(self))

    def __str__(self) -> str:
        loc = f"{self.source or '<input>'}:{self.line}:{self.column}: " if self.line else ""
        return f"{loc}{self.message}"


class DefinitionSyntaxError(DefinitionError):
    pass


class UndeclaredLabel(DefinitionError):
    def __init__(self, name: str, line: int = 0, column: int = 0, source: str = ""):
        self.name = name
        super().__init__(f"undeclared basis label {name!r}", line, column, source)


class UndeclaredParameter(DefinitionError):
    def __init__(self, name: str, line: int = 0, column: int = 0, source: str = ""):
        self.name = name
        super().__init__(f"undeclared parameter {name!r}", line, column, source)


class DuplicateBlock(DefinitionError):
    def __init__(self, name: str, line: int = 0, column: int = 0, source: str = ""):
        self.name = name
        super().__init__(f"duplicate block {name!r}", line, column, source)
