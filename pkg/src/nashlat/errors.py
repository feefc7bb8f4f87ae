"""Exception types shared across the package."""


class NashlatError(Exception):
    pass


class MixedFields(NashlatError):
    """Operands reference different coefficient fields."""


class DimensionMismatch(NashlatError):
    pass


class InvalidInput(NashlatError):
    """Input fails its structural validator."""


class WrongDimension(NashlatError):
    """Classification routine called outside its dimension range."""


class NotAnExtension(NashlatError):
    """Extension-class descriptor requested for a non-extension."""


class PoleAt(NashlatError):
    """Evaluation point too close to a lattice point."""

    def __init__(self, z):
        super().__init__(f"evaluation point {z} is within pole tolerance of the period lattice")
        self.z = z


class DocSyntaxError(NashlatError):
    """Document parse failure, with 1-based position."""

    def __init__(self, line, col, message):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class UnknownReference(NashlatError):
    pass
