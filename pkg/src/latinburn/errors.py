"""Exception types raised across the package."""


class LatinBurnError(Exception):
    """Base class for all package errors."""


class ShapeError(LatinBurnError, ValueError):
    pass


class RowViolation(LatinBurnError, ValueError):
    def __init__(self, row, symbol=None):
        self.row = row
        self.symbol = symbol
        super().__init__(f"row {row} repeats symbol {symbol}")


class ColViolation(LatinBurnError, ValueError):
    def __init__(self, col, symbol=None):
        self.col = col
        self.symbol = symbol
        super().__init__(f"column {col} repeats symbol {symbol}")


class InvalidOrder(LatinBurnError, ValueError):
    pass


class OrderTooLarge(LatinBurnError, ValueError):
    pass


class ParseError(LatinBurnError, ValueError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class BadSeed(LatinBurnError, ValueError):
    pass


class NoSolutionInRange(LatinBurnError):
    pass


class UnderdeterminedClosure(LatinBurnError, ValueError):
    pass


class NotAnEntry(LatinBurnError, ValueError):
    pass


class DuplicateEntry(LatinBurnError, ValueError):
    pass


class NotASequence(LatinBurnError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"entry at position {index} has weight 0")


class NotACover(LatinBurnError, ValueError):
    def __init__(self, uncovered):
        self.uncovered = tuple(uncovered)
        super().__init__(f"{len(self.uncovered)} line(s) uncovered: {list(self.uncovered)}")


class NotABurningSet(LatinBurnError, ValueError):
    pass


class MalformedChain(LatinBurnError, ValueError):
    pass


class MultipleWeight3(LatinBurnError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"entry at position {index} has weight 3")


class NotLatin(LatinBurnError, ValueError):
    pass


class NoIdentity(LatinBurnError, ValueError):
    pass


class NotAssociative(LatinBurnError, ValueError):
    def __init__(self, a, b, c):
        self.triple = (a, b, c)
        super().__init__(f"({a}*{b})*{c} != {a}*({b}*{c})")


class ParamTooLarge(LatinBurnError, ValueError):
    pass


class BadElement(LatinBurnError, ValueError):
    pass


class BadLine(LatinBurnError, ValueError):
    pass
