"""Exception types shared across the package."""


class NotDivisible(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class ZeroPolynomial(ValueError):
    pass


class DegreeExceedsWindow(ValueError):
    pass


class InvalidShape(ValueError):
    pass


class TooManyRows(ValueError):
    pass


class WrongShape(ValueError):
    pass


class WrongDescentCount(ValueError):
    pass


class NotInImage(ValueError):
    """The tableau has no preimage under the (m,k,1) -> (m+1,k+1) map."""


class InvalidParams(ValueError):
    pass


class InvalidN(ValueError):
    pass
