"""Error kinds raised by ``awbkit``."""

from typing import List, Optional, Sequence, Tuple


class AwbError(ValueError):
    """
    Base class for every error raised by the library.
    """


class FieldMismatch(AwbError):
    """
    Two objects defined over different ground fields were combined.
    """

    def __init__(self, left, right):
        super().__init__(f"field mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class Violation(AwbError):
    """
    A structural identity fails at a given tuple of basis indices.

    :param indices: The basis indices where the identity fails.
    :param detail: Optional human-readable detail.
    """

    kind = "violation"

    def __init__(self, indices: Sequence[int], detail: Optional[str] = None):
        self.indices: Tuple[int, ...] = tuple(indices)
        self.detail = detail
        message = f"{self.kind} at {self.indices}"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class AssociativityViolation(Violation):
    kind = "associativity"


class Identity1Violation(Violation):
    kind = "identity [ab,c] = [a,c]b + a[b,c]"


class CocycleViolation(Violation):
    kind = "cocycle f(ab,c) = f(a,bc)"


class Eq6Violation(Violation):
    kind = "g(ab)(c) = f([a,c],b) + f(a,[b,c])"


class ValidationError(AwbError):
    """
    Aggregates every violation found while validating a structure.

    :param violations: The violations, in lexicographic order of their indices.
    """

    def __init__(self, violations: List[Violation]):
        self.violations = list(violations)
        lines = [str(violation) for violation in self.violations[:10]]
        if len(self.violations) > 10:
            lines.append(f"... and {len(self.violations) - 10} more")
        super().__init__("\n".join(lines))


class FactorSetError(ValidationError):
    """
    A factor set fails its cocycle or reduced compatibility condition.
    """


class NotAnIdeal(AwbError):
    pass


class NotCentral(AwbError):
    """
    The kernel of an extension is not central.

    :param pair: (kernel basis index, algebra basis index) of a failing pair.
    """

    def __init__(self, pair: Tuple[int, int], detail: str = ""):
        self.pair = tuple(pair)
        super().__init__(f"kernel is not central at {self.pair} {detail}".rstrip())


class NotAlgebraMap(AwbError):
    pass


class NotIso(AwbError):
    pass


class NotAbelian(AwbError):
    pass


class NotStem(AwbError):
    pass


class InvalidCertificate(AwbError):
    pass


class UnsupportedField(AwbError):
    pass


class UnknownName(AwbError):
    pass


class DimensionGuardExceeded(AwbError):
    pass


class ParseError(AwbError):
    """
    Malformed input file.

    :param message: What went wrong.
    :param context: Where it went wrong, such as ``line 3`` or ``product[2]``.
    """

    def __init__(self, message: str, context: Optional[str] = None):
        self.context = context
        super().__init__(f"{context}: {message}" if context else message)
