"""Algebras with bracket given by structure constants."""

from typing import List, Optional, Sequence, Tuple

from awbkit.errors import (
    AssociativityViolation,
    Identity1Violation,
    ValidationError,
    Violation,
)
from awbkit.linalg.field import Field
from awbkit.linalg.matrix import Vector, is_zero, sub, add, unit

Tensor = Tuple[Tuple[Vector, ...], ...]


class Awb:
    """
    Finite-dimensional algebra with bracket.

    ``product[i][j]`` holds the coordinates of ``e_i e_j`` and ``bracket[i][j]``
    those of ``[e_i, e_j]``. The constructor only checks shapes, use
    :func:`validate` to check the identities.

    :param field: The ground field.
    :param product: The product tensor, ``n x n`` vectors of length ``n``.
    :param bracket: The bracket tensor, same shape.
    :param name: A label.
    """

    __slots__ = ("name", "field", "dim", "product", "bracket")

    def __init__(
        self,
        field: Field,
        product: Sequence[Sequence[Sequence]],
        bracket: Sequence[Sequence[Sequence]],
        name: str = "",
    ):
        self.field = field
        self.name = name
        self.dim = len(product)
        self.product: Tensor = _freeze(product, self.dim)
        self.bracket: Tensor = _freeze(bracket, self.dim)

    @classmethod
    def from_values(
        cls,
        field: Field,
        product: Sequence[Sequence[Sequence]],
        bracket: Sequence[Sequence[Sequence]],
        name: str = "",
    ) -> "Awb":
        """
        Builds an algebra from tensors of integers, strings or fractions.

        :param field: The ground field.
        :param product: The product tensor.
        :param bracket: The bracket tensor.
        :param name: A label.
        :return:
        """
        return cls(
            field,
            [[[field(c) for c in v] for v in row] for row in product],
            [[[field(c) for c in v] for v in row] for row in bracket],
            name,
        )

    @classmethod
    def from_sparse(
        cls,
        field: Field,
        dim: int,
        product: Sequence[Tuple[int, int, int, object]] = (),
        bracket: Sequence[Tuple[int, int, int, object]] = (),
        name: str = "",
    ) -> "Awb":
        """
        Builds an algebra from sparse entries ``(i, j, k, value)``; omitted entries are zero.

        :param field: The ground field.
        :param dim: The dimension.
        :param product: Entries of the product tensor.
        :param bracket: Entries of the bracket tensor.
        :param name: A label.
        :return:
        """
        tensors = []
        for entries in (product, bracket):
            tensor = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
            for i, j, k, value in entries:
                tensor[i][j][k] += field(value)
            tensors.append(tensor)
        return cls(field, tensors[0], tensors[1], name)

    @classmethod
    def abelian(cls, field: Field, dim: int, name: Optional[str] = None) -> "Awb":
        return cls.from_sparse(field, dim, name=f"ab({dim})" if name is None else name)

    def multiply(self, u: Sequence, v: Sequence) -> Vector:
        return _bilinear(self.field, self.product, u, v, self.dim)

    def commute(self, u: Sequence, v: Sequence) -> Vector:
        """
        Bracket ``[u, v]`` of two vectors.

        :param u: Left argument.
        :param v: Right argument.
        :return:
        """
        return _bilinear(self.field, self.bracket, u, v, self.dim)

    def basis(self, i: int) -> Vector:
        return unit(self.field, self.dim, i)

    def is_abelian(self) -> bool:
        return all(
            is_zero(self.product[i][j]) and is_zero(self.bracket[i][j])
            for i in range(self.dim)
            for j in range(self.dim)
        )

    def renamed(self, name: str) -> "Awb":
        return Awb(self.field, self.product, self.bracket, name)

    def sparse_entries(self) -> Tuple[List, List]:
        """
        Nonzero entries ``(i, j, k, value)`` of both tensors, in lexicographic order.

        :return:
        """
        result = ([], [])
        for tensor, entries in zip((self.product, self.bracket), result):
            for i in range(self.dim):
                for j in range(self.dim):
                    for k, value in enumerate(tensor[i][j]):
                        if value:
                            entries.append((i, j, k, value))
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Awb)
            and self.field == other.field
            and self.product == other.product
            and self.bracket == other.bracket
        )

    def __hash__(self) -> int:
        return hash((self.field, self.product, self.bracket))

    def __repr__(self) -> str:
        return f"Awb(name={self.name!r}, field={self.field}, dim={self.dim})"


def _freeze(tensor: Sequence[Sequence[Sequence]], dim: int) -> Tensor:
    if len(tensor) != dim or any(len(row) != dim for row in tensor):
        raise ValueError(f"tensor is not {dim} x {dim} x {dim}")
    frozen = tuple(tuple(tuple(v) for v in row) for row in tensor)
    if any(len(v) != dim for row in frozen for v in row):
        raise ValueError(f"tensor is not {dim} x {dim} x {dim}")
    return frozen


def _bilinear(field: Field, tensor: Tensor, u: Sequence, v: Sequence, dim: int) -> Vector:
    result = [field.zero] * dim
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if not b:
                continue
            c = a * b
            for k, value in enumerate(tensor[i][j]):
                if value:
                    result[k] += c * value
    return tuple(result)


def violations(algebra: Awb) -> List[Violation]:
    """
    Every basis triple where associativity or ``[ab, c] = [a, c] b + a [b, c]`` fails.

    :param algebra: The algebra.
    :return: Violations in lexicographic order of ``(i, j, k)``, associativity first.
    """
    n = algebra.dim
    e = [algebra.basis(i) for i in range(n)]
    mul, br = algebra.multiply, algebra.commute
    found: List[Violation] = []
    for i in range(n):
        for j in range(n):
            ij = algebra.product[i][j]
            for k in range(n):
                defect = sub(mul(ij, e[k]), mul(e[i], algebra.product[j][k]))
                if not is_zero(defect):
                    found.append(AssociativityViolation((i, j, k), _describe(algebra, defect)))
    for i in range(n):
        for j in range(n):
            ij = algebra.product[i][j]
            for k in range(n):
                left = br(ij, e[k])
                right = add(
                    mul(algebra.bracket[i][k], e[j]),
                    mul(e[i], algebra.bracket[j][k]),
                )
                defect = sub(left, right)
                if not is_zero(defect):
                    found.append(Identity1Violation((i, j, k), _describe(algebra, defect)))
    return found


def _describe(algebra: Awb, defect: Vector) -> str:
    return "defect " + str([algebra.field.to_str(c) for c in defect])


def check(algebra: Awb) -> Awb:
    """
    Raises when the algebra violates one of its identities.

    :param algebra: The algebra.
    :return: The same algebra.
    """
    found = violations(algebra)
    if found:
        raise ValidationError(found)
    return algebra


def validate(
    product: Sequence[Sequence[Sequence]],
    bracket: Sequence[Sequence[Sequence]],
    field: Field,
    name: str = "",
) -> Awb:
    """
    Builds and validates an algebra with bracket.

    :param product: The product tensor.
    :param bracket: The bracket tensor.
    :param field: The ground field.
    :param name: A label.
    :return: The validated algebra.
    """
    return check(Awb.from_values(field, product, bracket, name))
