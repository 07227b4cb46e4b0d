"""Subspaces, ideals, commutator ideals and the center."""

from dataclasses import dataclass
from typing import Iterable, List, Sequence

from awbkit.algebra.awb import Awb
from awbkit.errors import NotAnIdeal
from awbkit.linalg import subspace as sp
from awbkit.linalg.matrix import Matrix, Vector, kernel


class Subspace:
    """
    Subspace of an algebra, stored as its canonical RREF basis in ambient coordinates.

    :param ambient: The algebra.
    :param basis: Any matrix whose rows span the subspace; it is canonicalized.
    """

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: Awb, basis: Matrix):
        assert basis.cols == ambient.dim
        ambient.field.check_same(basis.field)
        self.ambient = ambient
        self.basis = sp.span(ambient.field, basis.entries, ambient.dim)

    @classmethod
    def spanned_by(cls, ambient: Awb, vectors: Iterable[Sequence]) -> "Subspace":
        return cls(ambient, Matrix(ambient.field, list(vectors), ambient.dim))

    @classmethod
    def zero(cls, ambient: Awb) -> "Subspace":
        return cls(ambient, sp.zero_space(ambient.field, ambient.dim))

    @classmethod
    def whole(cls, ambient: Awb) -> "Subspace":
        return cls(ambient, sp.full_space(ambient.field, ambient.dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> List[Vector]:
        return list(self.basis.entries)

    def contains(self, vector: Sequence) -> bool:
        return sp.contains(self.basis, vector)

    def is_within(self, other: "Subspace") -> bool:
        return sp.is_subspace(self.basis, other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, sp.subspace_sum(self.basis, other.basis))

    def __and__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, sp.intersection(self.basis, other.basis))

    def coordinates(self, vector: Sequence) -> Vector:
        coords = sp.coordinates(self.basis, vector)
        if coords is None:
            raise ValueError("vector is not in the subspace")
        return coords

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, basis={self.basis.to_strings()})"


@dataclass(frozen=True)
class IdealFlags:
    subalgebra: bool
    left_ideal: bool
    right_ideal: bool

    @property
    def two_sided(self) -> bool:
        return self.left_ideal and self.right_ideal


def _closed(space: Subspace, products: Iterable[Vector]) -> bool:
    return all(space.contains(v) for v in products)


def ideal_flags(algebra: Awb, space: Subspace) -> IdealFlags:
    """
    Closure flags of a subspace.

    A left ideal satisfies ``A S ⊆ S`` and ``[A, S] ⊆ S``; a right ideal
    ``S A ⊆ S`` and ``[S, A] ⊆ S``.

    :param algebra: The algebra.
    :param space: The subspace.
    :return:
    """
    s = space.vectors
    e = [algebra.basis(i) for i in range(algebra.dim)]
    mul, br = algebra.multiply, algebra.commute
    return IdealFlags(
        subalgebra=_closed(space, (op(x, y) for x in s for y in s for op in (mul, br))),
        left_ideal=_closed(space, (op(a, x) for a in e for x in s for op in (mul, br))),
        right_ideal=_closed(space, (op(x, a) for a in e for x in s for op in (mul, br))),
    )


def require_ideal(algebra: Awb, space: Subspace, label: str = "subspace"):
    flags = ideal_flags(algebra, space)
    if not flags.two_sided:
        raise NotAnIdeal(f"{label} is not a two-sided ideal of {algebra.name or 'the algebra'}: {flags}")


def _products(algebra: Awb, xs: Sequence[Vector], ys: Sequence[Vector]):
    for x in xs:
        for y in ys:
            yield algebra.multiply(x, y)
            yield algebra.multiply(y, x)
            yield algebra.commute(x, y)
            yield algebra.commute(y, x)


def commutator_ideal(algebra: Awb, first: Subspace, second: Subspace) -> Subspace:
    """
    The commutator ideal ``[[I, J]]``.

    Starts from the span of ``ij, ji, [i, j], [j, i]`` and closes it under products and
    brackets with elements of ``I`` and of ``J`` on both sides. The closure is taken
    relative to ``I`` and ``J``, not to the whole algebra.

    :param algebra: The algebra.
    :param first: A two-sided ideal ``I``.
    :param second: A two-sided ideal ``J``.
    :return:
    """
    require_ideal(algebra, first, "I")
    require_ideal(algebra, second, "J")
    current = Subspace.spanned_by(algebra, _products(algebra, first.vectors, second.vectors))
    acting = first.vectors + second.vectors
    frontier = current.vectors
    while frontier:
        grown = current + Subspace.spanned_by(algebra, _products(algebra, frontier, acting))
        if grown.dim == current.dim:
            break
        frontier = [v for v in grown.vectors if not current.contains(v)]
        current = grown
    return current


def derived_algebra(algebra: Awb) -> Subspace:
    whole = Subspace.whole(algebra)
    return commutator_ideal(algebra, whole, whole)


def center(algebra: Awb) -> Subspace:
    """
    The center ``Z(A)``: elements whose products and brackets with every basis vector
    vanish on both sides.

    :param algebra: The algebra.
    :return:
    """
    n = algebra.dim
    rows = []
    for j in range(n):
        for pick in (
            lambda i: algebra.product[i][j],
            lambda i: algebra.product[j][i],
            lambda i: algebra.bracket[i][j],
            lambda i: algebra.bracket[j][i],
        ):
            columns = [pick(i) for i in range(n)]
            rows.extend([columns[i][k] for i in range(n)] for k in range(n))
    system = Matrix(algebra.field, rows, n)
    return Subspace(algebra, kernel(system))
