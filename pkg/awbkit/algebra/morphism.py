"""Linear maps between algebras and their structural checks."""

from dataclasses import dataclass, field as dataclass_field
from typing import List, Sequence, Tuple

from awbkit.algebra.awb import Awb
from awbkit.algebra.ideal import Subspace
from awbkit.errors import NotAlgebraMap, NotIso
from awbkit.linalg import matrix as mx
from awbkit.linalg.matrix import Matrix, Vector


class AwbMorphism:
    """
    Linear map between two algebras over the same field.

    The matrix is ``dim(target) x dim(source)``; column ``i`` is the image of ``e_i``.

    :param source: The source algebra.
    :param target: The target algebra.
    :param matrix: The matrix of the map.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: Awb, target: Awb, matrix: Matrix):
        source.field.check_same(target.field)
        source.field.check_same(matrix.field)
        if matrix.shape != (target.dim, source.dim):
            raise ValueError(
                f"map matrix has shape {matrix.shape}, expected {(target.dim, source.dim)}"
            )
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def identity(cls, algebra: Awb) -> "AwbMorphism":
        return cls(algebra, algebra, Matrix.identity(algebra.field, algebra.dim))

    @classmethod
    def zero(cls, source: Awb, target: Awb) -> "AwbMorphism":
        return cls(source, target, Matrix.zeros(source.field, target.dim, source.dim))

    @classmethod
    def from_images(cls, source: Awb, target: Awb, images: Sequence[Sequence]) -> "AwbMorphism":
        return cls(source, target, Matrix.from_columns(source.field, images, target.dim))

    def __call__(self, vector: Sequence) -> Vector:
        return self.matrix.apply(vector)

    def image_of(self, i: int) -> Vector:
        return self.matrix.column(i)

    def compose(self, other: "AwbMorphism") -> "AwbMorphism":
        """
        The composite ``self ∘ other``.

        :param other: A map whose target is the source of ``self``.
        :return:
        """
        assert other.target.dim == self.source.dim
        return AwbMorphism(other.source, self.target, self.matrix @ other.matrix)

    @property
    def rank(self) -> int:
        return mx.rank(self.matrix)

    def is_injective(self) -> bool:
        return self.rank == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank == self.target.dim

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def kernel(self) -> Subspace:
        return Subspace(self.source, mx.kernel(self.matrix))

    def image(self) -> Subspace:
        return Subspace(self.target, mx.image(self.matrix))

    def inverse(self) -> "AwbMorphism":
        if not self.is_bijective():
            raise NotIso("map is not bijective")
        return AwbMorphism(self.target, self.source, mx.inverse(self.matrix))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AwbMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"AwbMorphism({self.source.name or self.source.dim} -> {self.target.name or self.target.dim})"


@dataclass
class MorphismReport:
    product_failures: List[Tuple[int, int]] = dataclass_field(default_factory=list)
    bracket_failures: List[Tuple[int, int]] = dataclass_field(default_factory=list)
    injective: bool = False
    surjective: bool = False

    @property
    def is_algebra_map(self) -> bool:
        return not self.product_failures and not self.bracket_failures

    @property
    def is_isomorphism(self) -> bool:
        return self.is_algebra_map and self.injective and self.surjective


def check_morphism(phi: AwbMorphism) -> MorphismReport:
    """
    Checks that a linear map preserves products and brackets on all basis pairs, and
    reports injectivity and surjectivity.

    :param phi: The map.
    :return:
    """
    source, target = phi.source, phi.target
    images = [phi.image_of(i) for i in range(source.dim)]
    report = MorphismReport()
    for i in range(source.dim):
        for j in range(source.dim):
            if phi(source.product[i][j]) != target.multiply(images[i], images[j]):
                report.product_failures.append((i, j))
            if phi(source.bracket[i][j]) != target.commute(images[i], images[j]):
                report.bracket_failures.append((i, j))
    rank = phi.rank
    report.injective = rank == source.dim
    report.surjective = rank == target.dim
    return report


def require_algebra_map(phi: AwbMorphism) -> MorphismReport:
    report = check_morphism(phi)
    if not report.is_algebra_map:
        failures = report.product_failures[:1] + report.bracket_failures[:1]
        raise NotAlgebraMap(f"map does not preserve the structure at {failures}")
    return report


def require_isomorphism(phi: AwbMorphism) -> MorphismReport:
    report = check_morphism(phi)
    if not report.is_isomorphism:
        raise NotIso(
            f"map is not an algebra isomorphism: algebra map {report.is_algebra_map}, "
            f"injective {report.injective}, surjective {report.surjective}"
        )
    return report


def restrict_matrix(phi: AwbMorphism, domain: Subspace, codomain: Subspace) -> Matrix:
    """
    Matrix of ``phi`` restricted to ``domain`` with values in ``codomain``, in the
    canonical bases of both subspaces.

    :param phi: The map.
    :param domain: A subspace of the source.
    :param codomain: A subspace of the target containing the image of ``domain``.
    :return: A ``dim(codomain) x dim(domain)`` matrix.
    """
    columns = [codomain.coordinates(phi(v)) for v in domain.vectors]
    return Matrix.from_columns(phi.source.field, columns, codomain.dim)
