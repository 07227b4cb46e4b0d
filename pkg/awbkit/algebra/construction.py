"""Quotients, products, subalgebras and D-bracket constructions."""

from dataclasses import dataclass
from typing import Optional, Sequence

from awbkit.algebra.awb import Awb, violations
from awbkit.algebra.ideal import Subspace, ideal_flags, require_ideal
from awbkit.algebra.morphism import AwbMorphism
from awbkit.errors import AssociativityViolation, FieldMismatch, NotAnIdeal, ValidationError
from awbkit.linalg import matrix as mx
from awbkit.linalg import subspace as sp
from awbkit.linalg.field import Field
from awbkit.linalg.matrix import Matrix, sub, unit


@dataclass(frozen=True)
class Quotient:
    """
    Quotient ``A / I`` with its projection and the section ``ē_c ↦ e_c`` on the
    non-pivot coordinates of ``I``.
    """

    algebra: Awb
    ideal: Subspace
    projection: AwbMorphism
    section: Matrix


def quotient(algebra: Awb, ideal: Subspace, name: Optional[str] = None) -> Quotient:
    """
    Quotient of an algebra by a two-sided ideal.

    :param algebra: The algebra ``A``.
    :param ideal: The two-sided ideal ``I``.
    :param name: Label of the quotient, ``A/I`` by default.
    :return:
    """
    require_ideal(algebra, ideal, "I")
    field = algebra.field
    basis = ideal.basis
    kept = sp.quotient_indices(basis)

    def project(vector):
        return sp.quotient_coordinates(basis, vector)

    product = [[project(algebra.product[a][b]) for b in kept] for a in kept]
    bracket = [[project(algebra.bracket[a][b]) for b in kept] for a in kept]
    label = name if name is not None else f"{algebra.name or 'A'}/I"
    result = Awb(field, product, bracket, label)

    projection = AwbMorphism.from_images(
        algebra, result, [project(algebra.basis(i)) for i in range(algebra.dim)]
    )
    section = Matrix.from_columns(field, [unit(field, algebra.dim, c) for c in kept], algebra.dim)
    return Quotient(result, ideal, projection, section)


def direct_product(first: Awb, second: Awb, name: Optional[str] = None) -> Awb:
    """
    Direct product with componentwise operations, on the concatenated basis.

    :param first: The algebra ``A``.
    :param second: The algebra ``B``.
    :param name: Label of the product.
    :return:
    """
    if first.field != second.field:
        raise FieldMismatch(first.field, second.field)
    field = first.field
    n, m = first.dim, second.dim
    zero = (field.zero,) * (n + m)

    def tensor(left, right):
        result = []
        for i in range(n + m):
            row = []
            for j in range(n + m):
                if i < n and j < n:
                    row.append(left[i][j] + (field.zero,) * m)
                elif i >= n and j >= n:
                    row.append((field.zero,) * n + right[i - n][j - n])
                else:
                    row.append(zero)
            result.append(row)
        return result

    label = name if name is not None else f"{first.name or 'A'}x{second.name or 'B'}"
    return Awb(
        field,
        tensor(first.product, second.product),
        tensor(first.bracket, second.bracket),
        label,
    )


def d_bracket(
    field: Field,
    product: Sequence[Sequence[Sequence]],
    derivation: Matrix,
    name: str = "",
) -> Awb:
    """
    Algebra with bracket ``[a, b] = a D(b) - D(b) a`` on an associative algebra.

    :param field: The ground field.
    :param product: An associative product tensor.
    :param derivation: A square matrix ``D``, column ``j`` being ``D(e_j)``.
    :param name: A label.
    :return:
    """
    n = len(product)
    assert derivation.shape == (n, n)
    zero_bracket = [[[0] * n for _ in range(n)] for _ in range(n)]
    base = Awb.from_values(field, product, zero_bracket, name)
    found = [v for v in violations(base) if isinstance(v, AssociativityViolation)]
    if found:
        raise ValidationError(found)
    e = [base.basis(i) for i in range(n)]
    images = derivation.columns()
    bracket = [
        [sub(base.multiply(e[i], images[j]), base.multiply(images[j], e[i])) for j in range(n)]
        for i in range(n)
    ]
    return Awb(field, base.product, bracket, name)


def tautological(field: Field, product: Sequence[Sequence[Sequence]], name: str = "") -> Awb:
    """
    The tautological algebra with bracket ``[a, b] = ab - ba``.

    :param field: The ground field.
    :param product: An associative product tensor.
    :param name: A label.
    :return:
    """
    return d_bracket(field, product, Matrix.identity(field, len(product)), name)


def restrict_to_subalgebra(algebra: Awb, space: Subspace, name: Optional[str] = None):
    """
    Structure constants of a subalgebra in its canonical basis.

    :param algebra: The algebra.
    :param space: A subspace closed under product and bracket.
    :param name: Label of the subalgebra.
    :return: The subalgebra and its inclusion map.
    """
    if not ideal_flags(algebra, space).subalgebra:
        raise NotAnIdeal("subspace is not closed under product and bracket")
    basis = space.vectors
    product = [[space.coordinates(algebra.multiply(x, y)) for y in basis] for x in basis]
    bracket = [[space.coordinates(algebra.commute(x, y)) for y in basis] for x in basis]
    label = name if name is not None else f"sub({algebra.name or 'A'})"
    result = Awb(algebra.field, product, bracket, label)
    inclusion = AwbMorphism(result, algebra, space.basis.transpose())
    return result, inclusion


def rebase(algebra: Awb, basis: Sequence[Sequence], name: Optional[str] = None):
    """
    The same algebra written in another basis.

    :param algebra: The algebra.
    :param basis: Rows of an invertible matrix, the new basis in old coordinates.
    :param name: Label of the result.
    :return: The rewritten algebra and the isomorphism from it onto ``algebra``.
    """
    field = algebra.field
    n = algebra.dim
    change = Matrix(field, basis, n).transpose()
    inverse = mx.inverse(change)
    rows = change.columns()
    product = [[inverse.apply(algebra.multiply(x, y)) for y in rows] for x in rows]
    bracket = [[inverse.apply(algebra.commute(x, y)) for y in rows] for x in rows]
    result = Awb(field, product, bracket, algebra.name if name is None else name)
    return result, AwbMorphism(result, algebra, change)
