"""
Subspace arithmetic on canonical bases.

A subspace of ``K^n`` is represented by the RREF matrix whose rows span it. Two
subspaces are equal iff their canonical matrices are equal.
"""

from typing import Optional, Sequence, Tuple

from awbkit.linalg.field import Field
from awbkit.linalg.matrix import Matrix, Vector, kernel, rref, is_zero, unit


def span(field: Field, vectors: Sequence[Sequence], dim: int) -> Matrix:
    return rref(Matrix(field, vectors, dim))[0]


def zero_space(field: Field, dim: int) -> Matrix:
    return Matrix(field, [], dim)


def full_space(field: Field, dim: int) -> Matrix:
    return Matrix.identity(field, dim)


def pivots(u: Matrix) -> Tuple[int, ...]:
    """
    Pivot columns of a canonical basis.

    :param u: A canonical basis.
    :return:
    """
    result = []
    for row in u.entries:
        for k, value in enumerate(row):
            if value:
                result.append(k)
                break
    return tuple(result)


def subspace_sum(u: Matrix, v: Matrix) -> Matrix:
    u.field.check_same(v.field)
    return rref(Matrix.vstack(u.field, u.cols, u, v))[0]


def reduce(u: Matrix, vector: Sequence) -> Vector:
    """
    Remainder of a vector modulo a canonical basis: the vector with every pivot
    coordinate cleared.

    :param u: A canonical basis.
    :param vector: The vector.
    :return:
    """
    result = list(vector)
    for row, p in zip(u.entries, pivots(u)):
        c = result[p]
        if c:
            for k, value in enumerate(row):
                if value:
                    result[k] -= c * value
    return tuple(result)


def contains(u: Matrix, vector: Sequence) -> bool:
    return is_zero(reduce(u, vector))


def is_subspace(u: Matrix, v: Matrix) -> bool:
    """
    Whether ``u`` is contained in ``v``.

    :param u: A canonical basis.
    :param v: A canonical basis.
    :return:
    """
    return all(contains(v, row) for row in u.entries)


def intersection(u: Matrix, v: Matrix) -> Matrix:
    """
    Canonical basis of ``u ∩ v``, from the kernel of ``[u^T | -v^T]``.

    :param u: A canonical basis.
    :param v: A canonical basis.
    :return:
    """
    field = u.field
    field.check_same(v.field)
    if not u.rows or not v.rows:
        return zero_space(field, u.cols)
    stacked = Matrix.hstack(field, u.cols, u.transpose(), (-v).transpose())
    null = kernel(stacked)
    vectors = [
        Matrix(field, [solution[: u.rows]], u.rows) @ u
        for solution in null.entries
    ]
    return span(field, [vector.row(0) for vector in vectors], u.cols)


def complement(u: Matrix) -> Matrix:
    """
    Span of the standard basis vectors at the non-pivot coordinates of ``u``.

    :param u: A canonical basis.
    :return:
    """
    taken = set(pivots(u))
    return Matrix(
        u.field,
        [unit(u.field, u.cols, k) for k in range(u.cols) if k not in taken],
        u.cols,
    )


def coordinates(v: Matrix, vector: Sequence) -> Optional[Vector]:
    """
    Coordinates of a vector in the canonical basis ``v``.

    In an RREF basis the coordinate along row ``r`` is the vector's entry at the
    pivot of ``r``.

    :param v: A canonical basis.
    :param vector: The vector.
    :return: The coordinates, or ``None`` when the vector is not in ``v``.
    """
    if not contains(v, vector):
        return None
    return tuple(vector[p] for p in pivots(v))


def relative_complement(u: Matrix, v: Matrix) -> Matrix:
    """
    Complement of ``u`` inside ``v``, spanned by the rows of ``v`` at the non-pivot
    indices of the coordinates of ``u`` in ``v``.

    :param u: A canonical basis contained in ``v``.
    :param v: A canonical basis.
    :return: A canonical basis.
    """
    assert is_subspace(u, v)
    field = v.field
    local = rref(
        Matrix(field, [coordinates(v, row) for row in u.entries], v.rows)
    )[1]
    taken = set(local)
    return Matrix(
        field,
        [v.row(k) for k in range(v.rows) if k not in taken],
        v.cols,
    )


def quotient_indices(u: Matrix) -> Tuple[int, ...]:
    taken = set(pivots(u))
    return tuple(k for k in range(u.cols) if k not in taken)


def quotient_coordinates(u: Matrix, vector: Sequence) -> Vector:
    """
    Coordinates of the class of a vector in ``K^n / u``, on the basis given by the
    non-pivot standard vectors.

    :param u: A canonical basis.
    :param vector: The vector.
    :return:
    """
    remainder = reduce(u, vector)
    return tuple(remainder[k] for k in quotient_indices(u))


def dimension(u: Matrix) -> int:
    return u.rows
