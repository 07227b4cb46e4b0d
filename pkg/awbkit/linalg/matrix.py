"""Dense exact matrices, row reduction and linear solving."""

from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from awbkit.linalg.field import Field

Vector = Tuple


class Matrix:
    """
    Immutable dense matrix whose entries are scalars of a single field.

    Rows are tuples of domain elements. The constructor trusts its input; use
    :meth:`Matrix.of` to convert integers, strings or fractions.

    :param field: The ground field.
    :param entries: Row-major entries.
    :param cols: The number of columns, required when there are no rows.
    """

    __slots__ = ("field", "entries", "rows", "cols")

    def __init__(
        self,
        field: Field,
        entries: Iterable[Sequence],
        cols: Optional[int] = None,
    ):
        self.field = field
        self.entries: Tuple[Vector, ...] = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        if self.rows:
            self.cols = len(self.entries[0])
            assert all(len(row) == self.cols for row in self.entries)
            assert cols is None or cols == self.cols
        else:
            assert cols is not None
            self.cols = cols

    @classmethod
    def of(cls, field: Field, rows: Iterable[Sequence], cols: Optional[int] = None):
        return cls(field, [[field(value) for value in row] for row in rows], cols)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, [[field.zero] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(
            field,
            [[field.one if i == j else field.zero for j in range(n)] for i in range(n)],
            n,
        )

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], rows: int):
        """
        Builds a matrix from its columns.

        :param field: The ground field.
        :param columns: The columns.
        :param rows: The number of rows, required when there are no columns.
        :return:
        """
        return cls(field, [[column[i] for column in columns] for i in range(rows)], len(columns))

    @classmethod
    def vstack(cls, field: Field, cols: int, *blocks: "Matrix") -> "Matrix":
        entries = []
        for block in blocks:
            assert block.cols == cols
            entries.extend(block.entries)
        return cls(field, entries, cols)

    @classmethod
    def hstack(cls, field: Field, rows: int, *blocks: "Matrix") -> "Matrix":
        for block in blocks:
            assert block.rows == rows
        return cls(
            field,
            [sum((block.entries[i] for block in blocks), ()) for i in range(rows)],
            sum(block.cols for block in blocks),
        )

    @classmethod
    def block_diagonal(cls, field: Field, *blocks: "Matrix") -> "Matrix":
        cols = sum(block.cols for block in blocks)
        entries = []
        offset = 0
        for block in blocks:
            for row in block.entries:
                entries.append(
                    (field.zero,) * offset
                    + row
                    + (field.zero,) * (cols - offset - block.cols)
                )
            offset += block.cols
        return cls(field, entries, cols)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.entries], (self.rows, self.cols), self.field.domain)

    @classmethod
    def from_domain_matrix(cls, field: Field, matrix: DomainMatrix) -> "Matrix":
        rows, cols = matrix.shape
        return cls(field, matrix.to_list(), cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [self.column(j) for j in range(self.cols)],
            self.rows,
        )

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [self.entries[i] for i in indices], self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self.field.check_same(other.field)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        if not (self.rows and self.cols and other.cols):
            return Matrix.zeros(self.field, self.rows, other.cols)
        product = self.to_domain_matrix() * other.to_domain_matrix()
        return Matrix.from_domain_matrix(self.field, product)

    def __add__(self, other: "Matrix") -> "Matrix":
        self.field.check_same(other.field)
        assert self.shape == other.shape
        return Matrix(
            self.field,
            [add(a, b) for a, b in zip(self.entries, other.entries)],
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self.field.check_same(other.field)
        assert self.shape == other.shape
        return Matrix(
            self.field,
            [sub(a, b) for a, b in zip(self.entries, other.entries)],
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        return self.scale(-self.field.one)

    def scale(self, c) -> "Matrix":
        return Matrix(self.field, [scale(c, row) for row in self.entries], self.cols)

    def apply(self, vector: Sequence) -> Vector:
        """
        Matrix-vector product ``M v``.

        :param vector: A vector of length ``cols``.
        :return: A vector of length ``rows``.
        """
        assert len(vector) == self.cols
        zero = self.field.zero
        return tuple(
            sum((a * b for a, b in zip(row, vector) if a and b), zero)
            for row in self.entries
        )

    def is_zero(self) -> bool:
        return all(is_zero(row) for row in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_strings(self) -> List[List[str]]:
        return [[self.field.to_str(value) for value in row] for row in self.entries]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.to_strings()}, cols={self.cols})"


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> Vector:
    return tuple(c * a for a in u)


def is_zero(u: Sequence) -> bool:
    return not any(u)


def combine(field: Field, coefficients: Sequence, vectors: Sequence[Sequence], dim: int) -> Vector:
    """
    Linear combination ``sum_i c_i v_i``.

    :param field: The ground field.
    :param coefficients: The coefficients ``c_i``.
    :param vectors: The vectors ``v_i``.
    :param dim: The common length of the vectors.
    :return:
    """
    result = [field.zero] * dim
    for c, vector in zip(coefficients, vectors):
        if not c:
            continue
        for k, value in enumerate(vector):
            if value:
                result[k] += c * value
    return tuple(result)


def unit(field: Field, dim: int, index: int) -> Vector:
    return tuple(field.one if k == index else field.zero for k in range(dim))


def rref(m: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """
    Reduced row echelon form with zero rows dropped.

    :param m: The matrix.
    :return: The unique RREF and its pivot column indices.
    """
    if not m.rows or not m.cols or m.is_zero():
        return Matrix(m.field, [], m.cols), ()
    reduced, pivots = m.to_domain_matrix().rref()
    pivots = tuple(int(p) for p in pivots)
    entries = reduced.to_list()[: len(pivots)]
    return Matrix(m.field, entries, m.cols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel(m: Matrix) -> Matrix:
    """
    RREF basis of the right null space ``{x | m x = 0}``.

    :param m: The matrix.
    :return: A matrix whose rows span the kernel.
    """
    field = m.field
    reduced, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    basis = []
    for f in free:
        vector = [field.zero] * m.cols
        vector[f] = field.one
        for r, p in enumerate(pivots):
            vector[p] = -reduced[r, f]
        basis.append(vector)
    return rref(Matrix(field, basis, m.cols))[0]


def image(m: Matrix) -> Matrix:
    """
    RREF basis of the column space, as rows.

    :param m: The matrix.
    :return:
    """
    return rref(m.transpose())[0]


def solve(m: Matrix, rhs: Matrix) -> Optional[Matrix]:
    """
    Solves ``m x = rhs`` for one particular solution, free variables set to zero.

    :param m: The coefficient matrix, ``r x c``.
    :param rhs: The right-hand sides, ``r x k``.
    :return: A ``c x k`` solution, or ``None`` when the system is inconsistent.
    """
    field = m.field
    field.check_same(rhs.field)
    if m.rows != rhs.rows:
        raise ValueError(f"shape mismatch: {m.shape} vs {rhs.shape}")
    augmented = Matrix.hstack(field, m.rows, m, rhs)
    reduced, pivots = rref(augmented)
    if any(p >= m.cols for p in pivots):
        return None
    solution = [[field.zero] * rhs.cols for _ in range(m.cols)]
    for r, p in enumerate(pivots):
        for k in range(rhs.cols):
            solution[p][k] = reduced[r, m.cols + k]
    return Matrix(field, solution, rhs.cols)


def inverse(m: Matrix) -> Matrix:
    """
    Inverse of a square matrix.

    :param m: The matrix.
    :return:
    """
    if not m.is_square() or rank(m) != m.rows:
        raise ValueError(f"matrix is not invertible: {m.shape}")
    solution = solve(m, Matrix.identity(m.field, m.rows))
    assert solution is not None
    return solution
