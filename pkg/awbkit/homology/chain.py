"""
Low-degree slice of the chain complex with trivial coefficients.

``C_0 = A``. ``C_1`` has the monomials ``e_i ⊗ e_j`` (index ``i n + j``) followed by
``e_i ∘ e_j`` (index ``n^2 + i n + j``). ``C_2`` has ``e_i ⊗ e_j ⊗ e_k`` (index
``i n^2 + j n + k``) followed by ``e_i ∘ e_j ∘ e_k`` (index ``n^3 + i n^2 + j n + k``).
"""

from dataclasses import dataclass
from typing import Sequence

from awbkit.algebra.awb import Awb
from awbkit.algebra.morphism import AwbMorphism
from awbkit.linalg.matrix import Matrix, Vector

TENSOR = 0
CIRCLE = 1


def c1_index(n: int, kind: int, i: int, j: int) -> int:
    return kind * n * n + i * n + j


def c1_label(n: int, index: int) -> str:
    """
    Human-readable name of a basis monomial of ``C_1``, such as ``e0⊗e1``.

    :param n: Dimension of the algebra.
    :param index: Index of the monomial.
    :return:
    """
    kind, rest = divmod(index, n * n)
    i, j = divmod(rest, n)
    return f"e{i}{'⊗' if kind == TENSOR else '∘'}e{j}"


@dataclass(frozen=True)
class ChainSlice:
    """
    Boundary maps ``d0: C_1 -> C_0`` and ``d1: C_2 -> C_1``.
    """

    algebra: Awb
    d0: Matrix
    d1: Matrix

    @property
    def c0_dim(self) -> int:
        return self.algebra.dim

    @property
    def c1_dim(self) -> int:
        return 2 * self.algebra.dim**2

    @property
    def c2_dim(self) -> int:
        return 2 * self.algebra.dim**3


def chain_slice(algebra: Awb) -> ChainSlice:
    """
    Assembles the boundary matrices.

    ``d0(e_i ⊗ e_j) = e_i e_j``, ``d0(e_i ∘ e_j) = [e_i, e_j]``,
    ``d1(e_i ⊗ e_j ⊗ e_k) = (e_i e_j) ⊗ e_k - e_i ⊗ (e_j e_k)`` and
    ``d1(e_i ∘ e_j ∘ e_k) = [e_i, e_k] ⊗ e_j + e_i ⊗ [e_j, e_k] - (e_i e_j) ∘ e_k``.

    :param algebra: The algebra.
    :return:
    """
    field = algebra.field
    n = algebra.dim
    mu, beta = algebra.product, algebra.bracket

    d0_columns = [mu[i][j] for i in range(n) for j in range(n)]
    d0_columns += [beta[i][j] for i in range(n) for j in range(n)]
    d0 = Matrix.from_columns(field, d0_columns, n)

    c1 = 2 * n * n
    d1_columns = []
    for kind in (TENSOR, CIRCLE):
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    column = [field.zero] * c1
                    for t in range(n):
                        if kind == TENSOR:
                            column[c1_index(n, TENSOR, t, k)] += mu[i][j][t]
                            column[c1_index(n, TENSOR, i, t)] -= mu[j][k][t]
                        else:
                            column[c1_index(n, TENSOR, t, j)] += beta[i][k][t]
                            column[c1_index(n, TENSOR, i, t)] += beta[j][k][t]
                            column[c1_index(n, CIRCLE, t, k)] -= mu[i][j][t]
                    d1_columns.append(column)
    d1 = Matrix.from_columns(field, d1_columns, c1)
    return ChainSlice(algebra, d0, d1)


def chain_map_c1(phi: AwbMorphism) -> Matrix:
    """
    Chain-level map on ``C_1``: ``e_i ⊗ e_j ↦ φe_i ⊗ φe_j`` and
    ``e_i ∘ e_j ↦ φe_i ∘ φe_j``.

    :param phi: A linear map ``A -> B``.
    :return: A ``2 m^2 x 2 n^2`` matrix.
    """
    n, m = phi.source.dim, phi.target.dim
    field = phi.source.field
    images = [phi.image_of(i) for i in range(n)]
    columns = []
    for kind in (TENSOR, CIRCLE):
        for i in range(n):
            for j in range(n):
                column = [field.zero] * (2 * m * m)
                for a, x in enumerate(images[i]):
                    if not x:
                        continue
                    for b, y in enumerate(images[j]):
                        if y:
                            column[c1_index(m, kind, a, b)] += x * y
                columns.append(column)
    return Matrix.from_columns(field, columns, 2 * m * m)


def evaluate_cycle(
    cycle: Sequence,
    n: int,
    lifts: Sequence[Vector],
    multiply,
    commute,
    zero: Vector,
) -> Vector:
    """
    Evaluates ``Σ α (q ⊗ q') + Σ γ (q ∘ q')`` as ``Σ α ∂q ∂q' + Σ γ [∂q, ∂q']``.

    :param cycle: Coordinates of a chain in ``C_1``.
    :param n: Dimension of the algebra the chain lives over.
    :param lifts: Images ``∂e_i`` of the basis vectors.
    :param multiply: Product of the target algebra.
    :param commute: Bracket of the target algebra.
    :param zero: Zero vector of the target algebra.
    :return:
    """
    total = list(zero)
    for index, coefficient in enumerate(cycle):
        if not coefficient:
            continue
        kind, rest = divmod(index, n * n)
        i, j = divmod(rest, n)
        op = multiply if kind == TENSOR else commute
        for k, value in enumerate(op(lifts[i], lifts[j])):
            if value:
                total[k] += coefficient * value
    return tuple(total)
