"""Random algebras with bracket that are valid by construction."""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from awbkit.algebra.awb import Awb
from awbkit.algebra.construction import d_bracket, direct_product
from awbkit.catalog.registry import (
    M2_UNITS,
    STRICT_U3_UNITS,
    U2_UNITS,
    diagonal_product,
    matrix_unit_product,
)
from awbkit.errors import DimensionGuardExceeded
from awbkit.linalg.field import Field
from awbkit.linalg.matrix import Matrix

MAX_RANDOM_DIM = 6

ZERO_PRODUCT = "zero_product"
DIAGONAL = "diagonal"
UPPER_TRIANGULAR = "upper_triangular"
STRICT_UPPER = "strict_upper"
FULL_MATRIX = "full_matrix"


def families(n: int) -> List[str]:
    """
    Associative families available in dimension ``n``.

    :param n: The dimension.
    :return:
    """
    available = [ZERO_PRODUCT]
    if n >= 1:
        available.append(DIAGONAL)
    if n >= 3:
        available += [UPPER_TRIANGULAR, STRICT_UPPER]
    if n >= 4:
        available.append(FULL_MATRIX)
    return available


def _scalar(field: Field, rng: np.random.Generator):
    if field.is_rational:
        return field(int(rng.integers(-2, 3)))
    return field(int(rng.integers(0, field.p)))


def _padded(field: Field, units: Sequence[Tuple[int, int]], n: int) -> Awb:
    """The span of ``units`` times a zero-product algebra, up to dimension ``n``."""
    k = len(units)
    zero = [[[0] * k for _ in range(k)] for _ in range(k)]
    block = Awb.from_values(field, matrix_unit_product(units), zero)
    return direct_product(block, Awb.abelian(field, n - k))


def associative_product(field: Field, n: int, family: str) -> Awb:
    """
    An associative product from a fixed family, with zero bracket.

    :param field: The ground field.
    :param n: The dimension.
    :param family: One of :func:`families`.
    :return:
    """
    if family not in families(n):
        raise ValueError(f"family {family!r} is not available in dimension {n}")
    if family == ZERO_PRODUCT:
        return Awb.abelian(field, n)
    if family == DIAGONAL:
        zero = [[[0] * n for _ in range(n)] for _ in range(n)]
        return Awb.from_values(field, diagonal_product(n), zero)
    if family == UPPER_TRIANGULAR:
        return _padded(field, U2_UNITS, n)
    if family == STRICT_UPPER:
        return _padded(field, STRICT_U3_UNITS, n)
    return _padded(field, M2_UNITS, n)


def random_awb(
    field: Field,
    n: int,
    seed: Optional[int] = None,
    family: Optional[str] = None,
) -> Awb:
    """
    Draws a random algebra with bracket.

    A zero product takes a random bracket, for which the compatibility identity holds
    trivially. Any other family takes the bracket ``a D(b) - D(b) a`` of a random ``D``.

    :param field: The ground field.
    :param n: The dimension, at most 6.
    :param seed: Seed of the generator.
    :param family: Force an associative family, otherwise one is drawn.
    :return:
    """
    if n > MAX_RANDOM_DIM:
        raise DimensionGuardExceeded(f"random algebras are limited to dimension {MAX_RANDOM_DIM}")
    if n < 0:
        raise ValueError(f"negative dimension {n}")
    rng = np.random.default_rng(seed)
    if family is None:
        available = families(n)
        family = available[int(rng.integers(len(available)))]
    base = associative_product(field, n, family)
    name = f"random_{family}_{n}" + ("" if seed is None else f"_{seed}")

    if family == ZERO_PRODUCT:
        bracket = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if rng.random() < 0.3:
                        bracket[i][j][k] = _scalar(field, rng)
        return Awb.from_values(field, base.product, bracket, name=name)

    derivation = Matrix.of(field, [[_scalar(field, rng) for _ in range(n)] for _ in range(n)])
    return d_bracket(field, base.product, derivation, name=name)
