import itertools

import numpy as np
import pytest

from awbkit.errors import FieldMismatch, UnsupportedField
from awbkit.linalg import matrix as mx
from awbkit.linalg import subspace as sp
from awbkit.linalg.field import Field
from awbkit.linalg.matrix import Matrix


def random_matrix(field, rows, cols, seed):
    rng = np.random.default_rng(seed)
    values = rng.integers(-2, 3, size=(rows, cols))
    return Matrix.of(field, [[int(x) for x in row] for row in values], cols)


def test_field_parsing(rational, gf3):
    assert rational("-6/8") == rational(-3) / rational(4)
    assert rational.to_str(rational("6/8")) == "3/4"
    assert rational.to_str(rational(5)) == "5"
    assert gf3.to_int(gf3(-1)) == 2
    assert gf3.to_int(gf3("4")) == 1
    assert list(gf3.elements()) == [gf3(0), gf3(1), gf3(2)]


@pytest.mark.parametrize("p", [0, 1, 4, 9, 2**31 + 11])
def test_field_rejects_non_primes(p):
    with pytest.raises(UnsupportedField):
        Field.prime(p)


def test_field_descriptor(gf3, rational):
    assert Field.from_descriptor(gf3.descriptor()) == gf3
    assert Field.from_descriptor({"kind": "rational"}) == rational
    with pytest.raises(FieldMismatch):
        rational.check_same(gf3)


def test_rref_examples(rational):
    identity = Matrix.identity(rational, 2)
    assert mx.rref(identity) == (identity, (0, 1))

    reduced, pivots = mx.rref(Matrix.zeros(rational, 2, 2))
    assert reduced.rows == 0 and reduced.cols == 2
    assert pivots == ()

    reduced, pivots = mx.rref(Matrix.of(rational, [[2, 4], [1, 2]]))
    assert reduced == Matrix.of(rational, [[1, 2]])
    assert pivots == (0,)


def test_kernel_examples(rational):
    assert mx.kernel(Matrix.identity(rational, 3)).rows == 0
    assert mx.kernel(Matrix.zeros(rational, 3, 3)) == Matrix.identity(rational, 3)

    m = Matrix.of(rational, [[1, 2]])
    null = mx.kernel(m)
    assert null == Matrix.of(rational, [[1, "-1/2"]])
    assert m.apply(null.row(0)) == (rational.zero,)


def test_solve_examples(rational):
    v = Matrix.of(rational, [[1], [-2], ["1/3"]])
    assert mx.solve(Matrix.identity(rational, 3), v) == v

    assert mx.solve(Matrix.zeros(rational, 2, 2), Matrix.of(rational, [[1], [0]])) is None

    m = Matrix.of(rational, [[1, 1]])
    rhs = Matrix.of(rational, [[3]])
    x = mx.solve(m, rhs)
    assert x is not None
    assert m @ x == rhs


def test_inverse(rational):
    m = Matrix.of(rational, [[2, 1], [1, 1]])
    assert m @ mx.inverse(m) == Matrix.identity(rational, 2)
    with pytest.raises(ValueError):
        mx.inverse(Matrix.of(rational, [[1, 2], [2, 4]]))


@pytest.mark.parametrize("seed", range(20))
def test_rref_properties(field, seed):
    m = random_matrix(field, 3 + seed % 3, 2 + seed % 4, seed)
    reduced, pivots = mx.rref(m)
    assert mx.rref(reduced) == (reduced, pivots)
    assert mx.rank(m) + mx.kernel(m).rows == m.cols
    for row in mx.kernel(m).entries:
        assert mx.is_zero(m.apply(row))


@pytest.mark.parametrize("seed", range(20))
def test_dimension_formula(field, seed):
    U = sp.span(field, random_matrix(field, 2, 5, seed).entries, 5)
    V = sp.span(field, random_matrix(field, 3, 5, seed + 100).entries, 5)
    total = sp.subspace_sum(U, V)
    meet = sp.intersection(U, V)
    assert total.rows + meet.rows == U.rows + V.rows
    assert sp.is_subspace(meet, U) and sp.is_subspace(meet, V)
    assert sp.is_subspace(U, total) and sp.is_subspace(V, total)


@pytest.mark.parametrize("seed", range(10))
def test_complements(field, seed):
    V = sp.span(field, random_matrix(field, 4, 5, seed).entries, 5)
    U = sp.span(field, V.entries[:2], 5)
    T = sp.relative_complement(U, V)
    assert T.rows + U.rows == V.rows
    assert sp.subspace_sum(U, T) == V
    assert sp.intersection(U, T).rows == 0
    C = sp.complement(V)
    assert sp.subspace_sum(V, C) == sp.full_space(field, 5)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("seed", range(8))
def test_brute_force_agreement(p, seed):
    field = Field.prime(p)
    m = random_matrix(field, 3, 3, seed)
    vectors = list(itertools.product(list(field.elements()), repeat=3))

    null = [v for v in vectors if mx.is_zero(m.apply(v))]
    assert len(null) == p ** mx.kernel(m).rows

    images = {m.apply(v) for v in vectors}
    assert len(images) == p ** mx.rank(m)
    assert all(sp.contains(mx.image(m), w) for w in images)

    rhs = m.apply(vectors[-1])
    x = mx.solve(m, Matrix(field, [[c] for c in rhs], 1))
    assert x is not None and m.apply(x.column(0)) == rhs


def test_coordinates(rational):
    V = sp.span(rational, Matrix.of(rational, [[1, 0, 1], [0, 1, 1]]).entries, 3)
    vector = (rational(2), rational(3), rational(5))
    coordinates = sp.coordinates(V, vector)
    assert coordinates == (rational(2), rational(3))
    assert sp.coordinates(V, (rational(0), rational(0), rational(1))) is None
