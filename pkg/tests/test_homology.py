import pytest

from awbkit.algebra.awb import Awb
from awbkit.algebra.construction import quotient
from awbkit.algebra.ideal import Subspace, center, derived_algebra
from awbkit.algebra.morphism import AwbMorphism
from awbkit.catalog.random import random_awb
from awbkit.catalog.registry import extension_names, get, get_extension, names
from awbkit.errors import NotAlgebraMap
from awbkit.extension.construction import pullback_with_projection
from awbkit.homology.chain import CIRCLE, TENSOR, c1_index, c1_label, chain_slice
from awbkit.homology.homology import h0, h1, induced_h1
from awbkit.homology.theta import theta, theta_q, theta_value
from awbkit.isoclinism.search import automorphisms
from awbkit.linalg import matrix as mx
from awbkit.linalg.field import Field
from awbkit.linalg.matrix import Matrix, unit

FIELDS = [Field.rational(), Field.prime(2), Field.prime(3)]


def population():
    for seed in range(200):
        field = FIELDS[seed % 3]
        yield random_awb(field, seed % 6, seed=seed)


def test_chain_slice_examples(rational):
    ab = chain_slice(get("ab(2)", rational))
    assert ab.d0.is_zero() and ab.d1.is_zero()
    assert (ab.c0_dim, ab.c1_dim, ab.c2_dim) == (2, 8, 16)

    idem = chain_slice(get("idem1", rational))
    assert idem.d0 == Matrix.of(rational, [[1, 0]])
    assert idem.d1 == Matrix.of(rational, [[0, 0], [0, -1]])

    heis = chain_slice(get("heis", rational))
    assert heis.d0.column(c1_index(3, CIRCLE, 0, 1)) == unit(rational, 3, 2)
    assert all(heis.d0.column(c1_index(3, TENSOR, i, j)) == (rational.zero,) * 3 for i in range(3) for j in range(3))
    assert c1_label(3, c1_index(3, CIRCLE, 0, 1)) == "e0∘e1"


@pytest.mark.parametrize("name", names())
def test_catalog_complex(name, field):
    A = get(name, field)
    chains = chain_slice(A)
    assert (chains.d0 @ chains.d1).is_zero()
    assert h0(A, chains).dim == A.dim - derived_algebra(A).dim


def test_random_complex():
    for A in population():
        chains = chain_slice(A)
        assert (chains.d0 @ chains.d1).is_zero(), A.name
        assert h0(A, chains).dim == A.dim - derived_algebra(A).dim, A.name


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_abelian_h1(n, rational):
    assert h1(Awb.abelian(rational, n)).dim == 2 * n * n


def test_h0_h1_examples(rational):
    assert h0(get("ab(3)", rational)).dim == 3
    assert h0(get("idem1", rational)).dim == 0
    assert h0(get("heis", rational)).dim == 2
    assert h1(get("idem1", rational)).dim == 0
    assert h1(get("ab(2)", rational)).dim == 8
    assert h1(get("heis", rational)).dim == 12


def test_homology_representatives(field):
    H = h1(get("heis", field))
    for r in H.representatives.entries:
        assert H.is_cycle(r)
        assert not H.is_boundary(r)
    assert H.class_of(H.representatives.row(0))[0] == field.one


def test_induced_h1_functoriality(heis, rational):
    H = h1(heis)
    assert induced_h1(AwbMorphism.identity(heis)) == Matrix.identity(rational, H.dim)

    ab = Awb.abelian(rational, 2)
    assert induced_h1(AwbMorphism.zero(ab, ab)).is_zero()

    swap = AwbMorphism(heis, heis, Matrix.of(rational, [[0, 1, 0], [1, 0, 0], [0, 0, -1]]))
    projection = quotient(heis, center(heis)).projection
    assert induced_h1(projection.compose(swap)) == induced_h1(projection) @ induced_h1(swap)

    with pytest.raises(NotAlgebraMap):
        induced_h1(AwbMorphism(heis, Awb.abelian(rational, 3), Matrix.identity(rational, 3)))


def test_theta_e_heis(e_heis, rational):
    connecting = theta(e_heis)
    assert connecting.rank == 1
    assert connecting.image() == Subspace.spanned_by(e_heis.G, [unit(rational, 3, 2)])

    xy = unit(rational, 8, c1_index(2, CIRCLE, 0, 1))
    assert theta_value(e_heis, xy) == unit(rational, 3, 2)
    x_tensor_y = unit(rational, 8, c1_index(2, TENSOR, 0, 1))
    assert theta_value(e_heis, x_tensor_y) == (rational.zero,) * 3


def test_theta_does_not_depend_on_the_section(e_heis, rational):
    other = Matrix.of(rational, [[1, 0], [0, 1], [1, -2]])
    assert theta(e_heis, section=other).matrix == theta(e_heis).matrix


def test_theta_vanishes(rational):
    assert theta(get_extension("split_ab2", rational)).matrix.is_zero()
    trivial = theta(get_extension("triv_heis", rational))
    assert trivial.matrix.rows == 0
    assert trivial.matrix.cols == 12


@pytest.mark.parametrize("name", extension_names())
def test_theta_image_law(name, field):
    E = get_extension(name, field)
    connecting = theta(E)
    derived = derived_algebra(E.G)
    assert connecting.image() == E.kernel & derived
    assert connecting.rank == derived.dim - derived_algebra(E.Q).dim


def test_theta_naturality():
    F = Field.prime(3)
    E = get_extension("e_heis", F)
    for eta in automorphisms(E.Q)[:6]:
        pulled, m = pullback_with_projection(E, eta)
        left = m.alpha @ theta(pulled).matrix
        right = theta(E).matrix @ induced_h1(m.gamma)
        assert left == right


@pytest.mark.parametrize("name", names())
def test_theta_q_image(name, rational):
    A = get(name, rational)
    connecting = theta_q(A)
    assert connecting.image() == derived_algebra(A) & center(A)
    assert connecting.derived == derived_algebra(A)
    assert connecting.derived_matrix.shape == (derived_algebra(A).dim, connecting.matrix.cols)
    assert mx.rank(connecting.derived_matrix) == connecting.rank


def test_theta_q_examples(rational):
    assert theta_q(get("ab(2)", rational)).rank == 0
    heis = theta_q(get("heis", rational))
    assert heis.rank == 1
    assert heis.image() == Subspace.spanned_by(get("heis", rational), [unit(rational, 3, 2)])
    assert heis.derived_matrix.shape == (1, 8)
    assert theta_q(get("taut_u2", rational)).rank == 0
