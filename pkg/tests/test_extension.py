import itertools

import pytest

from awbkit.algebra.awb import Awb
from awbkit.algebra.ideal import Subspace, derived_algebra, ideal_flags
from awbkit.algebra.morphism import AwbMorphism
from awbkit.catalog.registry import extension_names, get, get_extension
from awbkit.errors import NotAbelian, NotAlgebraMap, NotAnIdeal, NotCentral, NotIso
from awbkit.extension.central import (
    ExtensionMorphism,
    check_extension_morphism,
    commutator_maps,
    extension_from_epimorphism,
    is_extension_isomorphism,
    make_extension,
    trivial_extension,
)
from awbkit.extension.construction import common_ancestor, pullback, pullback_with_projection
from awbkit.extension.stem import (
    direct_sum_abelian,
    direct_sum_projection,
    is_stem,
    is_stem_cover,
    non_stem_part,
    reassemble,
    split_off_abelian,
    stem_witness,
    stemify,
)
from awbkit.homology.homology import h1
from awbkit.homology.theta import theta
from awbkit.isoclinism.certificate import is_isoclinic_homomorphism
from awbkit.isoclinism.decision import decide_extension_isoclinism
from awbkit.isoclinism.search import automorphisms
from awbkit.linalg.field import Field
from awbkit.linalg.matrix import Matrix, unit


def span(algebra, *indices):
    return Subspace.spanned_by(algebra, [unit(algebra.field, algebra.dim, i) for i in indices])


def test_make_extension_examples(heis, rational):
    E = make_extension(heis, span(heis, 2))
    assert E.Q == Awb.abelian(rational, 2)
    assert E.n_dim == 1
    assert E.chi == Matrix.of(rational, [[0], [0], [1]])

    trivial = trivial_extension(heis)
    assert trivial.n_dim == 0 and trivial.Q == heis

    with pytest.raises(NotAnIdeal):
        make_extension(heis, span(heis, 0))


def test_make_extension_rejects_non_central(rational):
    taut = get("taut_u2", rational)
    with pytest.raises(NotCentral) as info:
        make_extension(taut, span(taut, 1))
    assert info.value.pair[0] == 0


def test_extension_from_epimorphism(heis, rational):
    E = extension_from_epimorphism(heis, AwbMorphism(heis, Awb.abelian(rational, 2), Matrix.of(rational, [[1, 0, 0], [0, 1, 0]])))
    assert E.kernel == span(heis, 2)

    with pytest.raises(NotAlgebraMap):
        extension_from_epimorphism(heis, AwbMorphism.zero(heis, Awb.abelian(rational, 1)))


def test_commutator_maps_examples(e_heis, rational):
    maps = commutator_maps(e_heis)
    z = unit(rational, 3, 2)
    assert maps.C(0, 1) == z
    assert maps.C(1, 0) == tuple(-c for c in z)
    assert maps.C(0, 0) == (rational.zero,) * 3
    assert all(maps.P(a, b) == (rational.zero,) * 3 for a in range(2) for b in range(2))
    assert maps.derived == span(e_heis.G, 2)

    other = commutator_maps(e_heis, section=Matrix.of(rational, [[1, 0], [0, 1], [5, "1/2"]]))
    assert other.bracket_values == maps.bracket_values

    u, v = (rational(1), rational(2)), (rational(3), rational(1))
    assert maps.C_on(e_heis.G, u, v) == (rational.zero, rational.zero, rational(-5))


def test_commutator_maps_cover(field):
    E = get_extension("cover_ab1", field)
    maps = commutator_maps(E)
    assert maps.P(0, 0) == unit(field, 3, 0)
    assert maps.C(0, 0) == unit(field, 3, 1)


@pytest.mark.parametrize(
    "name, stem, cover",
    [
        ("e_heis", True, False),
        ("e_heis_x_ab1", False, False),
        ("heis_x_ab1_by_z", True, False),
        ("split_ab2", False, False),
        ("triv_ab3", True, False),
        ("cover_ab1", True, True),
        ("cover_ab1_alt", True, True),
    ],
)
def test_stem_examples(name, stem, cover, field):
    E = get_extension(name, field)
    assert is_stem(E) == stem
    assert is_stem_cover(E) == cover
    assert (stem_witness(E) is None) == stem


def test_stem_cover_dimensions(field):
    E = get_extension("cover_ab1", field)
    assert E.n_dim == h1(E.Q).dim == 2
    assert theta(E).is_bijective()


@pytest.mark.parametrize("name", extension_names())
def test_stem_predicates_agree(name, field):
    E = get_extension(name, field)
    stem = is_stem(E)
    if is_stem_cover(E):
        assert stem
    meet = E.kernel & derived_algebra(E.G)
    assert non_stem_part(E).dim == E.n_dim - meet.dim
    assert stem == (meet.dim == E.n_dim)


@pytest.mark.parametrize("name", extension_names())
def test_stemify(name, field):
    E = get_extension(name, field)
    stem, projection = stemify(E)
    assert is_stem(stem)
    assert stem.Q == E.Q
    assert check_extension_morphism(projection).is_morphism
    assert is_isoclinic_homomorphism(projection)
    assert stem.n_dim == E.n_dim - non_stem_part(E).dim
    if field.p == 2:
        assert decide_extension_isoclinism(E, stem) is not None


def lines(field, n):
    """Nonzero vectors of ``field^n`` whose first nonzero coordinate is 1."""
    for coordinates in itertools.product(range(field.p), repeat=n):
        nonzero = [c for c in coordinates if c]
        if nonzero and nonzero[0] == 1:
            yield tuple(field(c) for c in coordinates)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("name", extension_names())
def test_stem_iff_every_kernel_line_is_derived(name, p):
    field = Field.prime(p)
    E = get_extension(name, field)
    derived = derived_algebra(E.G)
    images = [E.chi.apply(line) for line in lines(field, E.n_dim)]
    for image in images:
        assert ideal_flags(E.G, Subspace.spanned_by(E.G, [image])).two_sided
    assert is_stem(E) == all(derived.contains(image) for image in images)


def test_stemify_examples(rational):
    stem, projection = stemify(get_extension("e_heis_x_ab1", rational))
    assert stem.n_dim == 1
    assert stem.G.dim == 3
    assert projection.beta.matrix.shape == (3, 4)

    E = get_extension("e_heis", rational)
    same, identity = stemify(E)
    assert same is E
    assert identity.alpha == Matrix.identity(rational, 1)


@pytest.mark.parametrize("name", ["e_heis_x_ab1", "split_ab2", "split_ab3", "e_heis", "cover_ab1"])
def test_split_and_reassemble(name, field):
    E = get_extension(name, field)
    split = split_off_abelian(E)
    assert is_stem(split.stem)
    assert split.abelian.dim == non_stem_part(E).dim
    assert split.stem.G.dim + split.abelian.dim == E.G.dim

    summed, isomorphism = reassemble(split, E)
    assert is_extension_isomorphism(isomorphism)
    assert summed.n_dim == E.n_dim


def test_split_examples(rational):
    split = split_off_abelian(get_extension("split_ab3", rational))
    assert split.abelian.dim == 1
    assert split.stem.n_dim == 0
    assert split.stem.G == Awb.abelian(rational, 2)


def test_direct_sum_abelian(e_heis, heis, rational):
    summed = direct_sum_abelian(e_heis, Awb.abelian(rational, 1))
    assert summed.n_dim == 2
    assert summed.G.dim == 4
    assert not is_stem(summed)
    projection = direct_sum_projection(e_heis, summed)
    assert check_extension_morphism(projection).is_morphism
    assert is_isoclinic_homomorphism(projection)

    with pytest.raises(NotAbelian):
        direct_sum_abelian(e_heis, heis)


def test_extension_morphism_composition(e_heis):
    identity = ExtensionMorphism.identity(e_heis)
    assert is_extension_isomorphism(identity)
    twice = identity.compose(identity)
    assert twice.alpha == identity.alpha
    assert twice.beta == identity.beta


def test_pullback_along_automorphisms():
    F = Field.prime(3)
    E = get_extension("e_heis", F)
    for eta in automorphisms(E.Q)[:8]:
        pulled, m = pullback_with_projection(E, eta)
        assert pulled.Q == E.Q
        assert pulled.n_dim == 1
        assert is_extension_isomorphism(m)
        assert m.gamma == eta
    assert pullback(E, AwbMorphism.identity(E.Q)).G.dim == 3


def test_common_ancestor(e_heis):
    ancestor, sigma, tau = common_ancestor(e_heis, e_heis, AwbMorphism.identity(e_heis.Q))
    assert ancestor.G.dim == 4
    assert ancestor.n_dim == 2
    assert derived_algebra(ancestor.G).dim == 1
    for m in (sigma, tau):
        assert check_extension_morphism(m).is_morphism
        assert is_isoclinic_homomorphism(m)


def test_common_ancestor_of_different_extensions(rational):
    first = get_extension("e_heis", rational)
    second = get_extension("split_ab3", rational)
    swap = AwbMorphism(first.Q, second.Q, Matrix.of(rational, [[0, 1], [1, 0]]))
    with pytest.raises(NotIso):
        common_ancestor(first, second, AwbMorphism.zero(first.Q, Awb.abelian(rational, 1)))
    ancestor, sigma, tau = common_ancestor(first, second, swap)
    assert ancestor.G.dim == first.G.dim + second.n_dim
    assert check_extension_morphism(sigma).is_morphism
    assert check_extension_morphism(tau).is_morphism
    assert tau.gamma == swap
