import itertools

import pytest

from awbkit.algebra.awb import Awb
from awbkit.algebra.construction import quotient, restrict_to_subalgebra
from awbkit.algebra.ideal import Subspace, center, derived_algebra
from awbkit.algebra.morphism import AwbMorphism, check_morphism
from awbkit.catalog.registry import extension_names, get, get_extension, names
from awbkit.errors import (
    DimensionGuardExceeded,
    InvalidCertificate,
    NotStem,
    UnsupportedField,
)
from awbkit.extension.central import (
    ExtensionMorphism,
    center_extension,
    is_extension_isomorphism,
    make_extension,
    trivial_extension,
)
from awbkit.extension.construction import pullback, pullback_with_projection
from awbkit.extension.stem import direct_sum_abelian, direct_sum_projection, is_stem, stemify
from awbkit.isoclinism.certificate import (
    IsoclinismCertificate,
    central_quotient_map,
    induced_certificate,
    is_isoclinic_algebra_hom,
    is_isoclinic_homomorphism,
    verify_certificate,
)
from awbkit.isoclinism.decision import (
    Fingerprint,
    decide_algebra_isoclinism,
    decide_extension_isoclinism,
    fingerprint,
    kernel_theta_criterion,
    refutation,
    xi_from_eta,
)
from awbkit.isoclinism.search import automorphisms, find_algebra_isomorphism, find_algebra_isomorphisms
from awbkit.isoclinism.stem_isomorphism import kernel_restriction, stem_isomorphism
from awbkit.linalg.field import Field
from awbkit.linalg.matrix import Matrix


@pytest.fixture(params=[2, 3], ids=["GF2", "GF3"])
def prime_field(request):
    return Field.prime(request.param)


def heis_family(field):
    """Extensions of ``ab(2)`` isoclinic to ``e_heis``."""
    E = get_extension("e_heis", field)
    family = [E, get_extension("e_heis_x_ab1", field)]
    family += [pullback(E, eta) for eta in automorphisms(E.Q)[1:3]]
    family.append(direct_sum_abelian(E, Awb.abelian(field, 1)))
    family.append(stemify(get_extension("e_heis_x_ab1", field))[0])
    return family


def test_verify_identity(field):
    for name in extension_names():
        E = get_extension(name, field)
        assert verify_certificate(E, E, IsoclinismCertificate.identity(E)).accepted


def test_verify_examples(rational):
    first = get_extension("e_heis", rational)
    second = get_extension("e_heis_x_ab1", rational)
    eta = AwbMorphism(first.Q, second.Q, Matrix.identity(rational, 2))

    report = verify_certificate(first, second, IsoclinismCertificate(eta, Matrix.identity(rational, 1)))
    assert report.accepted
    assert report.theorem_failures == []
    assert report.summary() == "accepted"

    report = verify_certificate(first, second, IsoclinismCertificate(eta, Matrix.of(rational, [[-1]])))
    assert not report.accepted
    assert report.failures[0] == ("C-square does not commute", (0, 1))
    assert report.summary() == "rejected: C-square does not commute at (0, 1)"


def test_verify_rejects_malformed_certificates(rational):
    E = get_extension("e_heis", rational)
    zero = AwbMorphism.zero(E.Q, E.Q)
    report = verify_certificate(E, E, IsoclinismCertificate(zero, Matrix.identity(rational, 1)))
    assert ("eta is not bijective", None) in report.failures

    identity = AwbMorphism.identity(E.Q)
    report = verify_certificate(E, E, IsoclinismCertificate(identity, Matrix.identity(rational, 2)))
    assert report.failures == [("xi has the wrong shape", None)]

    report = verify_certificate(E, E, IsoclinismCertificate(identity, Matrix.of(rational, [[0]])))
    assert ("xi is not bijective", None) in report.failures


def test_xi_from_eta_examples(rational):
    E = get_extension("e_heis", rational)
    swap = AwbMorphism(E.Q, E.Q, Matrix.of(rational, [[0, 1], [1, 0]]))
    assert xi_from_eta(E, E, swap) == Matrix.of(rational, [[-1]])
    assert xi_from_eta(E, E, AwbMorphism.identity(E.Q)) == Matrix.identity(rational, 1)

    split = get_extension("split_ab3", rational)
    assert xi_from_eta(split, E, AwbMorphism(split.Q, E.Q, Matrix.identity(rational, 2))) is None


def test_certificate_algebra(gf3):
    family = heis_family(gf3)
    first, second, third = family[0], family[1], family[3]
    c12 = decide_extension_isoclinism(first, second)
    c23 = decide_extension_isoclinism(second, third)
    assert verify_certificate(second, first, c12.inverse()).accepted
    assert verify_certificate(first, third, c12.then(c23)).accepted
    assert c12.then(c12.inverse()).xi == Matrix.identity(gf3, 1)


def test_decide_examples(prime_field):
    e_heis = get_extension("e_heis", prime_field)
    certificate = decide_extension_isoclinism(e_heis, get_extension("e_heis_x_ab1", prime_field))
    assert certificate is not None
    assert verify_certificate(e_heis, get_extension("e_heis_x_ab1", prime_field), certificate).accepted

    assert decide_extension_isoclinism(e_heis, get_extension("split_ab3", prime_field)) is None
    assert decide_extension_isoclinism(e_heis, get_extension("heis_x_ab1_by_z", prime_field)) is None
    assert decide_extension_isoclinism(
        get_extension("cover_ab1", prime_field), get_extension("split_ab2", prime_field)
    ) is None


def test_stem_covers_are_isoclinic(prime_field):
    first = get_extension("cover_ab1", prime_field)
    second = get_extension("cover_ab1_alt", prime_field)
    certificate = decide_extension_isoclinism(first, second)
    assert certificate is not None
    assert verify_certificate(first, second, certificate).accepted
    alpha = kernel_restriction(first, second, certificate)
    assert alpha == Matrix.of(prime_field, [[1, 0], [1, 1]])
    assert is_extension_isomorphism(stem_isomorphism(first, second, certificate))


def test_decide_guard(gf2):
    first = get_extension("e_heis", gf2)
    second = get_extension("e_heis_x_ab1", gf2)
    with pytest.raises(DimensionGuardExceeded):
        decide_extension_isoclinism(first, second, max_dim=1)


def test_decide_over_the_rationals(rational):
    e_heis = get_extension("e_heis", rational)
    with pytest.raises(UnsupportedField):
        decide_extension_isoclinism(e_heis, get_extension("e_heis_x_ab1", rational))
    assert decide_extension_isoclinism(e_heis, get_extension("split_ab3", rational)) is None

    ab2, ab3 = get("ab(2)", rational), get("ab(3)", rational)
    first = make_extension(ab2, Subspace.whole(ab2))
    second = make_extension(ab3, Subspace.whole(ab3))
    certificate = decide_extension_isoclinism(first, second)
    assert certificate is not None
    assert certificate.xi.shape == (0, 0)


def test_decide_algebra_examples(prime_field):
    heis = get("heis", prime_field)
    certificate = decide_algebra_isoclinism(heis, get("heis_x_ab1", prime_field))
    assert certificate is not None
    assert verify_certificate(
        center_extension(heis), center_extension(get("heis_x_ab1", prime_field)), certificate
    ).accepted
    assert decide_algebra_isoclinism(heis, get("heis_x_ab2", prime_field)) is not None
    assert decide_algebra_isoclinism(heis, get("ab(3)", prime_field)) is None
    assert decide_algebra_isoclinism(heis, get("idem1", prime_field)) is None
    assert decide_algebra_isoclinism(get("ab(1)", prime_field), get("ab(4)", prime_field)) is not None


def test_decide_algebra_over_the_rationals(rational):
    certificate = decide_algebra_isoclinism(get("ab(2)", rational), get("ab(3)", rational))
    assert certificate is not None
    assert certificate.eta.matrix.shape == (0, 0)
    assert certificate.xi.shape == (0, 0)

    assert decide_algebra_isoclinism(get("heis", rational), get("ab(3)", rational)) is None
    with pytest.raises(UnsupportedField):
        decide_algebra_isoclinism(get("heis", rational), get("heis_x_ab1", rational))


def test_find_algebra_isomorphism(gf2, rational):
    heis = get("heis", gf2)
    found = find_algebra_isomorphism(heis, heis)
    assert found is not None
    assert check_morphism(found).is_isomorphism
    assert find_algebra_isomorphism(heis, get("ab(3)", gf2)) is None
    assert find_algebra_isomorphism(heis, get("heis_x_ab1", gf2)) is None
    with pytest.raises(UnsupportedField):
        find_algebra_isomorphism(get("heis", rational), get("heis", rational))


def test_isoclinic_homomorphisms(rational):
    e_heis = get_extension("e_heis", rational)
    _, projection = stemify(get_extension("e_heis_x_ab1", rational))
    assert is_isoclinic_homomorphism(projection)

    trivial = trivial_extension(get("ab(2)", rational))
    collapse = ExtensionMorphism.from_beta(
        e_heis,
        trivial,
        AwbMorphism(e_heis.G, trivial.G, e_heis.pi.matrix),
        gamma=AwbMorphism(e_heis.Q, trivial.Q, Matrix.identity(rational, 2)),
    )
    assert not is_isoclinic_homomorphism(collapse)
    with pytest.raises(ValueError):
        induced_certificate(collapse)


def test_induced_certificates(prime_field):
    E = get_extension("e_heis", prime_field)
    morphisms = [
        stemify(get_extension("e_heis_x_ab1", prime_field))[1],
        direct_sum_projection(E, direct_sum_abelian(E, Awb.abelian(prime_field, 2))),
    ]
    morphisms += [pullback_with_projection(E, eta)[1] for eta in automorphisms(E.Q)[:4]]
    for m in morphisms:
        assert is_isoclinic_homomorphism(m)
        certificate = induced_certificate(m)
        assert verify_certificate(m.source, m.target, certificate).accepted


def test_isoclinic_algebra_homomorphisms(heis, rational):
    assert is_isoclinic_algebra_hom(AwbMorphism.identity(heis))
    assert not is_isoclinic_algebra_hom(quotient(heis, center(heis)).projection)

    G = get("heis_x_ab1", rational)
    inclusion = AwbMorphism(heis, G, Matrix.of(rational, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]]))
    assert is_isoclinic_algebra_hom(inclusion)
    collapse = AwbMorphism(G, heis, Matrix.of(rational, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]))
    assert is_isoclinic_algebra_hom(collapse)


def test_kernel_theta_criterion(rational):
    e_heis = get_extension("e_heis", rational)
    identity = AwbMorphism.identity(e_heis.Q)
    assert kernel_theta_criterion(e_heis, get_extension("e_heis_x_ab1", rational), identity)
    split = get_extension("split_ab3", rational)
    assert not kernel_theta_criterion(e_heis, split, AwbMorphism(e_heis.Q, split.Q, Matrix.identity(rational, 2)))


@pytest.mark.parametrize("first, second", list(itertools.combinations_with_replacement(extension_names(), 2)))
def test_kernel_theta_criterion_agrees(first, second, prime_field):
    E1 = get_extension(first, prime_field)
    E2 = get_extension(second, prime_field)
    if E1.Q.dim != E2.Q.dim:
        return
    for eta in itertools.islice(find_algebra_isomorphisms(E1.Q, E2.Q), 8):
        assert (xi_from_eta(E1, E2, eta) is not None) == kernel_theta_criterion(E1, E2, eta)


def test_decision_cross_check(prime_field):
    family = heis_family(prime_field)
    for E in family[1:]:
        assert decide_extension_isoclinism(family[0], E, cross_check=True) is not None


def test_isoclinism_is_an_equivalence(gf2):
    family = heis_family(gf2)
    certificates = {}
    for i, first in enumerate(family):
        for j, second in enumerate(family):
            certificate = decide_extension_isoclinism(first, second)
            assert certificate is not None
            report = verify_certificate(first, second, certificate)
            assert report.accepted
            assert report.theorem_failures == []
            certificates[i, j] = certificate
    for i, first in enumerate(family):
        assert verify_certificate(first, first, IsoclinismCertificate.identity(first)).accepted
        for j, second in enumerate(family):
            assert verify_certificate(second, first, certificates[i, j].inverse()).accepted
    for i, j, k in [(0, 1, 2), (3, 4, 5), (5, 1, 0), (2, 4, 3)]:
        composite = certificates[i, j].then(certificates[j, k])
        assert verify_certificate(family[i], family[k], composite).accepted


def test_stem_extensions_are_smallest(gf2):
    family = heis_family(gf2)
    smallest = min(E.G.dim for E in family)
    for E in family:
        assert is_stem(E) == (E.G.dim == smallest)


def test_stem_isomorphism_along_pullbacks(gf2):
    E = get_extension("e_heis", gf2)
    for eta in automorphisms(E.Q):
        pulled = pullback(E, eta)
        certificate = decide_extension_isoclinism(pulled, E)
        m = stem_isomorphism(pulled, E, certificate)
        assert is_extension_isomorphism(m)
        assert m.gamma == certificate.eta


def test_stem_isomorphism_rejections(gf3):
    E = get_extension("e_heis", gf3)
    summed = direct_sum_abelian(E, Awb.abelian(gf3, 1))
    certificate = decide_extension_isoclinism(summed, E)
    with pytest.raises(NotStem):
        stem_isomorphism(summed, E, certificate)

    wrong = IsoclinismCertificate(AwbMorphism.identity(E.Q), Matrix.of(gf3, [[-1]]))
    with pytest.raises(InvalidCertificate):
        stem_isomorphism(E, E, wrong)


def test_central_quotient_map(prime_field):
    family = heis_family(prime_field)
    for E in family[1:]:
        certificate = decide_extension_isoclinism(family[0], E)
        phi = central_quotient_map(family[0], E, certificate)
        assert phi.is_bijective()
        assert check_morphism(phi).is_algebra_map


def test_fingerprints(field):
    heis = fingerprint(get("heis", field))
    assert heis == Fingerprint(2, 1, 0, 1, 1)
    assert fingerprint(get("heis_x_ab2", field)) == heis
    assert fingerprint(get("ab(3)", field)) == Fingerprint(0, 0, 0, 0, 0)
    assert fingerprint(get("idem1", field)).derived == 1


def test_refutation(rational):
    e_heis = get_extension("e_heis", rational)
    assert refutation(e_heis, get_extension("e_heis_x_ab1", rational)) is None
    assert refutation(e_heis, get_extension("split_ab2", rational)) == "dim Q differs: 2 vs 1"
    assert refutation(e_heis, get_extension("split_ab3", rational)) == "dim [[G,G]] differs: 1 vs 0"


def test_isoclinic_algebras_share_derived_dimensions(gf2):
    for first, second in [("heis", "heis_x_ab1"), ("ab(1)", "ab(3)")]:
        G, H = get(first, gf2), get(second, gf2)
        assert decide_algebra_isoclinism(G, H) is not None
        assert derived_algebra(G).dim == derived_algebra(H).dim


def test_stem_algebras_are_smallest(gf2):
    family = [get(name, gf2) for name in ("heis", "heis_x_ab1", "heis_x_ab2")]
    for G in family[1:]:
        assert decide_algebra_isoclinism(family[0], G) is not None
    smallest = min(G.dim for G in family)
    for G in family:
        assert center(G).is_within(derived_algebra(G)) == (G.dim == smallest)


def test_quotients_by_central_ideals(gf2):
    G = get("heis_x_ab1", gf2)
    z = Subspace.spanned_by(G, [G.basis(2)])
    w = Subspace.spanned_by(G, [G.basis(3)])
    assert decide_algebra_isoclinism(quotient(G, z).algebra, G) is None
    assert decide_algebra_isoclinism(quotient(G, w).algebra, G) is not None
    for ideal in (z, w):
        meets = (ideal & derived_algebra(G)).dim > 0
        assert (decide_algebra_isoclinism(quotient(G, ideal).algebra, G) is None) == meets


@pytest.mark.parametrize("name", ["heis_x_ab1", "heis_x_ab2"])
def test_subalgebra_plus_center(name, gf2):
    G = get(name, gf2)
    x, y, z, w = (G.basis(i) for i in range(4))
    for vectors in ([x, y, z], [x], [x, w], [y, z], [x, z, w]):
        H = Subspace.spanned_by(G, vectors)
        sub, _ = restrict_to_subalgebra(G, H)
        grown, _ = restrict_to_subalgebra(G, H + center(G))
        assert decide_algebra_isoclinism(sub, grown) is not None


@pytest.mark.parametrize("first, second", list(itertools.combinations_with_replacement(extension_names(), 2)))
def test_accepted_certificates(first, second, gf2):
    E1 = get_extension(first, gf2)
    E2 = get_extension(second, gf2)
    certificate = decide_extension_isoclinism(E1, E2)
    if certificate is None:
        return
    report = verify_certificate(E1, E2, certificate)
    assert report.accepted
    assert report.theorem_failures == []
    assert (E1.kernel == center(E1.G)) == (E2.kernel == center(E2.G))


@pytest.mark.parametrize("first, second", list(itertools.combinations_with_replacement(names(), 2)))
def test_isoclinic_algebras_share_fingerprints(first, second, gf2):
    G, H = get(first, gf2), get(second, gf2)
    E1, E2 = center_extension(G), center_extension(H)
    if E1.Q.dim != E2.Q.dim:
        return
    certificate = decide_extension_isoclinism(E1, E2)
    if certificate is None:
        return
    assert fingerprint(G) == fingerprint(H)
    report = verify_certificate(E1, E2, certificate)
    assert report.accepted
    assert report.theorem_failures == []
