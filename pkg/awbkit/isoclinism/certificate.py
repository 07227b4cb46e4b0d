"""Isoclinism certificates ``(η, ξ)`` and their verification."""

from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional, Tuple

from awbkit.algebra.construction import quotient
from awbkit.algebra.ideal import Subspace, center, derived_algebra
from awbkit.algebra.morphism import AwbMorphism, check_morphism, require_algebra_map, restrict_matrix
from awbkit.extension.central import (
    CentralExtension,
    ExtensionMorphism,
    check_extension_morphism,
    commutator_maps,
)
from awbkit.linalg import matrix as mx
from awbkit.linalg.matrix import Matrix, Vector


@dataclass(frozen=True)
class IsoclinismCertificate:
    """
    An isomorphism ``η: Q1 -> Q2`` and a linear bijection ``ξ: [[G1, G1]] -> [[G2, G2]]``.

    ``xi`` is a ``dim [[G2, G2]] x dim [[G1, G1]]`` matrix in the canonical bases of the
    derived subalgebras.
    """

    eta: AwbMorphism
    xi: Matrix

    @classmethod
    def identity(cls, extension: CentralExtension) -> "IsoclinismCertificate":
        dim = derived_algebra(extension.G).dim
        return cls(AwbMorphism.identity(extension.Q), Matrix.identity(extension.field, dim))

    def inverse(self) -> "IsoclinismCertificate":
        return IsoclinismCertificate(self.eta.inverse(), mx.inverse(self.xi))

    def then(self, other: "IsoclinismCertificate") -> "IsoclinismCertificate":
        """
        The certificate ``E1 -> E3`` obtained by following ``self: E1 -> E2`` with
        ``other: E2 -> E3``.

        :param other: A certificate ``E2 -> E3``.
        :return:
        """
        return IsoclinismCertificate(other.eta.compose(self.eta), other.xi @ self.xi)


def derived_vector(derived: Subspace, coordinates) -> Vector:
    return mx.combine(derived.ambient.field, coordinates, derived.vectors, derived.ambient.dim)


def apply_xi(
    xi: Matrix,
    source: Subspace,
    target: Subspace,
    vector,
) -> Vector:
    """
    Applies ``ξ`` to a vector of ``[[G1, G1]]`` given in ``G1`` coordinates.

    :param xi: The matrix of ``ξ``.
    :param source: ``[[G1, G1]]``.
    :param target: ``[[G2, G2]]``.
    :param vector: A vector of ``[[G1, G1]]``.
    :return: Its image, in ``G2`` coordinates.
    """
    return derived_vector(target, xi.apply(source.coordinates(vector)))


@dataclass
class CertificateReport:
    """
    Outcome of a verification.

    ``failures`` are violated requirements of the definition, each with the offending
    basis pair when there is one. ``theorem_failures`` are consequences that must hold
    whenever the definition holds.
    """

    failures: List[Tuple[str, Optional[Tuple[int, int]]]] = dataclass_field(default_factory=list)
    theorem_failures: List[Tuple[str, Optional[Tuple[int, int]]]] = dataclass_field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.accepted:
            return "accepted"
        check, pair = self.failures[0]
        return f"rejected: {check}" + (f" at {pair}" if pair is not None else "")


def verify_certificate(
    first: CentralExtension,
    second: CentralExtension,
    certificate: IsoclinismCertificate,
) -> CertificateReport:
    """
    Checks a certificate between two central extensions.

    The definition requires ``η`` to be an algebra isomorphism, ``ξ`` a linear
    bijection, and ``ξ ∘ C1 = C2 ∘ (η × η)``, ``ξ ∘ P1 = P2 ∘ (η × η)`` on basis pairs.
    When these hold, the report also checks ``π2 ∘ ξ = η ∘ π1`` on ``[[G1, G1]]``,
    ``ξ(N1 ∩ [[G1, G1]]) = N2 ∩ [[G2, G2]]`` and that ``ξ`` preserves products and
    brackets.

    :param first: The extension ``E1``.
    :param second: The extension ``E2``.
    :param certificate: The certificate.
    :return:
    """
    first.field.check_same(second.field)
    report = CertificateReport()
    eta, xi = certificate.eta, certificate.xi
    maps1, maps2 = commutator_maps(first), commutator_maps(second)
    D1, D2 = maps1.derived, maps2.derived

    if eta.matrix.shape != (second.Q.dim, first.Q.dim):
        report.failures.append(("eta has the wrong shape", None))
        return report
    eta_report = check_morphism(eta)
    for pair in eta_report.product_failures:
        report.failures.append(("eta does not preserve the product", pair))
    for pair in eta_report.bracket_failures:
        report.failures.append(("eta does not preserve the bracket", pair))
    if not (eta_report.injective and eta_report.surjective):
        report.failures.append(("eta is not bijective", None))
    if xi.shape != (D2.dim, D1.dim):
        report.failures.append(("xi has the wrong shape", None))
        return report
    if mx.rank(xi) != D1.dim or D1.dim != D2.dim:
        report.failures.append(("xi is not bijective", None))

    images = [eta.image_of(a) for a in range(first.Q.dim)]
    for a in range(first.Q.dim):
        for b in range(first.Q.dim):
            left = apply_xi(xi, D1, D2, maps1.C(a, b))
            if left != maps2.C_on(second.G, images[a], images[b]):
                report.failures.append(("C-square does not commute", (a, b)))
            left = apply_xi(xi, D1, D2, maps1.P(a, b))
            if left != maps2.P_on(second.G, images[a], images[b]):
                report.failures.append(("P-square does not commute", (a, b)))
    if not report.accepted:
        return report

    for r, x in enumerate(D1.vectors):
        if second.pi(apply_xi(xi, D1, D2, x)) != eta(first.pi(x)):
            report.theorem_failures.append(("pi2 xi != eta pi1", (r, r)))
    meet1 = first.kernel & D1
    meet2 = second.kernel & D2
    moved = Subspace.spanned_by(second.G, [apply_xi(xi, D1, D2, v) for v in meet1.vectors])
    if moved != meet2:
        report.theorem_failures.append(("xi does not map N1 ∩ [[G1,G1]] onto N2 ∩ [[G2,G2]]", None))
    for r, x in enumerate(D1.vectors):
        for s, y in enumerate(D1.vectors):
            ax, ay = apply_xi(xi, D1, D2, x), apply_xi(xi, D1, D2, y)
            if apply_xi(xi, D1, D2, first.G.multiply(x, y)) != second.G.multiply(ax, ay):
                report.theorem_failures.append(("xi does not preserve the product", (r, s)))
            if apply_xi(xi, D1, D2, first.G.commute(x, y)) != second.G.commute(ax, ay):
                report.theorem_failures.append(("xi does not preserve the bracket", (r, s)))
    return report


def is_isoclinic_homomorphism(m: ExtensionMorphism) -> bool:
    """
    Whether ``γ`` is bijective and ``ker β ∩ [[G1, G1]] = 0``.

    :param m: A morphism of central extensions.
    :return:
    """
    assert check_extension_morphism(m).is_morphism
    if not m.gamma.is_bijective():
        return False
    return (m.beta.kernel() & derived_algebra(m.source.G)).dim == 0


def induced_certificate(m: ExtensionMorphism) -> IsoclinismCertificate:
    """
    The certificate ``(γ, β|[[G1, G1]])`` of an isoclinic homomorphism.

    :param m: An isoclinic homomorphism.
    :return:
    """
    if not is_isoclinic_homomorphism(m):
        raise ValueError("morphism is not isoclinic")
    xi = restrict_matrix(m.beta, derived_algebra(m.source.G), derived_algebra(m.target.G))
    return IsoclinismCertificate(m.gamma, xi)


def is_isoclinic_algebra_hom(beta: AwbMorphism) -> bool:
    """
    Whether ``ker β ∩ [[G, G]] = 0`` and ``im β + Z(H) = H``.

    :param beta: An algebra map ``G -> H``.
    :return:
    """
    require_algebra_map(beta)
    if (beta.kernel() & derived_algebra(beta.source)).dim:
        return False
    return (beta.image() + center(beta.target)).dim == beta.target.dim


def central_quotient_map(
    first: CentralExtension,
    second: CentralExtension,
    certificate: IsoclinismCertificate,
) -> AwbMorphism:
    """
    The isomorphism ``G1/Z(G1) -> G2/Z(G2)`` induced by ``η``.

    :param first: The extension ``E1``.
    :param second: The extension ``E2``.
    :param certificate: An accepted certificate.
    :return:
    """
    q1 = quotient(first.G, center(first.G))
    q2 = quotient(second.G, center(second.G))
    lift_to_q2 = second.section @ certificate.eta.matrix @ first.pi.matrix
    matrix = q2.projection.matrix @ lift_to_q2 @ q1.section
    return AwbMorphism(q1.algebra, q2.algebra, matrix)
