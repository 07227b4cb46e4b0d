"""Deciding isoclinism of central extensions and of algebras."""

from typing import NamedTuple, Optional, Union

from tqdm import tqdm

from awbkit.algebra.awb import Awb
from awbkit.algebra.construction import quotient
from awbkit.algebra.ideal import center, derived_algebra
from awbkit.algebra.morphism import AwbMorphism, require_isomorphism
from awbkit.errors import DimensionGuardExceeded, UnsupportedField
from awbkit.extension.central import CentralExtension, center_extension, commutator_maps
from awbkit.homology.homology import h1, induced_h1
from awbkit.homology.theta import theta, theta_q
from awbkit.isoclinism.certificate import IsoclinismCertificate
from awbkit.isoclinism.search import find_algebra_isomorphisms
from awbkit.linalg import matrix as mx
from awbkit.linalg import subspace as sp
from awbkit.linalg.matrix import Matrix

DEFAULT_MAX_DIM = 5


class Fingerprint(NamedTuple):
    central_quotient: int
    derived: int
    derived_of_central_quotient: int
    center_meet_derived: int
    theta_q_rank: int


def fingerprint(algebra: Awb) -> Fingerprint:
    """
    Invariants shared by isoclinic algebras.

    :param algebra: The algebra ``G``.
    :return: ``(dim G/Z, dim [[G,G]], dim [[G/Z,G/Z]], dim Z ∩ [[G,G]], rank θ_G)``.
    """
    Z = center(algebra)
    D = derived_algebra(algebra)
    central_quotient = quotient(algebra, Z).algebra
    return Fingerprint(
        central_quotient=central_quotient.dim,
        derived=D.dim,
        derived_of_central_quotient=derived_algebra(central_quotient).dim,
        center_meet_derived=(Z & D).dim,
        theta_q_rank=theta_q(algebra).rank,
    )


def xi_from_eta(
    first: CentralExtension,
    second: CentralExtension,
    eta: AwbMorphism,
) -> Optional[Matrix]:
    """
    The map ``ξ`` forced by ``η``.

    The values of ``C1`` and ``P1`` on basis pairs span ``[[G1, G1]]``, so the
    equations ``ξ(C1(a, b)) = C2(ηa, ηb)`` and ``ξ(P1(a, b)) = P2(ηa, ηb)`` determine
    ``ξ`` when they are consistent.

    :param first: The extension ``E1``.
    :param second: The extension ``E2``.
    :param eta: An algebra isomorphism ``Q1 -> Q2``.
    :return: ``ξ`` in the canonical derived bases, or ``None`` when the system is
        inconsistent or its solution is not bijective.
    """
    require_isomorphism(eta)
    field = first.field
    maps1, maps2 = commutator_maps(first), commutator_maps(second)
    D1, D2 = maps1.derived, maps2.derived
    if D1.dim != D2.dim:
        return None
    images = [eta.image_of(a) for a in range(first.Q.dim)]
    sources, targets = [], []
    for a in range(first.Q.dim):
        for b in range(first.Q.dim):
            sources.append(D1.coordinates(maps1.C(a, b)))
            targets.append(D2.coordinates(maps2.C_on(second.G, images[a], images[b])))
            sources.append(D1.coordinates(maps1.P(a, b)))
            targets.append(D2.coordinates(maps2.P_on(second.G, images[a], images[b])))
    system = Matrix(field, sources, D1.dim)
    assert mx.rank(system) == D1.dim
    solution = mx.solve(system, Matrix(field, targets, D2.dim))
    if solution is None:
        return None
    xi = solution.transpose()
    if mx.rank(xi) != D2.dim:
        return None
    return xi


def kernel_theta_criterion(
    first: CentralExtension,
    second: CentralExtension,
    eta: AwbMorphism,
) -> bool:
    """
    Whether ``H_1(η)`` maps ``ker θ(E1)`` onto ``ker θ(E2)``.

    :param first: The extension ``E1``.
    :param second: The extension ``E2``.
    :param eta: An algebra isomorphism ``Q1 -> Q2``.
    :return:
    """
    require_isomorphism(eta)
    homology1, homology2 = h1(first.Q), h1(second.Q)
    kernel1 = theta(first, homology=homology1).kernel()
    kernel2 = theta(second, homology=homology2).kernel()
    induced = induced_h1(eta, source=homology1, target=homology2)
    moved = sp.span(first.field, [induced.apply(k) for k in kernel1.entries], homology2.dim)
    return moved == kernel2


def fingerprint_mismatch(first: Fingerprint, second: Fingerprint) -> Optional[str]:
    """
    The first invariant on which two fingerprints differ.

    :param first: A fingerprint.
    :param second: Another fingerprint.
    :return: ``None`` when they agree.
    """
    for key, a, b in zip(Fingerprint._fields, first, second):
        if a != b:
            return f"{key} differs: {a} vs {b}"
    return None


def refutation(first: CentralExtension, second: CentralExtension) -> Optional[str]:
    """
    An invariant of isoclinism on which two central extensions differ.

    :param first: The extension ``E1``.
    :param second: The extension ``E2``.
    :return: ``None`` when no invariant refutes isoclinism.
    """
    if first.Q.dim != second.Q.dim:
        return f"dim Q differs: {first.Q.dim} vs {second.Q.dim}"
    D1, D2 = derived_algebra(first.G), derived_algebra(second.G)
    if D1.dim != D2.dim:
        return f"dim [[G,G]] differs: {D1.dim} vs {D2.dim}"
    meet1, meet2 = (first.kernel & D1).dim, (second.kernel & D2).dim
    if meet1 != meet2:
        return f"dim N ∩ [[G,G]] differs: {meet1} vs {meet2}"
    mismatch = fingerprint_mismatch(fingerprint(first.Q), fingerprint(second.Q))
    return None if mismatch is None else f"quotient {mismatch}"


def decide_extension_isoclinism(
    first: CentralExtension,
    second: CentralExtension,
    max_dim: int = DEFAULT_MAX_DIM,
    verbose: Union[bool, int] = False,
    cross_check: bool = False,
) -> Optional[IsoclinismCertificate]:
    """
    Searches for a certificate between two central extensions.

    Every algebra isomorphism ``η: Q1 -> Q2`` is tried in lexicographic order and the
    first one admitting a ``ξ`` is returned. Over the rationals, only refutation by
    invariants and the case ``Q1 = Q2 = 0`` are decided.

    :param first: The extension ``E1``.
    :param second: The extension ``E2``.
    :param max_dim: Largest ``dim Q`` searched.
    :param verbose: Whether to show progress.
    :param cross_check: Whether to assert agreement with the kernel-of-θ criterion for
        every ``η`` tried.
    :return: A certificate, or ``None`` when the extensions are not isoclinic.
    """
    first.field.check_same(second.field)
    if refutation(first, second) is not None:
        return None
    if first.Q.dim > max_dim:
        raise DimensionGuardExceeded(f"dim Q = {first.Q.dim} exceeds the search guard {max_dim}")
    if first.field.is_rational:
        if first.Q.dim:
            raise UnsupportedField("isoclinism is only decided over prime fields")
        eta = AwbMorphism.zero(first.Q, second.Q)
        xi = xi_from_eta(first, second, eta)
        return None if xi is None else IsoclinismCertificate(eta, xi)
    for eta in tqdm(
        find_algebra_isomorphisms(first.Q, second.Q),
        desc="Searching",
        disable=not verbose,
    ):
        xi = xi_from_eta(first, second, eta)
        if cross_check:
            assert (xi is not None) == kernel_theta_criterion(first, second, eta)
        if xi is not None:
            return IsoclinismCertificate(eta, xi)
    return None


def decide_algebra_isoclinism(
    first: Awb,
    second: Awb,
    max_dim: int = DEFAULT_MAX_DIM,
    verbose: Union[bool, int] = False,
) -> Optional[IsoclinismCertificate]:
    """
    Decides isoclinism of ``G`` and ``H`` through the extensions
    ``0 -> Z -> G -> G/Z -> 0``.

    :param first: The algebra ``G``.
    :param second: The algebra ``H``.
    :param max_dim: Largest central quotient searched.
    :param verbose: Whether to show progress.
    :return:
    """
    if fingerprint_mismatch(fingerprint(first), fingerprint(second)) is not None:
        return None
    return decide_extension_isoclinism(
        center_extension(first),
        center_extension(second),
        max_dim=max_dim,
        verbose=verbose,
    )
