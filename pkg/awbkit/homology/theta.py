"""Connecting map ``θ: H_1(Q) -> N`` of a central extension."""

from dataclasses import dataclass
from typing import Optional, Sequence

from awbkit.algebra.awb import Awb
from awbkit.algebra.ideal import Subspace, derived_algebra
from awbkit.errors import NotCentral
from awbkit.extension.central import CentralExtension, center_extension, check_central
from awbkit.homology.chain import evaluate_cycle
from awbkit.homology.homology import HomologySpace, h1
from awbkit.linalg import matrix as mx
from awbkit.linalg.matrix import Matrix, Vector


@dataclass(frozen=True)
class ThetaMap:
    """
    Matrix of ``θ`` from the representatives of ``H_1(Q)`` to the canonical basis of ``N``.
    """

    extension: CentralExtension
    homology: HomologySpace
    matrix: Matrix

    @property
    def rank(self) -> int:
        return mx.rank(self.matrix)

    def image(self) -> Subspace:
        """
        Image of ``θ`` as a subspace of ``G``.

        :return:
        """
        E = self.extension
        vectors = [E.chi.apply(column) for column in self.matrix.columns()]
        return Subspace.spanned_by(E.G, vectors)

    def kernel(self) -> Matrix:
        """
        Kernel of ``θ`` in ``H_1(Q)`` coordinates.

        :return:
        """
        return mx.kernel(self.matrix)

    def is_bijective(self) -> bool:
        return self.matrix.is_square() and self.rank == self.matrix.rows


def theta_value(
    extension: CentralExtension,
    cycle: Sequence,
    section: Optional[Matrix] = None,
) -> Vector:
    """
    Image in ``G`` of a cycle of ``C_1(Q)``: each ``q ⊗ q'`` is sent to ``∂q ∂q'`` and
    each ``q ∘ q'`` to ``[∂q, ∂q']``.

    :param extension: The extension.
    :param cycle: A cycle of ``C_1(Q)``.
    :param section: The lift ``∂``; the extension section by default.
    :return: A vector of ``N``, in ``G`` coordinates.
    """
    G = extension.G
    section = extension.section if section is None else section
    return evaluate_cycle(
        cycle,
        extension.Q.dim,
        section.columns(),
        G.multiply,
        G.commute,
        (G.field.zero,) * G.dim,
    )


def theta(
    extension: CentralExtension,
    section: Optional[Matrix] = None,
    homology: Optional[HomologySpace] = None,
) -> ThetaMap:
    """
    The connecting map of the five-term sequence.

    :param extension: A central extension.
    :param section: Another right inverse of ``pi`` to lift with.
    :param homology: ``H_1(Q)``, when already computed.
    :return:
    """
    check_central(extension.G, extension.kernel)
    homology = h1(extension.Q) if homology is None else homology
    columns = []
    for r in homology.representatives.entries:
        value = theta_value(extension, r, section)
        if not extension.kernel.contains(value):
            raise NotCentral((-1, -1), "lifted cycle does not land in the kernel")
        columns.append(extension.kernel_coordinates(value))
    matrix = Matrix.from_columns(extension.field, columns, extension.n_dim)
    return ThetaMap(extension, homology, matrix)


@dataclass(frozen=True)
class ThetaQ:
    """
    ``θ_Q: H_1(Q/Z(Q)) -> [[Q, Q]]``, whose image is ``[[Q, Q]] ∩ Z(Q)``.

    ``matrix`` has values in the ambient coordinates of ``Q`` and ``derived_matrix`` in
    the canonical basis of ``derived``.
    """

    theta: ThetaMap
    matrix: Matrix
    derived: Subspace
    derived_matrix: Matrix

    def image(self) -> Subspace:
        return self.theta.image()

    @property
    def rank(self) -> int:
        return self.theta.rank


def theta_q(algebra: Awb) -> ThetaQ:
    """
    ``θ`` of the extension ``0 -> Z(Q) -> Q -> Q/Z(Q) -> 0`` followed by the inclusion
    of the center, with values in ``[[Q, Q]]``.

    :param algebra: The algebra ``Q``.
    :return:
    """
    connecting = theta(center_extension(algebra))
    ambient = connecting.extension.chi @ connecting.matrix
    derived = derived_algebra(algebra)
    columns = [derived.coordinates(v) for v in ambient.columns()]
    return ThetaQ(connecting, ambient, derived, Matrix.from_columns(algebra.field, columns, derived.dim))
