"""Stem extensions, stem covers, stemification and abelian summands."""

from dataclasses import dataclass
from typing import Optional, Tuple

from awbkit.algebra.awb import Awb
from awbkit.algebra.construction import direct_product, quotient, restrict_to_subalgebra
from awbkit.algebra.ideal import Subspace, derived_algebra
from awbkit.algebra.morphism import AwbMorphism
from awbkit.errors import NotAbelian
from awbkit.extension.central import (
    CentralExtension,
    ExtensionMorphism,
    extension_from_epimorphism,
)
from awbkit.homology.homology import h0, h1, induced_h1
from awbkit.homology.theta import theta
from awbkit.linalg import matrix as mx
from awbkit.linalg import subspace as sp
from awbkit.linalg.matrix import Matrix, Vector


def stem_witness(extension: CentralExtension) -> Optional[Vector]:
    """
    First canonical basis vector of ``N`` outside ``[[G, G]]``.

    :param extension: The extension.
    :return: ``None`` when the extension is stem.
    """
    derived = derived_algebra(extension.G)
    for n in extension.kernel.vectors:
        if not derived.contains(n):
            return n
    return None


def is_stem(extension: CentralExtension) -> bool:
    """
    Whether ``N ⊆ [[G, G]]``.

    Cross-checked against ``G/[[G, G]] ≅ Q/[[Q, Q]]``, decided by comparing the
    dimensions of ``H_0``.

    :param extension: A central extension.
    :return:
    """
    stem = stem_witness(extension) is None
    assert stem == (h0(extension.G).dim == h0(extension.Q).dim)
    return stem


def is_stem_cover(extension: CentralExtension) -> bool:
    """
    Whether ``θ`` is bijective.

    Cross-checked against the extension being stem with ``H_1(π) = 0``.

    :param extension: A central extension.
    :return:
    """
    homology = h1(extension.Q)
    cover = theta(extension, homology=homology).is_bijective()
    induced = induced_h1(extension.pi, target=homology)
    assert cover == (is_stem(extension) and induced.is_zero())
    return cover


def non_stem_part(extension: CentralExtension) -> Subspace:
    """
    The canonical complement ``M`` of ``N ∩ [[G, G]]`` inside ``N``.

    :param extension: A central extension.
    :return:
    """
    G = extension.G
    meet = extension.kernel & derived_algebra(G)
    return Subspace(G, sp.relative_complement(meet.basis, extension.kernel.basis))


def stemify(extension: CentralExtension) -> Tuple[CentralExtension, ExtensionMorphism]:
    """
    The stem extension ``G/M`` over the same ``Q`` and the projection onto it.

    :param extension: A central extension.
    :return:
    """
    M = non_stem_part(extension)
    if not M.dim:
        return extension, ExtensionMorphism.identity(extension)
    G = extension.G
    q = quotient(G, M, name=f"{G.name or 'G'}/M")
    pi = AwbMorphism(q.algebra, extension.Q, extension.pi.matrix @ q.section)
    stem = extension_from_epimorphism(
        q.algebra,
        pi,
        section=q.projection.matrix @ extension.section,
        name=f"stem({extension.name})",
    )
    projection = ExtensionMorphism.from_beta(
        extension, stem, q.projection, AwbMorphism.identity(extension.Q)
    )
    return stem, projection


@dataclass(frozen=True)
class AbelianSplit:
    """
    Decomposition ``G ≅ H ⊕ A`` with ``H`` carrying a stem extension of ``Q`` and
    ``A`` abelian. ``isomorphism`` maps ``H ⊕ A`` onto ``G``.
    """

    stem: CentralExtension
    abelian: Awb
    isomorphism: AwbMorphism


def split_off_abelian(extension: CentralExtension) -> AbelianSplit:
    """
    Splits off the abelian summand ``M`` of ``G``.

    ``T`` is ``[[G, G]]`` plus the canonical complement of ``[[G, G]] + M`` in ``G``;
    it is a complement of ``M`` containing ``[[G, G]]``.

    :param extension: A central extension.
    :return:
    """
    G = extension.G
    field = G.field
    M = non_stem_part(extension)
    derived = derived_algebra(G)
    T = derived + Subspace(G, sp.complement((derived + M).basis))
    assert T.dim + M.dim == G.dim
    H, inclusion = restrict_to_subalgebra(G, T, name=f"H({G.name or 'G'})")
    pi = extension.pi.compose(inclusion)
    section = _component_in(T, M, extension.section)
    stem = extension_from_epimorphism(H, pi, section=section, name=f"H({extension.name})")
    A = Awb.abelian(field, M.dim, name=f"ab({M.dim})")
    isomorphism = AwbMorphism(
        direct_product(H, A),
        G,
        Matrix.hstack(field, G.dim, T.basis.transpose(), M.basis.transpose()),
    )
    return AbelianSplit(stem, A, isomorphism)


def _component_in(T: Subspace, M: Subspace, section: Matrix) -> Matrix:
    """
    ``T`` coordinates of the ``T`` component of each lift, for ``G = T ⊕ M``. The
    ``M`` component lies in the kernel, so the result is again a section.

    :param T: The complement of ``M``.
    :param M: The abelian summand.
    :param section: A ``dim G x dim Q`` section.
    :return: A ``dim T x dim Q`` matrix.
    """
    field = section.field
    n = T.ambient.dim
    stacked = Matrix.vstack(field, n, T.basis, M.basis).transpose()
    solution = mx.solve(stacked, section)
    assert solution is not None
    return solution.select_rows(range(T.dim))


def direct_sum_abelian(extension: CentralExtension, abelian: Awb) -> CentralExtension:
    """
    The extension ``0 -> N ⊕ A -> G ⊕ A -> Q -> 0``.

    :param extension: A central extension.
    :param abelian: An abelian algebra ``A``.
    :return:
    """
    if not abelian.is_abelian():
        raise NotAbelian(f"{abelian.name or 'A'} is not abelian")
    field = extension.field
    G = direct_product(extension.G, abelian)
    q = extension.Q.dim
    pi = AwbMorphism(
        G,
        extension.Q,
        Matrix.hstack(field, q, extension.pi.matrix, Matrix.zeros(field, q, abelian.dim)),
    )
    section = Matrix.vstack(
        field, q, extension.section, Matrix.zeros(field, abelian.dim, q)
    )
    return extension_from_epimorphism(
        G, pi, section=section, name=f"{extension.name}+{abelian.name}"
    )


def direct_sum_projection(extension: CentralExtension, summed: CentralExtension) -> ExtensionMorphism:
    """
    The triple ``(π_N, π_G, id_Q)`` from ``direct_sum_abelian(extension, A)`` back to
    ``extension``.

    :param extension: The extension ``E``.
    :param summed: ``direct_sum_abelian(E, A)``.
    :return:
    """
    field = extension.field
    g, a = extension.G.dim, summed.G.dim - extension.G.dim
    beta = AwbMorphism(
        summed.G,
        extension.G,
        Matrix.hstack(field, g, Matrix.identity(field, g), Matrix.zeros(field, g, a)),
    )
    return ExtensionMorphism.from_beta(summed, extension, beta, AwbMorphism.identity(extension.Q))


def reassemble(split: AbelianSplit, extension: CentralExtension) -> Tuple[CentralExtension, ExtensionMorphism]:
    """
    ``direct_sum_abelian(H, A)`` and its isomorphism onto the original extension.

    :param split: The result of :func:`split_off_abelian`.
    :param extension: The original extension.
    :return:
    """
    summed = direct_sum_abelian(split.stem, split.abelian)
    beta = AwbMorphism(summed.G, extension.G, split.isomorphism.matrix)
    return summed, ExtensionMorphism.from_beta(
        summed, extension, beta, AwbMorphism.identity(extension.Q)
    )
