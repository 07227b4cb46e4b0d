"""Pullbacks along isomorphisms and the common ancestor of two extensions."""

from typing import Tuple

from awbkit.algebra.construction import direct_product, restrict_to_subalgebra
from awbkit.algebra.ideal import Subspace
from awbkit.algebra.morphism import AwbMorphism, require_isomorphism
from awbkit.extension.central import (
    CentralExtension,
    ExtensionMorphism,
    extension_from_epimorphism,
)
from awbkit.linalg import matrix as mx
from awbkit.linalg.matrix import Matrix


def _block(field, rows: int, before: int, width: int, after: int) -> Matrix:
    """
    ``[0 | I | 0]`` selecting ``width`` coordinates after ``before`` others.
    """
    return Matrix.hstack(
        field,
        rows,
        Matrix.zeros(field, rows, before),
        Matrix.identity(field, width),
        Matrix.zeros(field, rows, after),
    )


def pullback_with_projection(
    extension: CentralExtension,
    eta: AwbMorphism,
) -> Tuple[CentralExtension, ExtensionMorphism]:
    """
    The backward induced extension ``{(g, q) | π(g) = η(q)}`` over ``Q1`` together with
    its isomorphism ``(g, q) ↦ g`` onto the original extension.

    :param extension: The extension ``E2`` over ``Q2``.
    :param eta: An isomorphism ``Q1 -> Q2``.
    :return:
    """
    require_isomorphism(eta)
    assert eta.target.dim == extension.Q.dim
    field = extension.field
    G2, Q1 = extension.G, eta.source
    g, q = G2.dim, Q1.dim
    product = direct_product(G2, Q1)
    condition = Matrix.hstack(field, extension.Q.dim, extension.pi.matrix, -eta.matrix)
    space = Subspace(product, mx.kernel(condition))
    G, inclusion = restrict_to_subalgebra(product, space, name=f"{G2.name or 'G'}^eta")
    pi = AwbMorphism(G, Q1, _block(field, q, g, q, 0) @ inclusion.matrix)
    pulled = extension_from_epimorphism(G, pi, name=f"pullback({extension.name})")
    beta = AwbMorphism(G, G2, _block(field, g, 0, g, q) @ inclusion.matrix)
    return pulled, ExtensionMorphism.from_beta(pulled, extension, beta, eta)


def pullback(extension: CentralExtension, eta: AwbMorphism) -> CentralExtension:
    """
    The central extension of ``Q1`` pulled back along ``η: Q1 -> Q2``.

    :param extension: The extension ``E2``.
    :param eta: An isomorphism ``Q1 -> Q2``.
    :return:
    """
    return pullback_with_projection(extension, eta)[0]


def common_ancestor(
    first: CentralExtension,
    second: CentralExtension,
    eta: AwbMorphism,
) -> Tuple[CentralExtension, ExtensionMorphism, ExtensionMorphism]:
    """
    The extension ``G' = {(g1, g2) | η(π1(g1)) = π2(g2)}`` of ``Q1`` by ``N1 × N2``
    and its projections onto both extensions.

    :param first: The extension ``E1``.
    :param second: The extension ``E2``.
    :param eta: An isomorphism ``Q1 -> Q2``.
    :return: ``E'`` and the projection triples onto ``E1`` and ``E2``.
    """
    require_isomorphism(eta)
    field = first.field
    G1, G2 = first.G, second.G
    g1, g2 = G1.dim, G2.dim
    product = direct_product(G1, G2)
    condition = Matrix.hstack(
        field,
        second.Q.dim,
        eta.matrix @ first.pi.matrix,
        -second.pi.matrix,
    )
    space = Subspace(product, mx.kernel(condition))
    G, inclusion = restrict_to_subalgebra(product, space, name=f"{G1.name or 'G1'}'")
    to_first = _block(field, g1, 0, g1, g2) @ inclusion.matrix
    to_second = _block(field, g2, g1, g2, 0) @ inclusion.matrix
    pi = AwbMorphism(G, first.Q, first.pi.matrix @ to_first)
    ancestor = extension_from_epimorphism(
        G, pi, name=f"ancestor({first.name},{second.name})"
    )
    sigma = ExtensionMorphism.from_beta(
        ancestor, first, AwbMorphism(G, G1, to_first), AwbMorphism.identity(first.Q)
    )
    tau = ExtensionMorphism.from_beta(
        ancestor, second, AwbMorphism(G, G2, to_second), eta
    )
    return ancestor, sigma, tau
