"""Isomorphism of isoclinic stem extensions, built from their factor sets."""

from awbkit.algebra.ideal import derived_algebra
from awbkit.algebra.morphism import AwbMorphism
from awbkit.errors import InvalidCertificate, NotStem
from awbkit.extension.central import (
    CentralExtension,
    ExtensionMorphism,
    is_extension_isomorphism,
)
from awbkit.extension.factor_set import (
    check_factor_set,
    extract_factor_set,
    transport_factor_set,
)
from awbkit.extension.stem import stem_witness
from awbkit.isoclinism.certificate import IsoclinismCertificate, apply_xi, verify_certificate
from awbkit.linalg import matrix as mx
from awbkit.linalg import subspace as sp
from awbkit.linalg.matrix import Matrix, sub


def kernel_restriction(
    first: CentralExtension,
    second: CentralExtension,
    certificate: IsoclinismCertificate,
) -> Matrix:
    """
    ``ξ`` restricted to ``N1 ⊆ [[G1, G1]]``, in the canonical kernel bases.

    :param first: A stem extension ``E1``.
    :param second: A stem extension ``E2``.
    :param certificate: An accepted certificate.
    :return: A ``dim N2 x dim N1`` matrix.
    """
    D1, D2 = derived_algebra(first.G), derived_algebra(second.G)
    columns = [
        second.kernel_coordinates(apply_xi(certificate.xi, D1, D2, n))
        for n in first.kernel.vectors
    ]
    return Matrix.from_columns(first.field, columns, second.n_dim)


def stem_isomorphism(
    first: CentralExtension,
    second: CentralExtension,
    certificate: IsoclinismCertificate,
) -> ExtensionMorphism:
    """
    An isomorphism of extensions ``E1 -> E2`` over ``η``.

    With ``(f, g)`` the factor set of ``E1``, ``(h, k)`` that of ``E2`` and ``α`` the
    restriction of ``ξ`` to the kernels, ``(F, G) = α^{-1}(h, k)(η × η)``. A linear
    ``d: Q1 -> N1`` vanishing on the canonical complement ``T`` of ``[[Q1, Q1]]`` with
    ``d(ab) = F(a, b) - f(a, b)`` and ``d([a, b]) = G(a, b) - g(a, b)`` exists, and
    ``(n, q) ↦ (α(n + d(q)), η(q))`` is an isomorphism between the built extensions.
    Composed with the maps ``(n, q) ↦ χ(n) + ∂q`` it gives the result.

    :param first: A stem extension ``E1``.
    :param second: A stem extension ``E2``.
    :param certificate: An accepted certificate ``E1 -> E2``.
    :return:
    """
    for label, extension in (("E1", first), ("E2", second)):
        if stem_witness(extension) is not None:
            raise NotStem(f"{label} is not a stem extension")
    report = verify_certificate(first, second, certificate)
    if not report.accepted:
        raise InvalidCertificate(report.summary())

    field = first.field
    eta = certificate.eta
    Q1 = first.Q
    n, m = Q1.dim, first.n_dim
    alpha = kernel_restriction(first, second, certificate)
    if not alpha.is_square() or mx.rank(alpha) != m:
        raise InvalidCertificate("xi does not restrict to an isomorphism of kernels")

    fs1 = extract_factor_set(first)
    fs2 = extract_factor_set(second)
    transported = check_factor_set(transport_factor_set(fs2, eta, mx.inverse(alpha)))

    arguments, values = [], []
    for a in range(n):
        for b in range(n):
            arguments.append(Q1.product[a][b])
            values.append(sub(transported.f[a][b], fs1.f[a][b]))
            arguments.append(Q1.bracket[a][b])
            values.append(sub(transported.g[a][b], fs1.g[a][b]))
    complement = sp.complement(derived_algebra(Q1).basis)
    for t in complement.entries:
        arguments.append(t)
        values.append((field.zero,) * m)
    solution = mx.solve(Matrix(field, arguments, n), Matrix(field, values, m))
    if solution is None:
        raise InvalidCertificate("no coboundary relates the transported factor sets")
    d = solution.transpose()

    shift = Matrix.vstack(
        field,
        m + n,
        Matrix.hstack(field, m, Matrix.identity(field, m), d),
        Matrix.hstack(field, n, Matrix.zeros(field, n, m), Matrix.identity(field, n)),
    )
    moved = Matrix.block_diagonal(field, alpha, eta.matrix)
    into_second = Matrix.hstack(field, second.G.dim, second.chi, second.section)
    out_of_first = mx.inverse(Matrix.hstack(field, first.G.dim, first.chi, first.section))
    beta = AwbMorphism(first.G, second.G, into_second @ moved @ shift @ out_of_first)
    result = ExtensionMorphism.from_beta(first, second, beta, eta)
    if not is_extension_isomorphism(result):
        raise InvalidCertificate("constructed map is not an isomorphism of extensions")
    return result
