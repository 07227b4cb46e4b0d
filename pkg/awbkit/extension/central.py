"""Central extensions ``0 -> N -> G -> Q -> 0`` and their morphisms."""

from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional, Sequence, Tuple

from awbkit.algebra.awb import Awb
from awbkit.algebra.construction import quotient
from awbkit.algebra.ideal import Subspace, center, derived_algebra, require_ideal
from awbkit.algebra.morphism import AwbMorphism, check_morphism, require_algebra_map
from awbkit.errors import NotAlgebraMap, NotCentral
from awbkit.linalg import matrix as mx
from awbkit.linalg.matrix import Matrix, Vector, is_zero


class CentralExtension:
    """
    Central extension of ``Q`` by the ideal ``N`` of ``G``.

    ``N`` is abstractly the vector space of its canonical basis, so ``chi`` is the
    ``dim G x dim N`` matrix of that basis. The section is a linear right inverse of
    ``pi``.

    :param G: The middle algebra.
    :param kernel: The central ideal ``N`` of ``G``.
    :param Q: The quotient algebra.
    :param pi: The projection ``G -> Q``.
    :param section: A ``dim G x dim Q`` matrix with ``pi ∘ section = id``.
    :param name: A label.
    """

    __slots__ = ("G", "kernel", "Q", "pi", "section", "name")

    def __init__(
        self,
        G: Awb,
        kernel: Subspace,
        Q: Awb,
        pi: AwbMorphism,
        section: Matrix,
        name: str = "",
    ):
        assert kernel.ambient.dim == G.dim
        assert pi.source.dim == G.dim and pi.target.dim == Q.dim
        assert section.shape == (G.dim, Q.dim)
        self.G = G
        self.kernel = kernel
        self.Q = Q
        self.pi = pi
        self.section = section
        self.name = name
        assert (pi.matrix @ self.chi).is_zero()
        assert pi.matrix @ section == Matrix.identity(G.field, Q.dim)
        assert kernel.dim + Q.dim == G.dim

    @property
    def field(self):
        return self.G.field

    @property
    def chi(self) -> Matrix:
        return self.kernel.basis.transpose()

    @property
    def n_dim(self) -> int:
        return self.kernel.dim

    def kernel_coordinates(self, vector: Sequence) -> Vector:
        return self.kernel.coordinates(vector)

    def renamed(self, name: str) -> "CentralExtension":
        return CentralExtension(self.G, self.kernel, self.Q, self.pi, self.section, name)

    def __repr__(self) -> str:
        return (
            f"CentralExtension(name={self.name!r}, dim N={self.n_dim}, "
            f"dim G={self.G.dim}, dim Q={self.Q.dim})"
        )


def check_central(G: Awb, kernel: Subspace):
    """
    Raises :class:`NotCentral` with the first pair (kernel basis index, basis index)
    whose product or bracket does not vanish.

    :param G: The algebra.
    :param kernel: The subspace.
    :return:
    """
    for r, n in enumerate(kernel.vectors):
        for j in range(G.dim):
            e = G.basis(j)
            for label, value in (
                ("n e", G.multiply(n, e)),
                ("e n", G.multiply(e, n)),
                ("[n, e]", G.commute(n, e)),
                ("[e, n]", G.commute(e, n)),
            ):
                if not is_zero(value):
                    raise NotCentral((r, j), f"({label} != 0)")


def make_extension(G: Awb, kernel: Subspace, name: str = "") -> CentralExtension:
    """
    The central extension ``0 -> N -> G -> G/N -> 0``.

    :param G: The algebra.
    :param kernel: A central two-sided ideal.
    :param name: A label.
    :return:
    """
    require_ideal(G, kernel, "N")
    check_central(G, kernel)
    q = quotient(G, kernel, name=f"{G.name or 'G'}/N")
    return CentralExtension(G, kernel, q.algebra, q.projection, q.section, name)


def extension_from_epimorphism(
    G: Awb,
    pi: AwbMorphism,
    section: Optional[Matrix] = None,
    name: str = "",
) -> CentralExtension:
    """
    The central extension given by a surjective algebra map with central kernel.

    :param G: The algebra.
    :param pi: A surjective algebra map out of ``G``.
    :param section: A right inverse of ``pi``; by default the solution of
        ``pi x = id`` with free variables set to zero.
    :param name: A label.
    :return:
    """
    require_algebra_map(pi)
    if not pi.is_surjective():
        raise NotAlgebraMap("projection is not surjective")
    kernel = pi.kernel()
    check_central(G, kernel)
    if section is None:
        section = mx.solve(pi.matrix, Matrix.identity(G.field, pi.target.dim))
        assert section is not None
    return CentralExtension(G, kernel, pi.target, pi, section, name)


def trivial_extension(algebra: Awb) -> CentralExtension:
    return make_extension(algebra, Subspace.zero(algebra), name=f"triv({algebra.name})")


def center_extension(algebra: Awb) -> CentralExtension:
    """
    The extension ``0 -> Z(Q) -> Q -> Q/Z(Q) -> 0``.

    :param algebra: The algebra ``Q``.
    :return:
    """
    return make_extension(algebra, center(algebra), name=f"e({algebra.name})")


@dataclass(frozen=True)
class CommutatorMaps:
    """
    Values ``C(q_a, q_b) = [g_a, g_b]`` and ``P(q_a, q_b) = g_a g_b`` on lifts of the
    basis of ``Q``, in the coordinates of ``G``.
    """

    derived: Subspace
    bracket_values: Tuple[Tuple[Vector, ...], ...]
    product_values: Tuple[Tuple[Vector, ...], ...]

    def C(self, a: int, b: int) -> Vector:
        return self.bracket_values[a][b]

    def P(self, a: int, b: int) -> Vector:
        return self.product_values[a][b]

    def C_on(self, G: Awb, u: Sequence, v: Sequence) -> Vector:
        """
        Bilinear extension of ``C`` to arbitrary vectors of ``Q``.

        :param G: The middle algebra.
        :param u: Left argument, in ``Q`` coordinates.
        :param v: Right argument, in ``Q`` coordinates.
        :return:
        """
        return _extend(G, self.bracket_values, u, v)

    def P_on(self, G: Awb, u: Sequence, v: Sequence) -> Vector:
        return _extend(G, self.product_values, u, v)


def _extend(G: Awb, values, u: Sequence, v: Sequence) -> Vector:
    vectors, coefficients = [], []
    for a, x in enumerate(u):
        for b, y in enumerate(v):
            if x and y:
                vectors.append(values[a][b])
                coefficients.append(x * y)
    return mx.combine(G.field, coefficients, vectors, G.dim)


def commutator_maps(extension: CentralExtension, section: Optional[Matrix] = None) -> CommutatorMaps:
    """
    Evaluates ``C`` and ``P`` on lifts through the section.

    :param extension: The extension.
    :param section: Another right inverse of ``pi`` to lift with; the result does not
        depend on it.
    :return:
    """
    G = extension.G
    section = extension.section if section is None else section
    lifts = section.columns()
    m = extension.Q.dim
    return CommutatorMaps(
        derived=derived_algebra(G),
        bracket_values=tuple(tuple(G.commute(lifts[a], lifts[b]) for b in range(m)) for a in range(m)),
        product_values=tuple(tuple(G.multiply(lifts[a], lifts[b]) for b in range(m)) for a in range(m)),
    )


class ExtensionMorphism:
    """
    Triple ``(alpha, beta, gamma)`` between two central extensions.

    :param source: The extension ``E1``.
    :param target: The extension ``E2``.
    :param alpha: ``dim N2 x dim N1`` matrix, in the canonical kernel bases.
    :param beta: Algebra map ``G1 -> G2``.
    :param gamma: Algebra map ``Q1 -> Q2``.
    """

    __slots__ = ("source", "target", "alpha", "beta", "gamma")

    def __init__(
        self,
        source: CentralExtension,
        target: CentralExtension,
        alpha: Matrix,
        beta: AwbMorphism,
        gamma: AwbMorphism,
    ):
        assert alpha.shape == (target.n_dim, source.n_dim)
        assert beta.matrix.shape == (target.G.dim, source.G.dim)
        assert gamma.matrix.shape == (target.Q.dim, source.Q.dim)
        self.source = source
        self.target = target
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma

    @classmethod
    def identity(cls, extension: CentralExtension) -> "ExtensionMorphism":
        return cls(
            extension,
            extension,
            Matrix.identity(extension.field, extension.n_dim),
            AwbMorphism.identity(extension.G),
            AwbMorphism.identity(extension.Q),
        )

    @classmethod
    def from_beta(
        cls,
        source: CentralExtension,
        target: CentralExtension,
        beta: AwbMorphism,
        gamma: Optional[AwbMorphism] = None,
    ) -> "ExtensionMorphism":
        """
        Completes a map of middle algebras into a triple.

        ``alpha`` is the restriction of ``beta`` to the kernels and, unless given,
        ``gamma`` is the map induced on the quotients through the source section.

        :param source: The extension ``E1``.
        :param target: The extension ``E2``.
        :param beta: A map ``G1 -> G2`` sending ``N1`` into ``N2``.
        :param gamma: The map ``Q1 -> Q2``.
        :return:
        """
        columns = [target.kernel_coordinates(beta(n)) for n in source.kernel.vectors]
        alpha = Matrix.from_columns(source.field, columns, target.n_dim)
        if gamma is None:
            gamma = AwbMorphism(
                source.Q, target.Q, target.pi.matrix @ beta.matrix @ source.section
            )
        return cls(source, target, alpha, beta, gamma)

    def compose(self, other: "ExtensionMorphism") -> "ExtensionMorphism":
        """
        The composite ``self ∘ other``.

        :param other: A morphism whose target is the source of ``self``.
        :return:
        """
        return ExtensionMorphism(
            other.source,
            self.target,
            self.alpha @ other.alpha,
            self.beta.compose(other.beta),
            self.gamma.compose(other.gamma),
        )

    def __repr__(self) -> str:
        return f"ExtensionMorphism({self.source.name!r} -> {self.target.name!r})"


@dataclass
class ExtensionMorphismReport:
    failures: List[str] = dataclass_field(default_factory=list)
    bijective: bool = False

    @property
    def is_morphism(self) -> bool:
        return not self.failures

    @property
    def is_isomorphism(self) -> bool:
        return self.is_morphism and self.bijective


def check_extension_morphism(m: ExtensionMorphism) -> ExtensionMorphismReport:
    """
    Checks that ``beta`` and ``gamma`` are algebra maps and that both squares commute.

    :param m: The triple.
    :return:
    """
    report = ExtensionMorphismReport()
    beta_report = check_morphism(m.beta)
    gamma_report = check_morphism(m.gamma)
    if not beta_report.is_algebra_map:
        report.failures.append(
            f"beta is not an algebra map at "
            f"{(beta_report.product_failures + beta_report.bracket_failures)[:3]}"
        )
    if not gamma_report.is_algebra_map:
        report.failures.append(
            f"gamma is not an algebra map at "
            f"{(gamma_report.product_failures + gamma_report.bracket_failures)[:3]}"
        )
    if m.beta.matrix @ m.source.chi != m.target.chi @ m.alpha:
        report.failures.append("kernel square does not commute")
    if m.gamma.matrix @ m.source.pi.matrix != m.target.pi.matrix @ m.beta.matrix:
        report.failures.append("quotient square does not commute")
    report.bijective = (
        beta_report.injective
        and beta_report.surjective
        and gamma_report.injective
        and gamma_report.surjective
        and m.alpha.is_square()
        and mx.rank(m.alpha) == m.alpha.rows
    )
    return report


def is_extension_isomorphism(m: ExtensionMorphism) -> bool:
    return check_extension_morphism(m).is_isomorphism
