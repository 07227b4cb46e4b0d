"""Factor sets of central extensions with trivial actions."""

from typing import List, Optional, Sequence, Tuple

from awbkit.algebra.awb import Awb
from awbkit.algebra.ideal import Subspace
from awbkit.algebra.morphism import AwbMorphism
from awbkit.errors import CocycleViolation, Eq6Violation, FactorSetError, Violation
from awbkit.extension.central import CentralExtension, ExtensionMorphism, check_central
from awbkit.linalg import matrix as mx
from awbkit.linalg.matrix import Matrix, Vector, is_zero, sub, unit

Table = Tuple[Tuple[Vector, ...], ...]


class FactorSet:
    """
    Bilinear data ``(f, g)`` on ``Q`` with values in ``K^m``.

    ``f[a][b] = f(q_a, q_b)`` and ``g[a][b] = g(q_a)(q_b)``, each a vector of length ``m``.

    :param Q: The algebra ``Q``.
    :param m: Dimension of ``N``.
    :param f: The product part.
    :param g: The bracket part.
    """

    __slots__ = ("Q", "m", "f", "g")

    def __init__(self, Q: Awb, m: int, f: Sequence[Sequence[Sequence]], g: Sequence[Sequence[Sequence]]):
        n = Q.dim
        self.Q = Q
        self.m = m
        self.f: Table = tuple(tuple(tuple(v) for v in row) for row in f)
        self.g: Table = tuple(tuple(tuple(v) for v in row) for row in g)
        for table in (self.f, self.g):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"factor set table is not {n} x {n}")
            if any(len(v) != m for row in table for v in row):
                raise ValueError(f"factor set values are not of length {m}")

    @classmethod
    def zero(cls, Q: Awb, m: int) -> "FactorSet":
        zero = (Q.field.zero,) * m
        table = [[zero] * Q.dim for _ in range(Q.dim)]
        return cls(Q, m, table, table)

    @classmethod
    def from_sparse(
        cls,
        Q: Awb,
        m: int,
        f: Sequence[Tuple[int, int, int, object]] = (),
        g: Sequence[Tuple[int, int, int, object]] = (),
    ) -> "FactorSet":
        """
        Builds a factor set from entries ``(a, b, r, value)``; omitted entries are zero.

        :param Q: The algebra ``Q``.
        :param m: Dimension of ``N``.
        :param f: Entries of ``f``.
        :param g: Entries of ``g``.
        :return:
        """
        field = Q.field
        tables = []
        for entries in (f, g):
            table = [[[field.zero] * m for _ in range(Q.dim)] for _ in range(Q.dim)]
            for a, b, r, value in entries:
                table[a][b][r] += field(value)
            tables.append(table)
        return cls(Q, m, tables[0], tables[1])

    @property
    def field(self):
        return self.Q.field

    def f_on(self, u: Sequence, v: Sequence) -> Vector:
        return _bilinear(self, self.f, u, v)

    def g_on(self, u: Sequence, v: Sequence) -> Vector:
        """
        ``g(u)(v)`` for arbitrary vectors of ``Q``.

        :param u: Argument of ``g``.
        :param v: Argument of ``g(u)``.
        :return:
        """
        return _bilinear(self, self.g, u, v)

    def sparse_entries(self):
        result = ([], [])
        for table, entries in zip((self.f, self.g), result):
            for a, row in enumerate(table):
                for b, v in enumerate(row):
                    for r, value in enumerate(v):
                        if value:
                            entries.append((a, b, r, value))
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FactorSet)
            and self.Q == other.Q
            and self.m == other.m
            and self.f == other.f
            and self.g == other.g
        )

    def __repr__(self) -> str:
        return f"FactorSet(Q={self.Q.name!r}, m={self.m})"


def _bilinear(fs: FactorSet, table: Table, u: Sequence, v: Sequence) -> Vector:
    vectors, coefficients = [], []
    for a, x in enumerate(u):
        for b, y in enumerate(v):
            if x and y:
                vectors.append(table[a][b])
                coefficients.append(x * y)
    return mx.combine(fs.field, coefficients, vectors, fs.m)


def factor_set_violations(fs: FactorSet) -> List[Violation]:
    """
    Every basis triple where ``f(ab, c) = f(a, bc)`` or
    ``g(ab)(c) = f([a, c], b) + f(a, [b, c])`` fails.

    :param fs: The factor set.
    :return:
    """
    Q = fs.Q
    e = [Q.basis(i) for i in range(Q.dim)]
    found: List[Violation] = []
    for a in range(Q.dim):
        for b in range(Q.dim):
            for c in range(Q.dim):
                defect = sub(fs.f_on(Q.product[a][b], e[c]), fs.f_on(e[a], Q.product[b][c]))
                if not is_zero(defect):
                    found.append(CocycleViolation((a, b, c)))
    for a in range(Q.dim):
        for b in range(Q.dim):
            for c in range(Q.dim):
                left = fs.g_on(Q.product[a][b], e[c])
                right = mx.add(
                    fs.f_on(Q.bracket[a][c], e[b]),
                    fs.f_on(e[a], Q.bracket[b][c]),
                )
                if not is_zero(sub(left, right)):
                    found.append(Eq6Violation((a, b, c)))
    return found


def check_factor_set(fs: FactorSet) -> FactorSet:
    found = factor_set_violations(fs)
    if found:
        raise FactorSetError(found)
    return fs


def extract_factor_set(extension: CentralExtension, section: Optional[Matrix] = None) -> FactorSet:
    """
    ``f(a, b) = ∂a ∂b - ∂(ab)`` and ``g(a)(b) = [∂a, ∂b] - ∂[a, b]`` in kernel coordinates.

    :param extension: A central extension.
    :param section: The lift ``∂``; the extension section by default.
    :return:
    """
    check_central(extension.G, extension.kernel)
    G, Q = extension.G, extension.Q
    section = extension.section if section is None else section
    lifts = section.columns()
    f, g = [], []
    for a in range(Q.dim):
        f_row, g_row = [], []
        for b in range(Q.dim):
            product = sub(G.multiply(lifts[a], lifts[b]), section.apply(Q.product[a][b]))
            bracket = sub(G.commute(lifts[a], lifts[b]), section.apply(Q.bracket[a][b]))
            f_row.append(extension.kernel_coordinates(product))
            g_row.append(extension.kernel_coordinates(bracket))
        f.append(f_row)
        g.append(g_row)
    return FactorSet(Q, extension.n_dim, f, g)


def build_from_factor_set(fs: FactorSet, name: str = "") -> CentralExtension:
    """
    The extension ``N ⊕ Q`` with ``(n, q)(n', q') = (f(q, q'), qq')`` and
    ``[(n, q), (n', q')] = (g(q)(q'), [q, q'])``.

    The basis of ``G`` lists the basis of ``N`` first.

    :param fs: A factor set.
    :param name: A label.
    :return:
    """
    check_factor_set(fs)
    Q, m, n = fs.Q, fs.m, fs.Q.dim
    field = fs.field
    size = m + n
    zero = (field.zero,) * size
    product = [[zero] * size for _ in range(size)]
    bracket = [[zero] * size for _ in range(size)]
    for a in range(n):
        for b in range(n):
            product[m + a][m + b] = fs.f[a][b] + Q.product[a][b]
            bracket[m + a][m + b] = fs.g[a][b] + Q.bracket[a][b]
    G = Awb(field, product, bracket, name or f"N+{Q.name or 'Q'}")
    kernel = Subspace.spanned_by(G, [unit(field, size, r) for r in range(m)])
    pi = AwbMorphism(
        G,
        Q,
        Matrix.hstack(field, n, Matrix.zeros(field, n, m), Matrix.identity(field, n)),
    )
    section = Matrix.from_columns(field, [unit(field, size, m + a) for a in range(n)], size)
    return CentralExtension(G, kernel, Q, pi, section, name)


def roundtrip_isomorphism(built: CentralExtension, extension: CentralExtension) -> ExtensionMorphism:
    """
    The map ``(n, q) ↦ χ(n) + ∂q`` from the extension built out of the extracted factor
    set back to the original extension.

    :param built: ``build_from_factor_set(extract_factor_set(extension))``.
    :param extension: The original extension.
    :return:
    """
    field = extension.field
    beta = AwbMorphism(
        built.G,
        extension.G,
        Matrix.hstack(field, extension.G.dim, extension.chi, extension.section),
    )
    return ExtensionMorphism(
        built,
        extension,
        Matrix.identity(field, extension.n_dim),
        beta,
        AwbMorphism.identity(extension.Q),
    )


def transport_factor_set(fs: FactorSet, eta: AwbMorphism, alpha_inverse: Matrix) -> FactorSet:
    """
    ``(F, G)(a, b) = α^{-1}((h, k)(η a, η b))``: a factor set on ``Q2`` moved to ``Q1``.

    :param fs: The factor set ``(h, k)`` on ``Q2``.
    :param eta: An isomorphism ``Q1 -> Q2``.
    :param alpha_inverse: The ``m1 x m2`` matrix of a linear isomorphism ``N2 -> N1``.
    :return:
    """
    assert eta.target.dim == fs.Q.dim and alpha_inverse.cols == fs.m
    images = [eta.image_of(a) for a in range(eta.source.dim)]
    n = eta.source.dim
    F = [[alpha_inverse.apply(fs.f_on(images[a], images[b])) for b in range(n)] for a in range(n)]
    G = [[alpha_inverse.apply(fs.g_on(images[a], images[b])) for b in range(n)] for a in range(n)]
    return FactorSet(eta.source, alpha_inverse.rows, F, G)
