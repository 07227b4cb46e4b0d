"""Homology in degrees 0 and 1 and induced maps on ``H_1``."""

from dataclasses import dataclass
from typing import Optional, Sequence

from awbkit.algebra.awb import Awb
from awbkit.algebra.morphism import AwbMorphism, require_algebra_map
from awbkit.homology.chain import ChainSlice, chain_map_c1, chain_slice
from awbkit.linalg import matrix as mx
from awbkit.linalg import subspace as sp
from awbkit.linalg.matrix import Matrix, Vector


@dataclass(frozen=True)
class HomologySpace:
    """
    Homology as cycles modulo boundaries.

    Representatives are the canonical complement of the boundaries inside the
    cycles, so they are independent modulo boundaries.
    """

    algebra: Awb
    degree: int
    cycles: Matrix
    boundaries: Matrix
    representatives: Matrix

    @property
    def dim(self) -> int:
        return self.representatives.rows

    @property
    def chain_dim(self) -> int:
        return self.cycles.cols

    def is_cycle(self, chain: Sequence) -> bool:
        return sp.contains(self.cycles, chain)

    def is_boundary(self, chain: Sequence) -> bool:
        return sp.contains(self.boundaries, chain)

    def class_of(self, cycle: Sequence) -> Vector:
        """
        Coordinates of the class of a cycle on the representatives.

        :param cycle: A cycle.
        :return:
        """
        if not self.is_cycle(cycle):
            raise ValueError("chain is not a cycle")
        field = self.algebra.field
        stacked = Matrix.vstack(field, self.chain_dim, self.representatives, self.boundaries)
        solution = mx.solve(stacked.transpose(), Matrix(field, [[c] for c in cycle], 1))
        assert solution is not None
        return solution.column(0)[: self.dim]


def _homology(algebra: Awb, degree: int, cycles: Matrix, boundaries: Matrix) -> HomologySpace:
    representatives = sp.relative_complement(boundaries, cycles)
    return HomologySpace(algebra, degree, cycles, boundaries, representatives)


def h0(algebra: Awb, chains: Optional[ChainSlice] = None) -> HomologySpace:
    """
    ``H_0 = C_0 / im d0``, isomorphic to ``A / [[A, A]]``.

    :param algebra: The algebra.
    :param chains: The chain slice, when already computed.
    :return:
    """
    chains = chain_slice(algebra) if chains is None else chains
    field = algebra.field
    return _homology(algebra, 0, sp.full_space(field, algebra.dim), mx.image(chains.d0))


def h1(algebra: Awb, chains: Optional[ChainSlice] = None) -> HomologySpace:
    """
    ``H_1 = ker d0 / im d1``.

    :param algebra: The algebra.
    :param chains: The chain slice, when already computed.
    :return:
    """
    chains = chain_slice(algebra) if chains is None else chains
    return _homology(algebra, 1, mx.kernel(chains.d0), mx.image(chains.d1))


def induced_h1(
    phi: AwbMorphism,
    source: Optional[HomologySpace] = None,
    target: Optional[HomologySpace] = None,
) -> Matrix:
    """
    Matrix of ``H_1(φ)`` on the representatives of both homology spaces.

    :param phi: An algebra map ``A -> B``.
    :param source: ``H_1(A)``, when already computed.
    :param target: ``H_1(B)``, when already computed.
    :return: A ``dim H_1(B) x dim H_1(A)`` matrix.
    """
    require_algebra_map(phi)
    source = h1(phi.source) if source is None else source
    target = h1(phi.target) if target is None else target
    chain_map = chain_map_c1(phi)
    columns = [target.class_of(chain_map.apply(r)) for r in source.representatives.entries]
    return Matrix.from_columns(phi.source.field, columns, target.dim)
