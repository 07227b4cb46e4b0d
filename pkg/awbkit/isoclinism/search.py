"""Exhaustive isomorphism search over prime fields."""

from typing import Callable, Iterator, List, Optional, Tuple, Union

import itertools

import numpy as np
from tqdm import tqdm

from awbkit.algebra.awb import Awb
from awbkit.algebra.construction import rebase
from awbkit.algebra.morphism import AwbMorphism
from awbkit.errors import UnsupportedField
from awbkit.extension.central import CentralExtension, ExtensionMorphism
from awbkit.linalg import subspace as sp
from awbkit.linalg.matrix import Matrix


def _tensor(algebra: Awb, tensor) -> np.ndarray:
    n = algebra.dim
    array = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k, value in enumerate(tensor[i][j]):
                array[i, j, k] = algebra.field.to_int(value)
    return array


def _constraints(source: Awb) -> List[List[Tuple[int, int]]]:
    """
    Basis pairs grouped by the depth at which every basis vector they involve has an
    image: ``e_i``, ``e_j`` and the support of ``e_i e_j`` and ``[e_i, e_j]``.
    """
    n = source.dim
    by_depth: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            support = [i, j]
            support += [k for k in range(n) if source.product[i][j][k] or source.bracket[i][j][k]]
            by_depth[max(support)].append((i, j))
    return by_depth


def _extend_span(span: set, vector: np.ndarray, p: int) -> set:
    grown = set()
    for element in span:
        base = np.array(element, dtype=np.int64)
        for c in range(p):
            grown.add(tuple(int(x) for x in (base + c * vector) % p))
    return grown


def find_algebra_isomorphisms(
    source: Awb,
    target: Awb,
    verbose: Union[bool, int] = False,
    allowed: Optional[Callable[[int, Tuple[int, ...]], bool]] = None,
) -> Iterator[AwbMorphism]:
    """
    Enumerates every algebra isomorphism ``source -> target`` over ``F_p``.

    Images of the basis vectors are chosen in order, each among the vectors of the
    target in lexicographic order, outside the span of the previous images. After each
    choice, every structure equation whose indices all have images is checked.

    :param source: The algebra ``Q1``.
    :param target: The algebra ``Q2``.
    :param verbose: Whether to show progress over the choices for ``e_0``.
    :param allowed: Optional filter on the image (given as residues) of ``e_depth``.
    :return: The isomorphisms, in lexicographic order of their images.
    """
    field = source.field
    field.check_same(target.field)
    if not field.is_prime:
        raise UnsupportedField("isomorphism search needs a prime field")
    if source.dim != target.dim:
        return
    n, p = source.dim, field.p
    if n == 0:
        yield AwbMorphism.zero(source, target)
        return

    mu1, br1 = _tensor(source, source.product), _tensor(source, source.bracket)
    mu2, br2 = _tensor(target, target.product), _tensor(target, target.bracket)
    by_depth = _constraints(source)
    candidates = [np.array(v, dtype=np.int64) for v in itertools.product(range(p), repeat=n)][1:]
    images = np.zeros((n, n), dtype=np.int64)

    def consistent(depth: int) -> bool:
        for i, j in by_depth[depth]:
            expected = mu1[i, j] @ images % p
            actual = np.tensordot(np.outer(images[i], images[j]) % p, mu2, axes=2) % p
            if not np.array_equal(expected, actual):
                return False
            expected = br1[i, j] @ images % p
            actual = np.tensordot(np.outer(images[i], images[j]) % p, br2, axes=2) % p
            if not np.array_equal(expected, actual):
                return False
        return True

    def search(depth: int, span: set):
        if depth == n:
            columns = [[field(int(x)) for x in images[i]] for i in range(n)]
            yield AwbMorphism(source, target, Matrix.from_columns(field, columns, n))
            return
        choices = candidates
        if depth == 0:
            choices = tqdm(candidates, desc="Searching", disable=not verbose)
        for vector in choices:
            key = tuple(int(x) for x in vector)
            if key in span or (allowed is not None and not allowed(depth, key)):
                continue
            images[depth] = vector
            if consistent(depth):
                yield from search(depth + 1, _extend_span(span, vector, p))
        images[depth] = 0

    yield from search(0, {(0,) * n})


def find_algebra_isomorphism(source: Awb, target: Awb) -> Optional[AwbMorphism]:
    return next(find_algebra_isomorphisms(source, target), None)


def find_extension_isomorphism(
    first: CentralExtension,
    second: CentralExtension,
    verbose: Union[bool, int] = False,
) -> Optional[ExtensionMorphism]:
    """
    First isomorphism of middle algebras that maps ``N1`` onto ``N2``, completed into a
    triple.

    :param first: The extension ``E1``.
    :param second: The extension ``E2``.
    :param verbose: Whether to show progress.
    :return:
    """
    if first.n_dim != second.n_dim or first.Q.dim != second.Q.dim:
        return None
    field = first.field
    m = first.n_dim
    basis = first.kernel.vectors + list(sp.complement(first.kernel.basis).entries)
    rebased, change = rebase(first.G, basis)

    def allowed(depth: int, key: Tuple[int, ...]) -> bool:
        return depth >= m or second.kernel.contains(tuple(field(x) for x in key))

    for beta in find_algebra_isomorphisms(rebased, second.G, verbose=verbose, allowed=allowed):
        beta = beta.compose(change.inverse())
        return ExtensionMorphism.from_beta(first, second, beta)
    return None


def automorphisms(algebra: Awb) -> List[AwbMorphism]:
    return list(find_algebra_isomorphisms(algebra, algebra))
