"""Named example algebras and extensions."""

from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from awbkit.algebra.awb import Awb, check
from awbkit.algebra.construction import d_bracket, direct_product, tautological
from awbkit.algebra.ideal import Subspace, center, derived_algebra
from awbkit.errors import UnknownName
from awbkit.extension.central import (
    CentralExtension,
    center_extension,
    make_extension,
    trivial_extension,
)
from awbkit.extension.factor_set import FactorSet, build_from_factor_set
from awbkit.homology.homology import h0, h1
from awbkit.linalg.field import Field
from awbkit.linalg.matrix import Matrix, unit

U2_UNITS = ((0, 0), (0, 1), (1, 1))
STRICT_U3_UNITS = ((0, 1), (0, 2), (1, 2))
M2_UNITS = ((0, 0), (0, 1), (1, 0), (1, 1))

# D(e0) = e1, D(e1) = 0, D(e2) = e0
U2_DERIVATION = ((0, 0, 1), (1, 0, 0), (0, 0, 0))


def matrix_unit_product(units: Sequence[Tuple[int, int]]) -> List[List[List[int]]]:
    """
    Product tensor of the span of some matrix units, closed under multiplication.

    :param units: The matrix units ``E_ab`` as pairs ``(a, b)``.
    :return:
    """
    n = len(units)
    index = {u: k for k, u in enumerate(units)}
    tensor = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i, (a, b) in enumerate(units):
        for j, (c, d) in enumerate(units):
            if b == c:
                tensor[i][j][index[(a, d)]] = 1
    return tensor


def diagonal_product(n: int) -> List[List[List[int]]]:
    tensor = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        tensor[i][i][i] = 1
    return tensor


def heisenberg(field: Field) -> Awb:
    return Awb.from_sparse(field, 3, bracket=[(0, 1, 2, 1), (1, 0, 2, -1)], name="heis")


def idempotent(field: Field) -> Awb:
    return Awb.from_sparse(field, 1, product=[(0, 0, 0, 1)], name="idem1")


def u2(field: Field) -> Awb:
    product = matrix_unit_product(U2_UNITS)
    zero = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    return Awb.from_values(field, product, zero, name="u2")


@dataclass(frozen=True)
class CatalogEntry:
    """
    A named algebra with the invariants it is known to have.

    ``expected`` maps ``center``, ``derived``, ``h0`` and ``h1`` to dimensions.
    """

    name: str
    build: Callable[[Field], Awb]
    expected: Dict[str, int] = dataclass_field(default_factory=dict)
    description: str = ""


def _abelian(n: int) -> CatalogEntry:
    return CatalogEntry(
        f"ab({n})",
        lambda field: Awb.abelian(field, n),
        {"center": n, "derived": 0, "h0": n, "h1": 2 * n * n},
        f"{n}-dimensional abelian algebra",
    )


_ENTRIES: List[CatalogEntry] = [_abelian(n) for n in range(5)] + [
    CatalogEntry(
        "zero",
        lambda field: Awb.abelian(field, 0, name="zero"),
        {"center": 0, "derived": 0, "h0": 0, "h1": 0},
        "zero algebra",
    ),
    CatalogEntry(
        "idem1",
        idempotent,
        {"center": 0, "derived": 1, "h0": 0, "h1": 0},
        "e e = e, zero bracket",
    ),
    CatalogEntry(
        "heis",
        heisenberg,
        {"center": 1, "derived": 1, "h0": 2, "h1": 12},
        "zero product, [x, y] = z",
    ),
    CatalogEntry(
        "heis_x_ab1",
        lambda field: direct_product(heisenberg(field), Awb.abelian(field, 1), name="heis_x_ab1"),
        {"center": 2, "derived": 1, "h0": 3},
        "heis x ab(1)",
    ),
    CatalogEntry(
        "heis_x_ab2",
        lambda field: direct_product(heisenberg(field), Awb.abelian(field, 2), name="heis_x_ab2"),
        {"center": 3, "derived": 1, "h0": 4},
        "heis x ab(2)",
    ),
    CatalogEntry(
        "u2",
        u2,
        {"center": 0, "derived": 3, "h0": 0},
        "upper triangular 2x2 matrices, zero bracket",
    ),
    CatalogEntry(
        "taut_u2",
        lambda field: tautological(field, matrix_unit_product(U2_UNITS), name="taut_u2"),
        {"center": 0, "derived": 3, "h0": 0},
        "upper triangular 2x2 matrices, [a, b] = ab - ba",
    ),
    CatalogEntry(
        "dbr_u2",
        lambda field: d_bracket(
            field,
            matrix_unit_product(U2_UNITS),
            Matrix.of(field, U2_DERIVATION),
            name="dbr_u2",
        ),
        {"derived": 3, "h0": 0},
        "upper triangular 2x2 matrices, [a, b] = a D(b) - D(b) a",
    ),
]

_REGISTRY: Dict[str, CatalogEntry] = {entry.name: entry for entry in _ENTRIES}


def names() -> List[str]:
    return list(_REGISTRY)


def entry(name: str) -> CatalogEntry:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownName(f"unknown catalog algebra: {name!r}") from None


def invariants(algebra: Awb) -> Dict[str, int]:
    return {
        "center": center(algebra).dim,
        "derived": derived_algebra(algebra).dim,
        "h0": h0(algebra).dim,
        "h1": h1(algebra).dim,
    }


def mismatches(catalog_entry: CatalogEntry, algebra: Awb) -> Dict[str, Tuple[int, int]]:
    """
    Expected values that the library does not reproduce.

    :param catalog_entry: The entry.
    :param algebra: Its algebra.
    :return: ``{invariant: (expected, computed)}``.
    """
    computed = invariants(algebra)
    return {
        key: (value, computed[key])
        for key, value in catalog_entry.expected.items()
        if computed[key] != value
    }


@lru_cache(maxsize=None)
def get(name: str, field: Optional[Field] = None) -> Awb:
    """
    A catalog algebra, validated and checked against its expected invariants.

    :param name: The entry name, such as ``"heis"`` or ``"ab(2)"``.
    :param field: The ground field, the rationals by default.
    :return:
    """
    field = Field.rational() if field is None else field
    catalog_entry = entry(name)
    algebra = check(catalog_entry.build(field).renamed(name))
    wrong = mismatches(catalog_entry, algebra)
    assert not wrong, f"{name}: {wrong}"
    return algebra


def _cover_ab1(f: Sequence[int], g: Sequence[int]) -> Callable[[Field], CentralExtension]:
    def build(field: Field) -> CentralExtension:
        Q = Awb.abelian(field, 1)
        fs = FactorSet(Q, 2, [[tuple(field(c) for c in f)]], [[tuple(field(c) for c in g)]])
        return build_from_factor_set(fs)

    return build


def _kernel(algebra: Awb, *indices: int) -> Subspace:
    return Subspace.spanned_by(algebra, [unit(algebra.field, algebra.dim, i) for i in indices])


_EXTENSIONS: Dict[str, Callable[[Field], CentralExtension]] = {
    "e_heis": lambda field: make_extension(get("heis", field), _kernel(get("heis", field), 2)),
    "e_heis_x_ab1": lambda field: center_extension(get("heis_x_ab1", field)),
    "heis_x_ab1_by_z": lambda field: make_extension(
        get("heis_x_ab1", field), _kernel(get("heis_x_ab1", field), 2)
    ),
    "split_ab2": lambda field: make_extension(get("ab(2)", field), _kernel(get("ab(2)", field), 0)),
    "split_ab3": lambda field: make_extension(get("ab(3)", field), _kernel(get("ab(3)", field), 0)),
    "triv_heis": lambda field: trivial_extension(get("heis", field)),
    "triv_ab3": lambda field: trivial_extension(get("ab(3)", field)),
    "triv_taut_u2": lambda field: trivial_extension(get("taut_u2", field)),
    "cover_ab1": _cover_ab1((1, 0), (0, 1)),
    "cover_ab1_alt": _cover_ab1((1, 1), (0, 1)),
}


def extension_names() -> List[str]:
    return list(_EXTENSIONS)


@lru_cache(maxsize=None)
def get_extension(name: str, field: Optional[Field] = None) -> CentralExtension:
    """
    A catalog central extension.

    :param name: The entry name, such as ``"e_heis"``.
    :param field: The ground field, the rationals by default.
    :return:
    """
    field = Field.rational() if field is None else field
    try:
        build = _EXTENSIONS[name]
    except KeyError:
        raise UnknownName(f"unknown catalog extension: {name!r}") from None
    return build(field).renamed(name)
