"""Codecs for algebra, extension, factor-set and certificate documents."""

from typing import Any, Dict, List, Optional, Sequence, Union

from pathlib import Path

from awbkit.algebra.awb import Awb, check
from awbkit.algebra.ideal import Subspace, derived_algebra
from awbkit.algebra.morphism import AwbMorphism
from awbkit.errors import ParseError
from awbkit.extension.central import CentralExtension, make_extension
from awbkit.extension.factor_set import FactorSet
from awbkit.io.json import JSONReader, JSONWriter
from awbkit.io.yaml import SUFFIXES as YAML_SUFFIXES, YAMLReader, YAMLWriter
from awbkit.isoclinism.certificate import IsoclinismCertificate
from awbkit.linalg.field import Field
from awbkit.linalg.matrix import Matrix

Document = Dict[str, Any]


def read_document(path: Union[str, Path], verbose: Union[bool, int] = False) -> Document:
    """
    Reads a JSON or YAML document, dispatching on the suffix.

    :param path: Path to the file.
    :param verbose: Verbosity of the method.
    :return:
    """
    path = Path(path)
    if path.suffix in YAML_SUFFIXES:
        data = YAMLReader.read(path, verbose=verbose)
    else:
        data = JSONReader.read(path, verbose=verbose)
    if not isinstance(data, dict):
        raise ParseError("expected a mapping at the top level", str(path))
    return data


def write_document(
    data: Document,
    path: Union[str, Path],
    overwrite: bool = False,
    verbose: Union[bool, int] = False,
):
    path = Path(path)
    if path.suffix in YAML_SUFFIXES:
        YAMLWriter.write(data, path, overwrite=overwrite, verbose=verbose)
    else:
        JSONWriter.write(data, path, overwrite=overwrite, verbose=verbose)


def _require(data: Document, key: str, context: str):
    if not isinstance(data, dict):
        raise ParseError("expected a mapping", context)
    if key not in data:
        raise ParseError(f"missing key {key!r}", context)
    return data[key]


def _scalar(field: Field, value, context: str):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"expected an integer or a string, got {value!r}", context)
    try:
        return field(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ParseError(f"{value!r} is not a scalar of {field}", context) from None


def _index(value, bound: int, context: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < bound:
        raise ParseError(f"index {value!r} out of range [0, {bound})", context)
    return value


def encode_scalar(field: Field, value) -> Union[int, str]:
    return field.to_int(value) if field.is_prime else field.to_str(value)


def encode_field(field: Field) -> Document:
    return field.descriptor()


def decode_field(data, context: str = "field") -> Field:
    try:
        return Field.from_descriptor(data)
    except (ValueError, TypeError, KeyError, AttributeError) as error:
        raise ParseError(str(error), context) from None


def encode_matrix(matrix: Matrix) -> List[List[Union[int, str]]]:
    return [[encode_scalar(matrix.field, value) for value in row] for row in matrix.entries]


def decode_matrix(field: Field, data, rows: int, cols: int, context: str) -> Matrix:
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(f"expected {rows} rows", context)
    entries = []
    for r, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"expected {cols} entries", f"{context}[{r}]")
        entries.append([_scalar(field, value, f"{context}[{r}][{c}]") for c, value in enumerate(row)])
    return Matrix(field, entries, cols)


def _encode_sparse(field: Field, entries) -> List[List]:
    return [[*indices, encode_scalar(field, value)] for *indices, value in entries]


def _decode_sparse(field: Field, data, bounds: Sequence[int], context: str) -> List[tuple]:
    if not isinstance(data, list):
        raise ParseError("expected a list of entries", context)
    entries = []
    for position, entry in enumerate(data):
        where = f"{context}[{position}]"
        if not isinstance(entry, list) or len(entry) != len(bounds) + 1:
            raise ParseError(f"expected {len(bounds) + 1} items", where)
        indices = [_index(value, bound, where) for value, bound in zip(entry, bounds)]
        entries.append((*indices, _scalar(field, entry[-1], where)))
    return entries


def encode_awb(algebra: Awb) -> Document:
    """
    Serializes an algebra with sparse, lexicographically ordered entries.

    :param algebra: The algebra.
    :return:
    """
    product, bracket = algebra.sparse_entries()
    return {
        "name": algebra.name,
        "field": encode_field(algebra.field),
        "dim": algebra.dim,
        "product": _encode_sparse(algebra.field, product),
        "bracket": _encode_sparse(algebra.field, bracket),
    }


def decode_awb(data: Document, context: str = "algebra") -> Awb:
    """
    Parses an algebra document. The identities are not checked.

    :param data: The document.
    :param context: Location used in error messages.
    :return:
    """
    field = decode_field(_require(data, "field", context), f"{context}.field")
    dim = _require(data, "dim", context)
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise ParseError(f"invalid dimension {dim!r}", f"{context}.dim")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise ParseError("expected a string", f"{context}.name")
    product = _decode_sparse(field, data.get("product", []), (dim,) * 3, f"{context}.product")
    bracket = _decode_sparse(field, data.get("bracket", []), (dim,) * 3, f"{context}.bracket")
    return Awb.from_sparse(field, dim, product=product, bracket=bracket, name=name)


def encode_extension(extension: CentralExtension) -> Document:
    return {
        "name": extension.name,
        "algebra": encode_awb(extension.G),
        "kernel": encode_matrix(extension.kernel.basis),
    }


def decode_extension(data: Document, context: str = "extension") -> CentralExtension:
    """
    Parses an extension document ``{"algebra": ..., "kernel": [...]}``, whose kernel
    rows span ``N`` inside the middle algebra.

    :param data: The document.
    :param context: Location used in error messages.
    :return:
    """
    G = check(decode_awb(_require(data, "algebra", context), f"{context}.algebra"))
    rows = _require(data, "kernel", context)
    if not isinstance(rows, list):
        raise ParseError("expected a list of vectors", f"{context}.kernel")
    kernel = decode_matrix(G.field, rows, len(rows), G.dim, f"{context}.kernel")
    name = data.get("name", "")
    return make_extension(G, Subspace.spanned_by(G, kernel.entries), name=name if isinstance(name, str) else "")


def encode_factor_set(fs: FactorSet) -> Document:
    f, g = fs.sparse_entries()
    return {
        "quotient": encode_awb(fs.Q),
        "m": fs.m,
        "f": _encode_sparse(fs.field, f),
        "g": _encode_sparse(fs.field, g),
    }


def decode_factor_set(data: Document, context: str = "factor_set") -> FactorSet:
    """
    Parses a factor-set document. Its invariants are not checked.

    :param data: The document.
    :param context: Location used in error messages.
    :return:
    """
    Q = check(decode_awb(_require(data, "quotient", context), f"{context}.quotient"))
    m = _require(data, "m", context)
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise ParseError(f"invalid kernel dimension {m!r}", f"{context}.m")
    bounds = (Q.dim, Q.dim, m)
    f = _decode_sparse(Q.field, data.get("f", []), bounds, f"{context}.f")
    g = _decode_sparse(Q.field, data.get("g", []), bounds, f"{context}.g")
    return FactorSet.from_sparse(Q, m, f=f, g=g)


def encode_certificate(
    certificate: IsoclinismCertificate,
    first: CentralExtension,
    second: CentralExtension,
) -> Document:
    """
    Serializes a certificate together with the derived bases ``ξ`` is written in.

    :param certificate: The certificate.
    :param first: The extension ``E1``.
    :param second: The extension ``E2``.
    :return:
    """
    return {
        "eta": encode_matrix(certificate.eta.matrix),
        "xi": encode_matrix(certificate.xi),
        "bases": {
            "first": encode_matrix(derived_algebra(first.G).basis),
            "second": encode_matrix(derived_algebra(second.G).basis),
        },
    }


def decode_certificate(
    data: Document,
    first: CentralExtension,
    second: CentralExtension,
    context: str = "certificate",
) -> IsoclinismCertificate:
    """
    Parses a certificate between two known extensions.

    :param data: The document.
    :param first: The extension ``E1``.
    :param second: The extension ``E2``.
    :param context: Location used in error messages.
    :return:
    """
    field = first.field
    field.check_same(second.field)
    D1, D2 = derived_algebra(first.G), derived_algebra(second.G)
    eta = decode_matrix(field, _require(data, "eta", context), second.Q.dim, first.Q.dim, f"{context}.eta")
    xi = decode_matrix(field, _require(data, "xi", context), D2.dim, D1.dim, f"{context}.xi")
    bases: Optional[Dict] = data.get("bases")
    if bases is not None:
        for key, derived in (("first", D1), ("second", D2)):
            where = f"{context}.bases.{key}"
            basis = decode_matrix(field, _require(bases, key, f"{context}.bases"), derived.dim, derived.ambient.dim, where)
            if basis != derived.basis:
                raise ParseError("basis differs from the canonical basis of the derived algebra", where)
    return IsoclinismCertificate(AwbMorphism(first.Q, second.Q, eta), xi)
