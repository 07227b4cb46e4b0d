import json

import pytest

from awbkit.catalog.registry import extension_names, get, get_extension, names
from awbkit.errors import NotCentral, ParseError
from awbkit.extension.factor_set import extract_factor_set
from awbkit.io.awb import (
    decode_awb,
    decode_certificate,
    decode_extension,
    decode_factor_set,
    encode_awb,
    encode_certificate,
    encode_extension,
    encode_factor_set,
    read_document,
    write_document,
)
from awbkit.io.json import JSONReader, JSONWriter, dumps, loads
from awbkit.isoclinism.decision import decide_extension_isoclinism


@pytest.mark.parametrize("name", names())
def test_algebra_documents(name, field, tmp_path):
    algebra = get(name, field)
    document = encode_awb(algebra)
    assert decode_awb(document) == algebra

    path = tmp_path / "algebra.json"
    write_document(document, path)
    assert read_document(path) == document
    assert path.read_text() == dumps(document) + "\n"


def test_canonical_document(rational):
    document = encode_awb(get("heis", rational))
    assert document == {
        "name": "heis",
        "field": {"kind": "rational"},
        "dim": 3,
        "product": [],
        "bracket": [[0, 1, 2, "1"], [1, 0, 2, "-1"]],
    }
    assert list(json.loads(dumps(document))) == sorted(document)


def test_prime_scalars_are_residues(gf3):
    document = encode_awb(get("heis", gf3))
    assert document["bracket"] == [[0, 1, 2, 1], [1, 0, 2, 2]]
    assert document["field"] == {"kind": "prime", "p": 3}


@pytest.mark.parametrize("name", extension_names())
def test_extension_documents(name, gf2):
    E = get_extension(name, gf2)
    decoded = decode_extension(encode_extension(E))
    assert decoded.G == E.G
    assert decoded.kernel == E.kernel
    assert decoded.name == name


def test_factor_set_documents(field):
    fs = extract_factor_set(get_extension("cover_ab1_alt", field))
    assert decode_factor_set(encode_factor_set(fs)) == fs


def test_yaml_documents(tmp_path, rational):
    document = encode_extension(get_extension("e_heis", rational))
    path = tmp_path / "e_heis.yaml"
    write_document(document, path)
    assert read_document(path) == document
    assert decode_extension(read_document(path)).G == get("heis", rational)


def test_certificate_documents(gf2):
    first = get_extension("e_heis", gf2)
    second = get_extension("e_heis_x_ab1", gf2)
    certificate = decide_extension_isoclinism(first, second)
    document = encode_certificate(certificate, first, second)
    decoded = decode_certificate(document, first, second)
    assert decoded.eta == certificate.eta
    assert decoded.xi == certificate.xi

    del document["bases"]
    assert decode_certificate(document, first, second).xi == certificate.xi


def test_certificate_with_other_bases(gf2):
    first = get_extension("e_heis", gf2)
    second = get_extension("e_heis_x_ab1", gf2)
    document = encode_certificate(decide_extension_isoclinism(first, second), first, second)
    document["bases"]["second"] = [[0, 0, 1, 1]]
    with pytest.raises(ParseError) as info:
        decode_certificate(document, first, second)
    assert info.value.context == "certificate.bases.second"


@pytest.mark.parametrize(
    "document, context",
    [
        ({"dim": 2}, "algebra"),
        ({"field": {"kind": "rational"}, "dim": -1}, "algebra.dim"),
        ({"field": {"kind": "prime", "p": 4}, "dim": 1}, "algebra.field"),
        ({"field": {"kind": "rational"}, "dim": 2, "product": [[0, 0, 5, 1]]}, "algebra.product[0]"),
        ({"field": {"kind": "rational"}, "dim": 2, "bracket": [[0, 1, 0, "one"]]}, "algebra.bracket[0]"),
        ({"field": {"kind": "rational"}, "dim": 2, "bracket": [[0, 1, 0, 1], [0, 1]]}, "algebra.bracket[1]"),
        ({"field": {"kind": "rational"}, "dim": 2, "product": [[0, 0, 0, 1.5]]}, "algebra.product[0]"),
    ],
)
def test_parse_errors(document, context):
    with pytest.raises(ParseError) as info:
        decode_awb(document)
    assert info.value.context == context


def test_parse_error_lines():
    with pytest.raises(ParseError) as info:
        loads('{\n  "dim": ,\n}', source="broken.json")
    assert info.value.context.startswith("broken.json: line 2")


def test_extension_must_be_central(rational):
    document = {"algebra": encode_awb(get("taut_u2", rational)), "kernel": [["0", "1", "0"]]}
    with pytest.raises(NotCentral):
        decode_extension(document)
    with pytest.raises(ParseError) as info:
        decode_extension({"algebra": encode_awb(get("taut_u2", rational)), "kernel": [["0", "1"]]})
    assert info.value.context == "extension.kernel[0]"


def test_file_errors(tmp_path):
    with pytest.raises(NameError):
        JSONReader.read(tmp_path / "algebra.txt")
    with pytest.raises(FileNotFoundError):
        JSONReader.read(tmp_path / "missing.json")

    path = tmp_path / "algebra.json"
    JSONWriter.write({"dim": 0}, path)
    with pytest.raises(FileExistsError):
        JSONWriter.write({"dim": 1}, path)
    JSONWriter.write({"dim": 1}, path, overwrite=True)
    assert JSONReader.read(path) == {"dim": 1}

    path.write_text("[1, 2]")
    with pytest.raises(ParseError):
        read_document(path)
    with pytest.raises(NameError):
        write_document({}, tmp_path / "algebra.txt")
