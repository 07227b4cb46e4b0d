from pathlib import Path

import pytest

from awbkit.catalog.registry import get, get_extension
from awbkit.catalog.tool import CatalogTool
from awbkit.linalg.field import Field


@pytest.fixture
def rational():
    return Field.rational()


@pytest.fixture
def gf2():
    return Field.prime(2)


@pytest.fixture
def gf3():
    return Field.prime(3)


@pytest.fixture(params=[None, 2, 3], ids=["QQ", "GF2", "GF3"])
def field(request):
    return Field.rational() if request.param is None else Field.prime(request.param)


@pytest.fixture
def heis(rational):
    return get("heis", rational)


@pytest.fixture
def e_heis(rational):
    return get_extension("e_heis", rational)


@pytest.fixture
def export(tmp_path):
    """
    Writes a catalog entry into the temporary directory and returns its path.
    """

    def write(name: str, prime=None, suffix: str = ".json") -> Path:
        stem = name.replace("(", "").replace(")", "")
        if prime is not None:
            stem += f"_p{prime}"
        path = tmp_path / f"{stem}{suffix}"
        if not path.exists():
            CatalogTool(prime=prime, verbose=False).export(name, path)
        return path

    return write
