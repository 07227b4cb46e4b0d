"""catalog tool."""

from typing import Dict, List, Optional, Union

from pathlib import Path

import pandas as pd
from tqdm import tqdm

from awbkit.catalog.random import random_awb
from awbkit.catalog.registry import entry, extension_names, get, get_extension, invariants, names
from awbkit.errors import UnknownName
from awbkit.io.awb import Document, encode_awb, encode_extension, write_document
from awbkit.io.csv import CsvWriter
from awbkit.linalg.field import Field
from awbkit.tool import Tool


class CatalogTool(Tool):
    """
    Tool for browsing and exporting the built-in examples.

    :param prime: Characteristic of the ground field, the rationals when ``None``.
    """

    def __init__(self, prime: Optional[int] = None, **kwargs):
        super().__init__(**kwargs)
        self.field = Field.rational() if prime is None else Field.prime(prime)

    def list(self) -> Dict[str, List[str]]:
        return {"algebras": names(), "extensions": extension_names()}

    def export(self, name: str, path: Optional[Union[str, Path]] = None) -> Document:
        """
        Serializes a catalog algebra or extension.

        :param name: The entry name.
        :param path: Path to the output file.
        :return: The document.
        """
        self.echo(name=name, field=self.field, output=path)
        if name in names():
            document = encode_awb(get(name, self.field))
        elif name in extension_names():
            document = encode_extension(get_extension(name, self.field))
        else:
            raise UnknownName(f"unknown catalog entry: {name!r}")
        if path is not None:
            write_document(document, path, overwrite=self.overwrite, verbose=self.verbose)
        return document

    def table(self, path: Optional[Union[str, Path]] = None) -> pd.DataFrame:
        """
        Invariants of every catalog algebra, recomputed.

        :param path: Path to the output CSV file.
        :return:
        """
        self.echo(field=self.field, output=path)
        rows = []
        for name in tqdm(names(), desc="Computing", disable=not self.verbose):
            algebra = get(name, self.field)
            rows.append({"name": name, "dim": algebra.dim, **invariants(algebra), "description": entry(name).description})
        df = pd.DataFrame(rows, columns=["name", "dim", "center", "derived", "h0", "h1", "description"])
        if path is not None:
            CsvWriter.write(df, path, overwrite=self.overwrite)
        return df

    def random(self, dim: int, path: Optional[Union[str, Path]] = None) -> Document:
        """
        Serializes a random algebra drawn with the tool seed.

        :param dim: The dimension.
        :param path: Path to the output file.
        :return: The document.
        """
        self.echo(dim=dim, seed=self.seed, field=self.field, output=path)
        document = encode_awb(random_awb(self.field, dim, seed=self.seed))
        if path is not None:
            write_document(document, path, overwrite=self.overwrite, verbose=self.verbose)
        return document
