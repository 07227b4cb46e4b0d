"""JSON I/O module."""

from typing import Dict, List, Union

import json
from pathlib import Path
from tqdm import tqdm

from awbkit.errors import ParseError
from awbkit.io import check_input, check_output

SUFFIXES = (".json",)


def dumps(data: Union[List, Dict]) -> str:
    """
    Canonical serialization: sorted keys, two-space indentation.

    :param data: Serializable data.
    :return:
    """
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def loads(text: str, source: str = "<string>") -> Union[List, Dict]:
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(error.msg, f"{source}: line {error.lineno}, column {error.colno}") from None


class JSONReader:
    """
    Safe JSON reader.
    """

    @staticmethod
    def read(
        path: Union[str, Path],
        verbose: Union[bool, int] = False,
    ) -> Union[List, Dict]:
        """
        Reads and parses a JSON file.

        :param path: Path to the file.
        :param verbose: Verbosity of the method.
        :return: Deserialized data.
        """
        path = check_input(path, SUFFIXES)
        for _ in tqdm(range(1), desc="Reading", disable=not verbose):
            data = loads(path.read_text(), source=str(path))
        return data


class JSONWriter:
    """
    Safe JSON writer, producing the canonical text of :func:`dumps`.
    """

    @staticmethod
    def write(
        data: Union[List, Dict],
        path: Union[str, Path],
        overwrite: bool = False,
        verbose: Union[bool, int] = False,
    ):
        path = check_output(path, SUFFIXES, overwrite=overwrite)
        for _ in tqdm(range(1), desc="Writing", disable=not verbose):
            path.write_text(dumps(data) + "\n")
