"""YAML I/O module, same schemas as the JSON files."""

from typing import Dict, List, Union

import yaml
from pathlib import Path
from tqdm import tqdm

from awbkit.errors import ParseError
from awbkit.io import check_input, check_output

SUFFIXES = (".yaml", ".yml")


class YAMLReader:
    """
    Safe YAML reader. Syntax errors become :class:`ParseError` with the line of the problem.
    """

    @staticmethod
    def read(
        path: Union[str, Path],
        verbose: Union[bool, int] = False,
    ) -> Union[List, Dict]:
        path = check_input(path, SUFFIXES)
        with path.open(mode="r") as file:
            for _ in tqdm(range(1), desc="Reading", disable=not verbose):
                try:
                    data = yaml.safe_load(file)
                except yaml.MarkedYAMLError as error:
                    mark = error.problem_mark
                    context = f"{path}: line {mark.line + 1}" if mark is not None else str(path)
                    raise ParseError(str(error.problem), context) from None
        return data


class YAMLWriter:
    """
    Safe YAML writer.
    """

    @staticmethod
    def write(
        data: Union[List, Dict],
        path: Union[str, Path],
        overwrite: bool = False,
        verbose: Union[bool, int] = False,
    ):
        """
        Writes serializable data into a YAML file, keys sorted.

        :param data: Serializable data.
        :param path: Path to the file.
        :param overwrite: Whether to overwrite, in case of an existing file.
        :param verbose: Verbosity of the method.
        :return:
        """
        path = check_output(path, SUFFIXES, overwrite=overwrite)
        with path.open(mode="w") as file:
            for _ in tqdm(range(1), desc="Writing", disable=not verbose):
                yaml.safe_dump(data, file, sort_keys=True, allow_unicode=True)
