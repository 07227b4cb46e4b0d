"""CSV output of invariant tables."""

from typing import Union
from pathlib import Path

import pandas as pd

from awbkit.io import check_output


class CsvWriter:
    """
    Safe CSV file writer.
    """

    @staticmethod
    def write(
        df: pd.DataFrame,
        path: Union[str, Path],
        overwrite: bool = False,
    ):
        """
        Writes a table into a CSV file, without the index.

        :param df: The table.
        :param path: Path to the file.
        :param overwrite: Whether to overwrite, in case of an existing file.
        :return:
        """
        path = check_output(path, (".csv",), overwrite=overwrite)
        df.to_csv(path, index=False)
