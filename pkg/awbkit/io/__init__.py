"""I/O module."""

from typing import Sequence, Union

from pathlib import Path


def check_input(path: Union[str, Path], suffixes: Sequence[str]) -> Path:
    """
    Checks that an input file has one of the expected extensions and exists.

    :param path: Path to the file.
    :param suffixes: Accepted extensions, dot included.
    :return: The path.
    """
    path = Path(path)
    if path.suffix not in suffixes:
        raise NameError(f"Incorrect file extension, expected {'/'.join(suffixes)}: {path}")
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    return path


def check_output(path: Union[str, Path], suffixes: Sequence[str], overwrite: bool = False) -> Path:
    """
    Checks that an output file has one of the expected extensions and may be written.

    An existing file is removed when ``overwrite`` is set, and the parent directories
    are created.

    :param path: Path to the file.
    :param suffixes: Accepted extensions, dot included.
    :param overwrite: Whether to overwrite, in case of an existing file.
    :return: The path.
    """
    path = Path(path)
    if path.suffix not in suffixes:
        raise NameError(f"Incorrect file extension, expected {'/'.join(suffixes)}: {path}")
    if path.exists():
        if not overwrite:
            raise FileExistsError(f"File already exists: {path}")
        path.unlink()
    path.parent.mkdir(parents=True, exist_ok=True)
    return path
