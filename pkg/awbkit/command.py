"""``awbkit`` command-line interface."""

from typing import List, Optional

import argparse
import sys

import awbkit
from awbkit.algebra.command import InfoCommand, ValidateCommand
from awbkit.catalog.command import CatalogCommand
from awbkit.errors import AwbError, ParseError, ValidationError
from awbkit.extension.command import (
    CoverCheckCommand,
    ExtendCommand,
    ExtractCommand,
    SplitCommand,
    StemCheckCommand,
    StemifyCommand,
)
from awbkit.homology.command import HomologyCommand, ThetaCommand
from awbkit.isoclinism.command import IsoclinicCommand
from awbkit.utils.command import (
    EXIT_FAILURE,
    EXIT_FALSE,
    EXIT_TRUE,
    EXIT_USAGE,
    Command,
    register_command,
    register_main_command,
)


class AwbkitCommand(Command):
    """``awbkit`` command-line interface."""

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        subparsers = parser.add_subparsers(title="available commands")

        register_command(subparsers, "validate", ValidateCommand)
        register_command(subparsers, "info", InfoCommand)
        register_command(subparsers, "homology", HomologyCommand)
        register_command(subparsers, "theta", ThetaCommand)
        register_command(subparsers, "isoclinic", IsoclinicCommand)
        register_command(subparsers, "extend", ExtendCommand)
        register_command(subparsers, "extract", ExtractCommand)
        register_command(subparsers, "stemify", StemifyCommand)
        register_command(subparsers, "split", SplitCommand)
        register_command(subparsers, "cover-check", CoverCheckCommand)
        register_command(subparsers, "stem-check", StemCheckCommand)
        register_command(subparsers, "catalog", CatalogCommand)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return:
        """
        parser.print_help()
        return EXIT_TRUE


def get_parser() -> argparse.ArgumentParser:
    """
    Create a parser for the command-line interface.
    :return:
    """
    return register_main_command(AwbkitCommand, version=awbkit.__version__)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entrypoint of the awbkit command-line interface.

    Exit codes: 0 for true or success, 1 for false or invalid input, 2 for undecided,
    3 for usage, parse and file errors, 4 for any other library error.

    :param argv: The arguments, ``sys.argv[1:]`` by default.
    :return: The exit code.
    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
        code = args.execute(args)
    except SystemExit as stop:
        if stop.code is None:
            return EXIT_TRUE
        return stop.code if isinstance(stop.code, int) else EXIT_USAGE
    except (ParseError, NameError, FileNotFoundError, FileExistsError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as error:
        print(f"invalid input:\n{error}", file=sys.stderr)
        return EXIT_FALSE
    except AwbError as error:
        print(f"error: {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_TRUE if code is None else code


if __name__ == "__main__":
    sys.exit(main())
