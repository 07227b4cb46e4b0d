"""catalog command-line interface."""

import argparse
from pathlib import Path

from awbkit.catalog.tool import CatalogTool
from awbkit.io.json import dumps
from awbkit.linalg.field import Field
from awbkit.utils.command import EXIT_TRUE, Command, add_common_arguments, emit, register_command


def _prime(value: str) -> int:
    try:
        return Field.prime(int(value)).p
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from None


def _add_field(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--prime",
        type=_prime,
        default=None,
        help="characteristic of the ground field, otherwise the rationals",
    )


def _add_output(parser: argparse.ArgumentParser, example: str):
    parser.add_argument(
        "--output",
        type=Path,
        default=None,
        help=f"path to the output file, such as ``{example}``, otherwise printed on stdout",
    )


def _tool(args: argparse.Namespace) -> CatalogTool:
    return CatalogTool(
        prime=getattr(args, "prime", None),
        overwrite=getattr(args, "overwrite", False),
        verbose=args.verbose,
        max_dim=args.max_dim,
        seed=args.seed,
    )


class CatalogCommand(Command):
    """
    Command-line interface for the built-in example algebras and extensions.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        subparsers = parser.add_subparsers(title="available commands")

        register_command(subparsers, "list", ListCommand)
        register_command(subparsers, "export", ExportCommand)
        register_command(subparsers, "table", TableCommand)
        register_command(subparsers, "random", RandomCommand)

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


class ListCommand(Command):
    """
    Lists the names of the catalog algebras and extensions.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        add_common_arguments(parser)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        data = _tool(args).list()
        lines = ["algebras:"] + [f"  {name}" for name in data["algebras"]]
        lines += ["extensions:"] + [f"  {name}" for name in data["extensions"]]
        emit(args, data, lines)
        return EXIT_TRUE


class ExportCommand(Command):
    """
    Writes a catalog algebra or extension as a file.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        parser.add_argument(
            "name",
            type=str,
            help="name of the entry, such as ``heis`` or ``e_heis``",
        )
        _add_field(parser)
        _add_output(parser, "/path/to/heis.json")
        add_common_arguments(parser, output=True)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return:
        """
        document = _tool(args).export(args.name, args.output)
        if args.output is None:
            print(dumps(document))
        return EXIT_TRUE


class TableCommand(Command):
    """
    Recomputes the invariants of every catalog algebra.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        _add_field(parser)
        _add_output(parser, "/path/to/catalog.csv")
        add_common_arguments(parser, output=True)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return:
        """
        df = _tool(args).table(args.output)
        if args.output is None:
            emit(args, {"rows": df.to_dict(orient="records")}, df.to_string(index=False))
        return EXIT_TRUE


class RandomCommand(Command):
    """
    Draws a random algebra with bracket, valid by construction.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        parser.add_argument(
            "--dim",
            type=int,
            required=True,
            help="dimension of the algebra, at most 6",
        )
        _add_field(parser)
        _add_output(parser, "/path/to/random.json")
        add_common_arguments(parser, output=True)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return:
        """
        document = _tool(args).random(args.dim, args.output)
        if args.output is None:
            print(dumps(document))
        return EXIT_TRUE
