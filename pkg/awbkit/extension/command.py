"""extension command-line interface."""

import argparse
from pathlib import Path

from awbkit.extension.tool import ExtensionTool
from awbkit.io.json import dumps
from awbkit.utils.command import EXIT_FALSE, EXIT_TRUE, Command, add_common_arguments, emit


def _tool(args: argparse.Namespace) -> ExtensionTool:
    return ExtensionTool(
        overwrite=getattr(args, "overwrite", False),
        verbose=args.verbose,
        max_dim=args.max_dim,
        seed=args.seed,
    )


def _add_output(parser: argparse.ArgumentParser, example: str):
    parser.add_argument(
        "--output",
        type=Path,
        default=None,
        help=f"path to the output file, such as ``{example}``, otherwise printed on stdout",
    )


class ExtendCommand(Command):
    """
    Builds the central extension defined by a factor set.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        parser.add_argument(
            "--factorset",
            type=Path,
            required=True,
            help="path to the factor-set file, such as ``/path/to/factor_set.json``",
        )
        _add_output(parser, "/path/to/extension.json")
        add_common_arguments(parser, output=True)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return:
        """
        document = _tool(args).extend(args.factorset, args.output)
        if args.output is None:
            print(dumps(document))
        return EXIT_TRUE


class ExtractCommand(Command):
    """
    Extracts the factor set of a central extension.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        parser.add_argument(
            "extension",
            type=Path,
            help="path to the extension file, such as ``/path/to/e_heis.json``",
        )
        _add_output(parser, "/path/to/factor_set.json")
        add_common_arguments(parser, output=True)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return:
        """
        document = _tool(args).extract(args.extension, args.output)
        if args.output is None:
            print(dumps(document))
        return EXIT_TRUE


class StemifyCommand(Command):
    """
    Quotients out the non-stem part of the kernel of a central extension.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        parser.add_argument(
            "extension",
            type=Path,
            help="path to the extension file, such as ``/path/to/e_heis.json``",
        )
        _add_output(parser, "/path/to/stem.json")
        add_common_arguments(parser, output=True)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return:
        """
        data = _tool(args).stemify(args.extension, args.output)
        lines = [f"removed kernel dim = {data['removed']}"]
        if args.output is None:
            lines.append(dumps(data["extension"]))
        emit(args, data, lines)
        return EXIT_TRUE


class SplitCommand(Command):
    """
    Splits the middle algebra of a central extension into a stem part and an abelian summand.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        parser.add_argument(
            "extension",
            type=Path,
            help="path to the extension file, such as ``/path/to/split_ab3.json``",
        )
        _add_output(parser, "/path/to/stem.json")
        add_common_arguments(parser, output=True)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return:
        """
        data = _tool(args).split(args.extension, args.output)
        lines = [f"abelian summand dim = {data['abelian_dim']}"]
        if args.output is None:
            lines.append(dumps(data["extension"]))
        emit(args, data, lines)
        return EXIT_TRUE


class StemCheckCommand(Command):
    """
    Checks whether the kernel of a central extension lies in the derived algebra.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        parser.add_argument(
            "extension",
            type=Path,
            help="path to the extension file, such as ``/path/to/e_heis.json``",
        )
        add_common_arguments(parser)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return: 0 for a stem extension, 1 otherwise.
        """
        data = _tool(args).stem_check(args.extension)
        lines = [str(data["stem"]).lower()]
        if data["witness"] is not None:
            lines.append(f"kernel vector outside the derived algebra: {data['witness']}")
        emit(args, data, lines)
        return EXIT_TRUE if data["stem"] else EXIT_FALSE


class CoverCheckCommand(Command):
    """
    Checks whether a central extension is a stem cover.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        parser.add_argument(
            "extension",
            type=Path,
            help="path to the extension file, such as ``/path/to/cover_ab1.json``",
        )
        add_common_arguments(parser)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return: 0 for a stem cover, 1 otherwise.
        """
        data = _tool(args).cover_check(args.extension)
        lines = [
            str(data["cover"]).lower(),
            f"stem = {str(data['stem']).lower()}, dim N = {data['n_dim']}, "
            f"dim H1(Q) = {data['h1_dim']}, rank theta = {data['theta_rank']}",
        ]
        emit(args, data, lines)
        return EXIT_TRUE if data["cover"] else EXIT_FALSE
