"""algebra command-line interface."""

import argparse
from pathlib import Path

from awbkit.algebra.tool import AlgebraTool
from awbkit.utils.command import EXIT_FALSE, EXIT_TRUE, Command, add_common_arguments, emit


class ValidateCommand(Command):
    """
    Checks associativity and the bracket identity of an algebra.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        parser.add_argument(
            "algebra",
            type=Path,
            help="path to the algebra file, such as ``/path/to/heis.json``",
        )
        add_common_arguments(parser)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return: 0 when valid, 1 otherwise.
        """
        tool = AlgebraTool(verbose=args.verbose, max_dim=args.max_dim, seed=args.seed)
        algebra, found = tool.validate(args.algebra)
        data = {
            "name": algebra.name,
            "valid": not found,
            "violations": [
                {"kind": violation.kind, "indices": list(violation.indices)}
                for violation in found
            ],
        }
        emit(args, data, [str(violation) for violation in found] or "OK")
        return EXIT_FALSE if found else EXIT_TRUE


class InfoCommand(Command):
    """
    Prints the dimensions of the center, the derived algebra and the homology.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        parser.add_argument(
            "algebra",
            type=Path,
            help="path to the algebra file, such as ``/path/to/heis.json``",
        )
        add_common_arguments(parser)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return:
        """
        tool = AlgebraTool(verbose=args.verbose, max_dim=args.max_dim, seed=args.seed)
        data = tool.info(args.algebra)
        lines = [f"{key:<12}{value}" for key, value in data.items()]
        emit(args, data, lines)
        return EXIT_TRUE
