"""homology command-line interface."""

import argparse
from pathlib import Path

from awbkit.homology.tool import HomologyTool
from awbkit.utils.command import EXIT_TRUE, Command, add_common_arguments, emit


class HomologyCommand(Command):
    """
    Computes homology with trivial coefficients in degree 0 or 1.
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
        parser.add_argument(
            "--degree",
            type=int,
            choices=[0, 1],
            default=1,
            help="homological degree",
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
        tool = HomologyTool(verbose=args.verbose, max_dim=args.max_dim, seed=args.seed)
        data = tool.homology(args.algebra, args.degree)
        lines = [f"dim H{args.degree} = {data['dim']}"]
        lines += [f"  [{cycle}]" for cycle in data["cycles"]]
        emit(args, data, lines)
        return EXIT_TRUE


class ThetaCommand(Command):
    """
    Computes the connecting map from H1(Q) to the kernel of a central extension.
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
        :return:
        """
        tool = HomologyTool(verbose=args.verbose, max_dim=args.max_dim, seed=args.seed)
        data = tool.theta(args.extension)
        lines = ["theta ="]
        lines += ["  " + " ".join(str(x) for x in row) for row in data["matrix"]]
        lines += [
            f"image dim  = {data['image_dim']}",
            f"kernel dim = {data['kernel_dim']}",
            f"image      = span{{{', '.join(data['image'])}}}",
        ]
        emit(args, data, lines)
        return EXIT_TRUE
