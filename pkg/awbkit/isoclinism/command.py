"""isoclinism command-line interface."""

import argparse
from pathlib import Path

from awbkit.io.json import dumps
from awbkit.isoclinism.tool import ISOCLINIC, UNDECIDED, IsoclinismTool
from awbkit.utils.command import (
    EXIT_FALSE,
    EXIT_TRUE,
    EXIT_UNDECIDED,
    Command,
    add_common_arguments,
    emit,
)


class IsoclinicCommand(Command):
    """
    Decides whether two algebras, or two central extensions, are isoclinic.

    Over a prime field, the quotient isomorphisms are searched exhaustively and a
    certificate is printed. Over the rationals, only a refutation by invariants is
    possible, otherwise the answer is undecided (exit code 2).
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        parser.add_argument(
            "algebras",
            type=Path,
            nargs="*",
            help="paths to the two algebra files, such as ``heis.json heis_x_ab1.json``",
        )
        parser.add_argument(
            "--extensions",
            type=Path,
            nargs=2,
            default=None,
            metavar=("E1", "E2"),
            help="paths to two extension files, compared instead of algebras",
        )
        parser.add_argument(
            "--verify",
            type=Path,
            default=None,
            help="path to a certificate file to check, such as ``/path/to/certificate.json``",
        )
        parser.add_argument(
            "--output",
            type=Path,
            default=None,
            help="path to the output certificate file, such as ``/path/to/certificate.json``",
        )
        add_common_arguments(parser, output=True)

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return: 0 when isoclinic, 1 when not, 2 when undecided.
        """
        if args.extensions is not None:
            if args.algebras:
                parser.error("give either two algebras or --extensions, not both")
            paths, extensions = args.extensions, True
        else:
            if len(args.algebras) != 2:
                parser.error("expected two algebra files")
            paths, extensions = args.algebras, False

        tool = IsoclinismTool(
            overwrite=args.overwrite,
            verbose=args.verbose,
            max_dim=args.max_dim,
            seed=args.seed,
        )
        if args.verify is not None:
            data = tool.verify(paths, args.verify, extensions=extensions)
        else:
            data = tool.isoclinic(paths, extensions=extensions, certificate_path=args.output)

        if data["verdict"] == ISOCLINIC:
            if "certificate" in data:
                lines = dumps(data["certificate"])
            else:
                lines = "ISOCLINIC (certificate accepted)"
            emit(args, data, lines)
            return EXIT_TRUE
        if data["verdict"] == UNDECIDED:
            emit(args, data, f"UNDECIDED ({data['reason']})")
            return EXIT_UNDECIDED
        emit(args, data, f"NOT ISOCLINIC ({data['reason']})")
        return EXIT_FALSE
