"""command utilities."""

from typing import Dict, Iterable, Optional, Type, Union

import argparse
import sys

from awbkit.io.json import dumps

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 3
EXIT_FAILURE = 4


class Command:
    """
    Base class for defining commands.

    Command instances must implement the ``setup()`` method, and they should
    implement the ``execute()`` method if they perform any functionality beyond
    defining subparsers. ``execute()`` returns the exit code.
    """

    @staticmethod
    def setup(parser: argparse.ArgumentParser):
        """
        Sets up the command.

        :param parser: The argument parser.
        :return:
        """
        raise NotImplementedError("subclass must implement setup()")

    @staticmethod
    def execute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
        """
        Executes the command.

        :param parser: The argument parser.
        :param args: The arguments.
        :return: The exit code.
        """
        raise NotImplementedError("subclass must implement execute()")


class ArgumentParser(argparse.ArgumentParser):
    """
    Argument parser exiting with the usage error code instead of 2, which is
    reserved for undecided answers.
    """

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def has_subparsers(parser: argparse.ArgumentParser) -> bool:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return True

    return False


def iter_subparsers(parser: argparse.ArgumentParser):
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for subparser in action.choices.values():
                yield subparser


class RecursiveHelpAction(argparse._HelpAction):
    def __call__(self, parser: argparse.ArgumentParser, *args, **kwargs):
        self._recurse(parser)
        parser.exit()

    @staticmethod
    def _recurse(parser: argparse.ArgumentParser):
        print("", "*" * 79, parser.format_help(), sep="\n")
        for subparser in iter_subparsers(parser):
            RecursiveHelpAction._recurse(subparser)


def add_common_arguments(parser: argparse.ArgumentParser, output: bool = False):
    """
    Adds the flags shared by every computing command.

    :param parser: The argument parser.
    :param output: Whether the command writes files.
    :return:
    """
    parser.add_argument(
        "--json",
        action="store_true",
        help="print a machine-readable report on stdout",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed of the random generators",
    )
    parser.add_argument(
        "--max-dim",
        type=int,
        default=5,
        help="largest quotient dimension for exhaustive isomorphism searches",
    )
    parser.add_argument(
        "--verbose",
        default=False,
        action=argparse.BooleanOptionalAction,
        help="verbosity of the script",
    )
    if output:
        parser.add_argument(
            "--overwrite",
            default=False,
            action=argparse.BooleanOptionalAction,
            help="overwrite existing files, otherwise raises an error",
        )


def emit(args: argparse.Namespace, data: Dict, lines: Union[str, Iterable[str]]):
    """
    Prints a report, as canonical JSON when ``--json`` was given.

    :param args: The arguments.
    :param data: The machine-readable report.
    :param lines: The human-readable report.
    :return:
    """
    if getattr(args, "json", False):
        print(dumps(data))
        return
    if isinstance(lines, str):
        lines = [lines]
    for line in lines:
        print(line)


def register_command(
    parent,
    name: str,
    command: Type[Command],
    recursive_help: bool = True,
) -> argparse.ArgumentParser:
    """
    Registers a command to a parent subparser and returns the newly created parser.

    :param parent: The subparsers action of the parent parser.
    :param name: The command name.
    :param command: The command class.
    :param recursive_help: Whether to add ``--all-help`` to commands with subcommands.
    :return:
    """
    parser = parent.add_parser(
        name,
        help=command.__doc__.strip().splitlines()[0],
        description=command.__doc__.rstrip(),
        formatter_class=argparse.RawTextHelpFormatter,
    )

    parser.set_defaults(execute=lambda args: command.execute(parser, args))
    command.setup(parser)

    if recursive_help and has_subparsers(parser):
        parser.add_argument(
            "--all-help",
            action=RecursiveHelpAction,
            help="show help recursively and exit",
        )

    return parser


def register_main_command(
    command: Type[Command],
    version: Optional[str] = None,
    recursive_help: bool = True,
) -> argparse.ArgumentParser:
    """
    Registers the main command entrypoint and returns the parser.

    :param command: The command class.
    :param version: The version string.
    :param recursive_help: Whether to add ``--all-help``.
    :return:
    """
    parser = ArgumentParser(description=command.__doc__.rstrip())

    parser.set_defaults(execute=lambda args: command.execute(parser, args))
    command.setup(parser)

    if version:
        parser.add_argument(
            "-v",
            "--version",
            action="version",
            version=version,
            help="show version info",
        )

    if recursive_help and has_subparsers(parser):
        parser.add_argument(
            "--all-help",
            action=RecursiveHelpAction,
            help="show help recursively and exit",
        )

    return parser
