"""``awbkit`` base tool."""

from typing import Optional, Union

import sys

from awbkit.isoclinism.decision import DEFAULT_MAX_DIM


class Tool:
    """
    Base class for any tool.

    :param overwrite: Whether to overwrite existing files, otherwise raise an error.
    :param verbose: Whether to execute the computation verbosely.
    :param max_dim: Largest quotient dimension for exhaustive isomorphism searches.
    :param seed: Seed of the random generators.
    """

    def __init__(
        self,
        overwrite: bool = False,
        verbose: Union[bool, int] = True,
        max_dim: int = DEFAULT_MAX_DIM,
        seed: Optional[int] = None,
    ):
        self.overwrite = overwrite
        self.verbose = verbose
        self.max_dim = max_dim
        self.seed = seed

    def echo(self, **values):
        """
        Prints ``name   =   value`` lines on stderr when verbose.

        :param values: The values to print.
        :return:
        """
        if not self.verbose:
            return
        for name, value in values.items():
            print(f"{name:<12}=   {value}", file=sys.stderr)
