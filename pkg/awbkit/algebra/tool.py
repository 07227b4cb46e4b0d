"""algebra tool."""

from typing import Dict, List, Tuple, Union

from pathlib import Path

from awbkit.algebra.awb import Awb, check, violations
from awbkit.algebra.ideal import center, derived_algebra
from awbkit.errors import Violation
from awbkit.homology.homology import h0, h1
from awbkit.io.awb import decode_awb, read_document
from awbkit.isoclinism.decision import fingerprint
from awbkit.tool import Tool


class AlgebraTool(Tool):
    """
    Tool for validating algebras with bracket and computing their invariants.
    """

    def load(self, path: Union[str, Path]) -> Awb:
        return decode_awb(read_document(path), context=str(path))

    def validate(self, path: Union[str, Path]) -> Tuple[Awb, List[Violation]]:
        """
        Reads an algebra and lists every violated identity.

        :param path: Path to the algebra file.
        :return: The algebra and its violations, associativity triples first.
        """
        self.echo(algebra=path)
        algebra = self.load(path)
        return algebra, violations(algebra)

    def info(self, path: Union[str, Path]) -> Dict:
        """
        Structural invariants of a valid algebra.

        :param path: Path to the algebra file.
        :return:
        """
        self.echo(algebra=path)
        algebra = check(self.load(path))
        Z = center(algebra)
        D = derived_algebra(algebra)
        result = {
            "name": algebra.name,
            "field": repr(algebra.field),
            "dim": algebra.dim,
            "center": Z.dim,
            "derived": D.dim,
            "h0": h0(algebra).dim,
            "h1": h1(algebra).dim,
            "abelian": algebra.is_abelian(),
            "stem": Z.is_within(D),
            "fingerprint": list(fingerprint(algebra)),
        }
        self.echo(**{key: value for key, value in result.items() if key not in ("name", "field")})
        return result
