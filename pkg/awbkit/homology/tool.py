"""homology tool."""

from typing import Dict, List, Sequence, Union

from pathlib import Path

from awbkit.algebra.awb import check
from awbkit.homology.chain import c1_label
from awbkit.homology.homology import h0, h1
from awbkit.homology.theta import theta
from awbkit.io.awb import decode_awb, decode_extension, encode_matrix, read_document
from awbkit.linalg.field import Field
from awbkit.tool import Tool


def format_chain(field: Field, n: int, chain: Sequence, degree: int) -> str:
    """
    Writes a chain as a sum of monomials, such as ``e0⊗e1 - 1/2 e1∘e0``.

    :param field: The ground field.
    :param n: Dimension of the algebra.
    :param chain: Coordinates of the chain.
    :param degree: 0 or 1.
    :return:
    """
    terms = []
    for index, value in enumerate(chain):
        if not value:
            continue
        label = f"e{index}" if degree == 0 else c1_label(n, index)
        text = field.to_str(value)
        coefficient = "" if text == "1" else ("-" if text == "-1" else f"{text} ")
        terms.append(f"{coefficient}{label}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


class HomologyTool(Tool):
    """
    Tool for homology in degrees 0 and 1 and for the connecting map ``θ``.
    """

    def homology(self, path: Union[str, Path], degree: int) -> Dict:
        """
        Dimension and representative cycles of ``H_0`` or ``H_1``.

        :param path: Path to the algebra file.
        :param degree: 0 or 1.
        :return:
        """
        self.echo(algebra=path, degree=degree)
        algebra = check(decode_awb(read_document(path), context=str(path)))
        space = (h0 if degree == 0 else h1)(algebra)
        representatives = space.representatives.entries
        self.echo(dim=space.dim)
        return {
            "degree": degree,
            "dim": space.dim,
            "chain_dim": space.chain_dim,
            "representatives": encode_matrix(space.representatives),
            "cycles": [format_chain(algebra.field, algebra.dim, r, degree) for r in representatives],
        }

    def theta(self, path: Union[str, Path]) -> Dict:
        """
        Matrix of ``θ: H_1(Q) -> N`` with the dimensions of its image and kernel.

        :param path: Path to the extension file.
        :return:
        """
        self.echo(extension=path)
        extension = decode_extension(read_document(path), context=str(path))
        connecting = theta(extension)
        images: List[str] = [
            format_chain(extension.field, extension.G.dim, v, 0) for v in connecting.image().vectors
        ]
        self.echo(rank=connecting.rank)
        return {
            "matrix": encode_matrix(connecting.matrix),
            "h1_dim": connecting.homology.dim,
            "n_dim": extension.n_dim,
            "image_dim": connecting.rank,
            "kernel_dim": connecting.homology.dim - connecting.rank,
            "image": images,
            "bijective": connecting.is_bijective(),
        }
