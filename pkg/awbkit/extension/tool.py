"""extension tool."""

from typing import Dict, Optional, Union

from pathlib import Path

from awbkit.extension.central import CentralExtension
from awbkit.extension.factor_set import build_from_factor_set, check_factor_set, extract_factor_set
from awbkit.extension.stem import is_stem, is_stem_cover, split_off_abelian, stem_witness, stemify
from awbkit.homology.homology import h1
from awbkit.homology.theta import theta
from awbkit.io.awb import (
    Document,
    decode_extension,
    decode_factor_set,
    encode_extension,
    encode_factor_set,
    encode_matrix,
    encode_scalar,
    read_document,
    write_document,
)
from awbkit.tool import Tool


class ExtensionTool(Tool):
    """
    Tool for building, transforming and classifying central extensions.
    """

    def load(self, path: Union[str, Path]) -> CentralExtension:
        return decode_extension(read_document(path), context=str(path))

    def _save(self, document: Document, path: Optional[Union[str, Path]]):
        if path is not None:
            write_document(document, path, overwrite=self.overwrite, verbose=self.verbose)

    def extend(
        self,
        factor_set_path: Union[str, Path],
        extension_path: Optional[Union[str, Path]] = None,
    ) -> Document:
        """
        Builds the extension ``N ⊕ Q`` of a factor set.

        :param factor_set_path: Path to the factor-set file.
        :param extension_path: Path to the output extension file.
        :return: The extension document.
        """
        self.echo(factor_set=factor_set_path, extension=extension_path)
        fs = check_factor_set(decode_factor_set(read_document(factor_set_path), context=str(factor_set_path)))
        document = encode_extension(build_from_factor_set(fs, name=f"N+{fs.Q.name or 'Q'}"))
        self._save(document, extension_path)
        return document

    def extract(
        self,
        extension_path: Union[str, Path],
        factor_set_path: Optional[Union[str, Path]] = None,
    ) -> Document:
        """
        Factor set of an extension relative to its canonical section.

        :param extension_path: Path to the extension file.
        :param factor_set_path: Path to the output factor-set file.
        :return: The factor-set document.
        """
        self.echo(extension=extension_path, factor_set=factor_set_path)
        document = encode_factor_set(extract_factor_set(self.load(extension_path)))
        self._save(document, factor_set_path)
        return document

    def stemify(
        self,
        extension_path: Union[str, Path],
        stem_path: Optional[Union[str, Path]] = None,
    ) -> Dict:
        self.echo(extension=extension_path, stem=stem_path)
        extension = self.load(extension_path)
        stem, projection = stemify(extension)
        document = encode_extension(stem)
        self._save(document, stem_path)
        return {
            "extension": document,
            "removed": extension.G.dim - stem.G.dim,
            "projection": encode_matrix(projection.beta.matrix),
        }

    def split(
        self,
        extension_path: Union[str, Path],
        stem_path: Optional[Union[str, Path]] = None,
    ) -> Dict:
        """
        Splits ``G ≅ H ⊕ A`` with ``A`` abelian and ``H`` a stem extension of ``Q``.

        :param extension_path: Path to the extension file.
        :param stem_path: Path to the output file of the ``H`` extension.
        :return:
        """
        self.echo(extension=extension_path, stem=stem_path)
        split = split_off_abelian(self.load(extension_path))
        document = encode_extension(split.stem)
        self._save(document, stem_path)
        return {
            "extension": document,
            "abelian_dim": split.abelian.dim,
            "isomorphism": encode_matrix(split.isomorphism.matrix),
        }

    def stem_check(self, extension_path: Union[str, Path]) -> Dict:
        self.echo(extension=extension_path)
        extension = self.load(extension_path)
        witness = stem_witness(extension)
        stem = is_stem(extension)
        return {
            "stem": stem,
            "witness": None if witness is None else [encode_scalar(extension.field, c) for c in witness],
        }

    def cover_check(self, extension_path: Union[str, Path]) -> Dict:
        """
        Whether an extension is a stem cover, with the dimensions that decide it.

        :param extension_path: Path to the extension file.
        :return:
        """
        self.echo(extension=extension_path)
        extension = self.load(extension_path)
        homology = h1(extension.Q)
        connecting = theta(extension, homology=homology)
        return {
            "cover": is_stem_cover(extension),
            "stem": is_stem(extension),
            "n_dim": extension.n_dim,
            "h1_dim": homology.dim,
            "theta_rank": connecting.rank,
        }
