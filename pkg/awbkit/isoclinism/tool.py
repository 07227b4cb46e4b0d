"""isoclinism tool."""

from typing import Dict, Optional, Sequence, Tuple, Union

from pathlib import Path

from awbkit.algebra.awb import check
from awbkit.errors import UnsupportedField
from awbkit.extension.central import CentralExtension, center_extension
from awbkit.io.awb import (
    decode_awb,
    decode_certificate,
    decode_extension,
    encode_certificate,
    read_document,
    write_document,
)
from awbkit.isoclinism.certificate import verify_certificate
from awbkit.isoclinism.decision import (
    decide_extension_isoclinism,
    fingerprint,
    fingerprint_mismatch,
    refutation,
)
from awbkit.tool import Tool

ISOCLINIC = "isoclinic"
NOT_ISOCLINIC = "not_isoclinic"
UNDECIDED = "undecided"


class IsoclinismTool(Tool):
    """
    Tool for deciding and verifying isoclinism of algebras or central extensions.
    """

    def load_pair(
        self,
        paths: Sequence[Union[str, Path]],
        extensions: bool,
    ) -> Tuple[CentralExtension, CentralExtension, Optional[str]]:
        """
        Reads two algebras or two extensions.

        Algebras are compared through their extensions by the center, whose
        fingerprints must agree first.

        :param paths: The two input files.
        :param extensions: Whether the files hold extensions rather than algebras.
        :return: Both extensions and a refuting reason, if any.
        """
        documents = [read_document(path) for path in paths]
        if extensions:
            first, second = (
                decode_extension(document, context=str(path))
                for document, path in zip(documents, paths)
            )
            first.field.check_same(second.field)
            return first, second, refutation(first, second)
        G, H = (
            check(decode_awb(document, context=str(path)))
            for document, path in zip(documents, paths)
        )
        G.field.check_same(H.field)
        mismatch = fingerprint_mismatch(fingerprint(G), fingerprint(H))
        first, second = center_extension(G), center_extension(H)
        return first, second, mismatch or refutation(first, second)

    def isoclinic(
        self,
        paths: Sequence[Union[str, Path]],
        extensions: bool = False,
        certificate_path: Optional[Union[str, Path]] = None,
    ) -> Dict:
        """
        Decides isoclinism, emitting a certificate when there is one.

        :param paths: The two input files.
        :param extensions: Whether the files hold extensions rather than algebras.
        :param certificate_path: Path to the output certificate file.
        :return: The verdict with its reason or certificate.
        """
        self.echo(first=paths[0], second=paths[1], max_dim=self.max_dim, certificate=certificate_path)
        first, second, reason = self.load_pair(paths, extensions)
        if reason is not None:
            return {"verdict": NOT_ISOCLINIC, "reason": reason}
        try:
            certificate = decide_extension_isoclinism(
                first, second, max_dim=self.max_dim, verbose=self.verbose
            )
        except UnsupportedField as error:
            return {"verdict": UNDECIDED, "reason": str(error)}
        if certificate is None:
            return {
                "verdict": NOT_ISOCLINIC,
                "reason": "no isomorphism of the quotients admits a compatible xi",
            }
        document = encode_certificate(certificate, first, second)
        if certificate_path is not None:
            write_document(document, certificate_path, overwrite=self.overwrite, verbose=self.verbose)
        return {"verdict": ISOCLINIC, "certificate": document}

    def verify(
        self,
        paths: Sequence[Union[str, Path]],
        certificate_path: Union[str, Path],
        extensions: bool = False,
    ) -> Dict:
        """
        Checks a certificate against two algebras or two extensions.

        :param paths: The two input files.
        :param certificate_path: Path to the certificate file.
        :param extensions: Whether the files hold extensions rather than algebras.
        :return: The verdict with the failed checks.
        """
        self.echo(first=paths[0], second=paths[1], certificate=certificate_path)
        first, second, _ = self.load_pair(paths, extensions)
        certificate = decode_certificate(
            read_document(certificate_path), first, second, context=str(certificate_path)
        )
        report = verify_certificate(first, second, certificate)
        assert not (report.accepted and report.theorem_failures), report.theorem_failures
        return {
            "verdict": ISOCLINIC if report.accepted else NOT_ISOCLINIC,
            "reason": report.summary(),
            "failures": [
                {"check": name, "pair": None if pair is None else list(pair)}
                for name, pair in report.failures
            ],
        }
