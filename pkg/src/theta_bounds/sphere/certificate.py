# Copyright 2026 Open Collector, Inc,
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""Bound-proving polynomials for spherical codes and their exact verification."""

import dataclasses
import json
import logging
import pathlib
import typing

from ..document_path import DocumentPath
from ..exact import Rational, UniPoly, as_rational, format_rational, sturm_nonpositive
from ..orthopoly import jacobi_family
from ..parser import (
    InvalidDocumentError,
    get_as_array,
    get_as_int,
    get_as_rational,
    get_as_str,
    load_document,
    validate_as_object,
)
from ..utils import StrEnum

logger = logging.getLogger(__name__)

SPHERE = "sphere"


class VerificationFailure(StrEnum):
    NEGATIVE_COEFFICIENT = "NegativeCoefficient"
    BOUND_MISMATCH = "BoundMismatch"
    INTERVAL_VIOLATION = "IntervalViolation"
    MALFORMED_CERTIFICATE = "MalformedCertificate"


@dataclasses.dataclass(frozen=True)
class Certificate:
    """F = sum_k f_k P_k with F(t) + 1 <= 0 on [-1, cos_theta].

    ``P_k`` is the Jacobi polynomial of the sphere in R^n normalized to
    P_k(1) = 1, so the claimed bound 1 + F(1) is 1 + sum of ``coeffs``.
    """

    space: str
    n: int
    cos_theta: Rational
    degree: int
    coeffs: typing.Tuple[Rational, ...]
    bound: Rational

    @classmethod
    def from_coefficients(
        cls, n: int, cos_theta: Rational, coeffs: typing.Iterable[Rational]
    ) -> "Certificate":
        cs = [as_rational(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        return cls(
            space=SPHERE,
            n=n,
            cos_theta=as_rational(cos_theta),
            degree=len(cs) - 1,
            coeffs=tuple(cs),
            bound=1 + sum(cs, Rational(0)),
        )

    def polynomial(self) -> UniPoly:
        fam = jacobi_family(self.n)
        return sum(
            (fam.polynomial(k) * f for k, f in enumerate(self.coeffs) if f != 0),
            UniPoly(),
        )


@dataclasses.dataclass(frozen=True)
class Verification:
    valid: bool
    reason: typing.Optional[VerificationFailure] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid


def _malformed(detail: str) -> Verification:
    return Verification(False, VerificationFailure.MALFORMED_CERTIFICATE, detail)


def _check_shape(cert: Certificate) -> typing.Optional[Verification]:
    if cert.space != SPHERE:
        return _malformed(f"unknown space {cert.space!r}")
    if isinstance(cert.n, bool) or not isinstance(cert.n, int) or cert.n < 2:
        return _malformed(f"dimension must be an integer >= 2, got {cert.n!r}")
    if not isinstance(cert.cos_theta, Rational) or not -1 < cert.cos_theta < 1:
        return _malformed(f"cos_theta must be a rational in (-1, 1), got {cert.cos_theta!r}")
    if not cert.coeffs:
        return _malformed("no coefficients")
    if not all(isinstance(f, Rational) for f in cert.coeffs):
        return _malformed("coefficients must be exact rationals")
    if not isinstance(cert.bound, Rational):
        return _malformed("bound must be an exact rational")
    if cert.degree < len(cert.coeffs) - 1:
        return _malformed(
            f"degree {cert.degree} is below the {len(cert.coeffs)} coefficients given"
        )
    return None


def verify_certificate(cert: Certificate) -> Verification:
    """Check nonnegativity, the claimed bound and F + 1 <= 0 on [-1, cos_theta].

    Every check is exact; the interval condition is decided by Sturm
    sequences, not by sampling.
    """
    failure = _check_shape(cert)
    if failure is not None:
        return failure
    for k, f in enumerate(cert.coeffs):
        if f < 0:
            return Verification(
                False,
                VerificationFailure.NEGATIVE_COEFFICIENT,
                f"f_{k} = {format_rational(f)}",
            )
    total = 1 + sum(cert.coeffs, Rational(0))
    if cert.bound != total:
        return Verification(
            False,
            VerificationFailure.BOUND_MISMATCH,
            f"claimed {format_rational(cert.bound)}, coefficients give {format_rational(total)}",
        )
    if not sturm_nonpositive(cert.polynomial() + 1, -1, cert.cos_theta):
        return Verification(
            False,
            VerificationFailure.INTERVAL_VIOLATION,
            f"F + 1 > 0 somewhere in [-1, {format_rational(cert.cos_theta)}]",
        )
    logger.debug("certificate n=%d bound=%s verified", cert.n, cert.bound)
    return Verification(True)


def certificate_to_dict(cert: Certificate) -> typing.Dict[str, typing.Any]:
    return {
        "space": cert.space,
        "n": cert.n,
        "cos_theta": format_rational(cert.cos_theta),
        "degree": cert.degree,
        "coeffs": [format_rational(f) for f in cert.coeffs],
        "bound": format_rational(cert.bound),
    }


def certificate_from_dict(
    v: typing.Any, ctx: DocumentPath = DocumentPath()
) -> Certificate:
    """Read the document form; values are checked for type, not for validity."""
    m = validate_as_object(ctx, v)
    space = get_as_str(ctx, m, "space")
    if space != SPHERE:
        raise InvalidDocumentError(f"unsupported space {space!r}", ctx=ctx / "space")
    coeffs = get_as_array(ctx, m, "coeffs", Rational)
    return Certificate(
        space=space,
        n=get_as_int(ctx, m, "n"),
        cos_theta=get_as_rational(ctx, m, "cos_theta"),
        degree=get_as_int(ctx, m, "degree", len(coeffs) - 1),
        coeffs=tuple(coeffs),
        bound=get_as_rational(ctx, m, "bound"),
    )


def dump_certificate(cert: Certificate, path: pathlib.Path) -> None:
    with path.open("w") as f:
        f.write(json.dumps(certificate_to_dict(cert), sort_keys=True, indent=2))
        f.write("\n")


def load_certificate(path: pathlib.Path) -> Certificate:
    return certificate_from_dict(load_document(path))
