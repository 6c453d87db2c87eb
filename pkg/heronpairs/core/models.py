"""Wire payloads. Every rational is a canonical "p/q" string, never a float."""

from __future__ import annotations

from typing import Annotated

from pydantic import AfterValidator, BaseModel, Field

from heronpairs.core.rationals import format_rational, parse_rational
from heronpairs.exact_geometry import HeronCertificate, Triangle
from heronpairs.families import PairKind, TrianglePair, VerificationReport


def _canonical(text: str) -> str:
    return format_rational(parse_rational(text))


RationalStr = Annotated[str, AfterValidator(_canonical)]


class TriangleModel(BaseModel):
    a: RationalStr
    b: RationalStr
    c: RationalStr

    @classmethod
    def from_triangle(cls, tri: Triangle) -> TriangleModel:
        return cls(**tri.to_dict())

    def to_triangle(self) -> Triangle:
        return Triangle(parse_rational(self.a), parse_rational(self.b), parse_rational(self.c))


class CertificateModel(TriangleModel):
    """The triangle's sides with area, circumradius, inradius and perimeter alongside."""

    area: RationalStr
    circumradius: RationalStr
    inradius: RationalStr
    perimeter: RationalStr

    @classmethod
    def from_certificate(cls, cert: HeronCertificate) -> CertificateModel:
        return cls(**cert.to_dict())

    def to_certificate(self) -> HeronCertificate:
        """Stored values are kept as-is so that verification can catch tampering."""
        return HeronCertificate(
            triangle=self.to_triangle(),
            area=parse_rational(self.area),
            circumradius=parse_rational(self.circumradius),
            inradius=parse_rational(self.inradius),
            perimeter=parse_rational(self.perimeter),
        )


class TrianglePairModel(BaseModel):
    kind: PairKind
    first: CertificateModel
    second: CertificateModel
    shared_circumradius: RationalStr
    shared_other: RationalStr
    scale_first: RationalStr = "1"
    scale_second: RationalStr = "1"

    @classmethod
    def from_pair(cls, pair: TrianglePair) -> TrianglePairModel:
        return cls(
            kind=pair.kind,
            first=CertificateModel.from_certificate(pair.first),
            second=CertificateModel.from_certificate(pair.second),
            shared_circumradius=format_rational(pair.shared_circumradius),
            shared_other=format_rational(pair.shared_other),
            scale_first=format_rational(pair.scale_first),
            scale_second=format_rational(pair.scale_second),
        )

    def to_pair(self) -> TrianglePair:
        return TrianglePair(
            first=self.first.to_certificate(),
            second=self.second.to_certificate(),
            kind=self.kind,
            shared_circumradius=parse_rational(self.shared_circumradius),
            shared_other=parse_rational(self.shared_other),
            scale_first=parse_rational(self.scale_first),
            scale_second=parse_rational(self.scale_second),
        )


class PairRecordModel(BaseModel):
    """One search hit: the pair plus its (R, other) key."""

    pair: TrianglePairModel
    key: tuple[RationalStr, RationalStr]


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerificationReportModel(BaseModel):
    kind: PairKind
    ok: bool
    checks: list[CheckModel] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: VerificationReport) -> VerificationReportModel:
        return cls(
            kind=report.kind,
            ok=report.ok,
            checks=[CheckModel(name=c.name, passed=c.passed, detail=c.detail) for c in report.checks],
        )
