"""
Report documents for circle splittings and formula audits.

These pydantic models are the JSON surface of the CLI: every JSON report
is produced by dumping one of them and validates against the schema they
generate (see `circles.py schema`). Degrees are serialized as strings of
signed integers in descending order.
"""

from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, Field, field_validator, model_validator

from .base_audit import AuditResult, AuditStatus, BaseAudit
from .parabolic import Parabolic
from .splitting import CurvatureReport, FlatnessReport
from .splitting_type import SplittingType
from .strings import AlphaString, NodeTag


class NodeRecord(BaseModel):
    """One node of an alpha-string."""
    root: List[int] = Field(..., description="Simple-root coefficients (all zero for the zero node)")
    weight: int = Field(..., description="<node, alpha^vee>")
    tag: NodeTag


class StringRecord(BaseModel):
    """An alpha-string with its g/p- and p-piece lengths."""
    nodes: List[NodeRecord]
    n_s: int = Field(..., ge=0, description="Length of the g/p-piece")
    d_s: int = Field(..., ge=0, description="Length of the p-piece")


def _check_degree_map(v: Dict[str, int]) -> Dict[str, int]:
    degrees = []
    for key, mult in v.items():
        try:
            degrees.append(int(key))
        except ValueError:
            raise ValueError(f"Degree key '{key}' is not a signed integer")
        if mult < 1:
            raise ValueError(f"Multiplicity {mult} of O({key}) must be positive")
    if degrees != sorted(degrees, reverse=True):
        raise ValueError(f"Degrees {degrees} are not in descending order")
    return v


class AlphaEntry(BaseModel):
    """Tangent and curvature splitting along one circle."""
    alpha: List[int]
    strings: List[StringRecord]
    tangent: Dict[str, int]
    curvature: Dict[str, int]
    h0: int = Field(..., ge=0, description="dim H^0 of the curvature bundle on the circle")
    alpha_slot_max_degree: Optional[int] = Field(
        default=None,
        description="Largest degree of a curvature summand using the circle's own direction; null if dim g/p = 1",
    )
    contraction_vanishes: bool

    @field_validator('tangent', 'curvature')
    @classmethod
    def validate_degrees(cls, v: Dict[str, int]) -> Dict[str, int]:
        return _check_degree_map(v)

    @model_validator(mode='after')
    def validate_contraction(self) -> 'AlphaEntry':
        expected = self.alpha_slot_max_degree is None or self.alpha_slot_max_degree < 0
        if self.contraction_vanishes != expected:
            raise ValueError(
                f"contraction_vanishes={self.contraction_vanishes} disagrees with "
                f"alpha_slot_max_degree={self.alpha_slot_max_degree}"
            )
        return self


class ReportDocument(BaseModel):
    """Top-level report of the `report` and `flatness` commands."""
    model: str = Field(..., min_length=1, description="Model spec, e.g. 'projective:2' or 'D4/4'")
    lie_type: str
    crossed: List[int]
    dim_g: int = Field(..., ge=3)
    dim_gp: int = Field(..., ge=0)
    alphas: List[AlphaEntry]
    verdict: bool
    notes: List[str] = Field(default_factory=list)
    conclusion: str = ""


class AuditDocument(BaseModel):
    """Top-level output of the `audit` command."""
    model: str
    audit: str
    section: str
    lie_type: str
    crossed: List[int]
    results: List[AuditResult]
    summary: Dict[str, int] = Field(default_factory=dict, description="Record count per match status")


# === Converters ===

def string_record(string: AlphaString) -> StringRecord:
    return StringRecord(
        nodes=[
            NodeRecord(root=list(node.root.coefficients), weight=node.weight, tag=node.tag)
            for node in string.nodes
        ],
        n_s=string.n_s,
        d_s=string.d_s,
    )


def alpha_entry(report: CurvatureReport) -> AlphaEntry:
    return AlphaEntry(
        alpha=list(report.alpha.coefficients),
        strings=[string_record(s) for s in report.strings],
        tangent=report.tangent.to_json_dict(),
        curvature=report.curvature.to_json_dict(),
        h0=report.h0,
        alpha_slot_max_degree=report.alpha_slot_max_degree,
        contraction_vanishes=report.contraction_vanishes,
    )


def report_document(
    model: str,
    parabolic: Parabolic,
    reports: Sequence[CurvatureReport],
    verdict: bool,
    conclusion: str = "",
) -> ReportDocument:
    rs = parabolic.root_system
    return ReportDocument(
        model=model,
        lie_type=str(rs.lie_type),
        crossed=list(parabolic.crossed),
        dim_g=rs.dimension,
        dim_gp=parabolic.dim_gp,
        alphas=[alpha_entry(r) for r in reports],
        verdict=verdict,
        notes=list(rs.notes),
        conclusion=conclusion,
    )


def flatness_document(model: str, flatness: FlatnessReport) -> ReportDocument:
    return report_document(
        model, flatness.parabolic, flatness.reports, flatness.verdict, flatness.conclusion
    )


def audit_document(model: str, audit: BaseAudit, results: Sequence[AuditResult]) -> AuditDocument:
    parabolic = audit.parabolic
    summary = {status.value: 0 for status in AuditStatus}
    for result in results:
        summary[result.match.value] += 1
    return AuditDocument(
        model=model,
        audit=audit.MODEL,
        section=audit.SECTION,
        lie_type=str(parabolic.lie_type),
        crossed=list(parabolic.crossed),
        results=list(results),
        summary=summary,
    )


def splitting_from_json(data: Dict[str, int]) -> SplittingType:
    """Inverse of SplittingType.to_json_dict."""
    return SplittingType(summands={int(d): m for d, m in data.items()})
