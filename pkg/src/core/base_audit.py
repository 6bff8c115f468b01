"""
Abstract base class for closed-form splitting audits.

An audit takes a named model, evaluates published closed-form ranks
n_0, n_1, p_0, p_1, ... for the circle picked out by a matrix entry (i, j),
and compares them with the splitting computed from alpha-strings.
Discrepancies are recorded as data, never raised.
"""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from .parabolic import Parabolic
from .root_system import Root
from .splitting import tangent_splitting
from .splitting_type import SplittingType

logger = logging.getLogger(__name__)


class AuditStatus(str, Enum):
    """Outcome of comparing a closed-form value with the computed one."""
    EQUAL = "equal"
    OFF_BY_ONE = "off_by_one"
    MISMATCH = "mismatch"
    RECORDED = "recorded"  # no computed counterpart


def classify(paper_value: int, computed_value: Optional[int]) -> AuditStatus:
    if computed_value is None:
        return AuditStatus.RECORDED
    if paper_value == computed_value:
        return AuditStatus.EQUAL
    if abs(paper_value - computed_value) == 1:
        return AuditStatus.OFF_BY_ONE
    return AuditStatus.MISMATCH


class AuditResult(BaseModel):
    """One closed-form value next to its computed counterpart."""
    formula: str = Field(..., description="Short id, e.g. 'n_1'")
    expression: str = Field(..., description="The closed form as published")
    indices: Dict[str, int] = Field(default_factory=dict)
    alpha: Optional[List[int]] = None
    paper_value: int
    computed_value: Optional[int] = None
    match: AuditStatus
    note: str = ""


class BaseAudit(ABC):
    """
    Abstract base class for audits of one model family.

    Subclasses parse their parameters, build the parabolic, enumerate the
    (i, j) index pairs and evaluate the closed forms for one pair.

    Class Attributes:
        MODEL: Model name the audit is registered under
        SECTION: Title of the audited discussion, used in text output

    Example:
        class MyAudit(BaseAudit):
            MODEL = "my_model"

            def build_parabolic(self) -> Parabolic:
                ...

            def audit_indices(self, i, j, alpha, tangent) -> List[AuditResult]:
                ...
    """

    MODEL: str = None
    SECTION: str = ""

    def __init__(self, parameters: Sequence[int], model: Optional[str] = None):
        """
        Initialize the audit.

        Args:
            parameters: Integer parameters of the named model
            model: Name the model was given as (aliases such as 'grassmannian')

        Raises:
            ModelSpecError: if the parameters are malformed
        """
        self.model = model or self.MODEL
        self.parameters = tuple(parameters)
        self.parse_parameters(self.parameters)

    # === Abstract methods ===

    @abstractmethod
    def parse_parameters(self, parameters: Tuple[int, ...]) -> None:
        """Validate and store the model parameters."""

    @abstractmethod
    def build_parabolic(self) -> Parabolic:
        """The parabolic whose circles are audited."""

    @abstractmethod
    def index_pairs(self) -> List[Tuple[int, int]]:
        """Every (i, j) the audit runs over when none is given."""

    @abstractmethod
    def alpha_for(self, i: int, j: int) -> Root:
        """
        The omitted root of the circle at (i, j).

        Raises:
            AuditIndexError: if (i, j) is out of range
        """

    @abstractmethod
    def audit_indices(self, i: int, j: int, alpha: Root, tangent: SplittingType) -> List[AuditResult]:
        """Evaluate every closed form for one index pair."""

    # === Hooks ===

    def post_audit_hook(self, pairs: List[Tuple[int, int]], results: List[AuditResult]) -> List[AuditResult]:
        """Extra records computed across all index pairs."""
        return []

    # === Common functionality ===

    @cached_property
    def parabolic(self) -> Parabolic:
        return self.build_parabolic()

    def record(
        self,
        formula: str,
        expression: str,
        paper_value: int,
        computed_value: Optional[int],
        indices: Optional[Dict[str, int]] = None,
        alpha: Optional[Root] = None,
        note: str = "",
    ) -> AuditResult:
        """Build an AuditResult with its match status filled in."""
        result = AuditResult(
            formula=formula,
            expression=expression,
            indices=indices or {},
            alpha=list(alpha.coefficients) if alpha is not None else None,
            paper_value=paper_value,
            computed_value=computed_value,
            match=classify(paper_value, computed_value),
            note=note,
        )
        if result.match not in (AuditStatus.EQUAL, AuditStatus.RECORDED):
            logger.debug(f"{self.model} {formula} {result.indices}: {paper_value} vs {computed_value}")
        return result

    def run(self, indices: Optional[Tuple[int, int]] = None) -> List[AuditResult]:
        """
        Run the audit.

        Args:
            indices: A single (i, j); None runs every index pair

        Returns:
            AuditResult records in index-pair order
        """
        pairs = [tuple(indices)] if indices is not None else self.index_pairs()
        results: List[AuditResult] = []
        for i, j in pairs:
            alpha = self.alpha_for(i, j)
            tangent = tangent_splitting(self.parabolic, alpha)
            results.extend(self.audit_indices(i, j, alpha, tangent))
        if indices is None:
            results.extend(self.post_audit_hook(pairs, results))
        logger.info(f"Audit {self.model} {self.parameters}: {len(results)} records")
        return results
