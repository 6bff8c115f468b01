"""
Audit of the closed-form ranks for the spinor variety SO(2n)/P.

The circle of alpha = -(e_i + e_j), i > j, is published with splitting
O(0)^{p_0} + O(1)^{p_1}, where

    p_0 = (n^2 - 3n + 6)/2 + j - i
    p_1 = n + i - j - 3

The roots e_i + e_j are all conjugate under the Levi factor, so the
computed splitting cannot depend on (i, j); a full run adds a record
comparing the number of distinct p_1 values with the computed ones.
"""

import logging
from typing import List, Tuple

from src.core.base_audit import AuditResult, AuditStatus, BaseAudit
from src.core.errors import AuditIndexError, ModelSpecError
from src.core.models import named_model
from src.core.parabolic import Parabolic
from src.core.registry import register_audit
from src.core.root_system import Root
from src.core.splitting_type import SplittingType

logger = logging.getLogger(__name__)


@register_audit("spinor")
class SpinorAudit(BaseAudit):
    """Spinor variety, D_n with the last node crossed."""

    MODEL = "spinor"
    SECTION = "Spinor variety connections"

    def parse_parameters(self, parameters: Tuple[int, ...]) -> None:
        if len(parameters) != 1:
            raise ModelSpecError(f"spinor audit takes one parameter n, got {list(parameters)}")
        self.n = parameters[0]

    def build_parabolic(self) -> Parabolic:
        return named_model("spinor", (self.n,))

    def index_pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(2, self.n + 1) for j in range(1, i)]

    def alpha_for(self, i: int, j: int) -> Root:
        if not 1 <= j < i <= self.n:
            raise AuditIndexError(f"spinor audit needs 1 <= j < i <= {self.n}, got i={i}, j={j}")
        eps = [0] * self.n
        eps[i - 1] -= 1
        eps[j - 1] -= 1
        return self.parabolic.root_system.root_from_epsilon(eps)

    def audit_indices(self, i: int, j: int, alpha: Root, tangent: SplittingType) -> List[AuditResult]:
        n = self.n
        p_1 = n + i - j - 3
        p_0 = (n * n - 3 * n + 6) // 2 + j - i
        indices = {"i": i, "j": j}
        return [
            self.record("O(2)", "0", 0, tangent.multiplicity(2), indices, alpha,
                        note="published splitting has no O(2) summand"),
            self.record("p_1", "n + i - j - 3", p_1, tangent.multiplicity(1), indices, alpha),
            self.record("p_0", "(n^2 - 3n + 6)/2 + j - i", p_0, tangent.multiplicity(0), indices, alpha),
            self.record("rank", "p_0 + p_1", p_0 + p_1, tangent.rank, indices, alpha,
                        note=f"dim G/P = {n * (n - 1) // 2}"),
        ]

    def post_audit_hook(self, pairs: List[Tuple[int, int]], results: List[AuditResult]) -> List[AuditResult]:
        """Count distinct p_1 values against distinct computed O(1) multiplicities."""
        p_1_rows = [r for r in results if r.formula == "p_1"]
        published = {r.paper_value for r in p_1_rows}
        computed = {r.computed_value for r in p_1_rows}
        result = self.record(
            "p_1 index dependence",
            "distinct values of n + i - j - 3 over all (i, j)",
            len(published),
            len(computed),
            note="computed splitting is the same for every (i, j)" if len(computed) == 1 else "",
        )
        status = AuditStatus.EQUAL if len(published) == len(computed) else AuditStatus.MISMATCH
        return [result.model_copy(update={"match": status})]
