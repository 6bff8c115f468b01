"""
Audit of the closed-form ranks for the Lagrangian Grassmannian Sp(2n)/P.

Omitted roots are -(e_i + e_j) with i >= j (i = j gives the long roots
-2e_i). The published splitting is O(2) + O(0)^{p_0} + O(1)^{p_1} with

    p_1 = n + i - j - 1
    p_0 = (n^2 + n)/2 - p_1
"""

import logging
from typing import List, Tuple

from src.core.base_audit import AuditResult, BaseAudit
from src.core.errors import AuditIndexError, ModelSpecError
from src.core.models import named_model
from src.core.parabolic import Parabolic
from src.core.registry import register_audit
from src.core.root_system import Root
from src.core.splitting_type import SplittingType

logger = logging.getLogger(__name__)


@register_audit("lagrangian")
class LagrangianAudit(BaseAudit):
    MODEL = "lagrangian"
    SECTION = "Lagrangian-Grassmannian connections"

    def parse_parameters(self, parameters: Tuple[int, ...]) -> None:
        if len(parameters) != 1:
            raise ModelSpecError(f"lagrangian audit takes one parameter n, got {list(parameters)}")
        self.n = parameters[0]

    def build_parabolic(self) -> Parabolic:
        return named_model("lagrangian", (self.n,))

    def index_pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, i + 1)]

    def alpha_for(self, i: int, j: int) -> Root:
        if not 1 <= j <= i <= self.n:
            raise AuditIndexError(f"lagrangian audit needs 1 <= j <= i <= {self.n}, got i={i}, j={j}")
        eps = [0] * self.n
        eps[i - 1] -= 1
        eps[j - 1] -= 1
        return self.parabolic.root_system.root_from_epsilon(eps)

    def audit_indices(self, i: int, j: int, alpha: Root, tangent: SplittingType) -> List[AuditResult]:
        n = self.n
        dim = (n * n + n) // 2
        p_1 = n + i - j - 1
        p_0 = dim - p_1
        indices = {"i": i, "j": j}
        return [
            self.record("O(2)", "1", 1, tangent.multiplicity(2), indices, alpha),
            self.record("p_1", "n + i - j - 1", p_1, tangent.multiplicity(1), indices, alpha),
            self.record("p_0", "(n^2 + n)/2 - p_1", p_0, tangent.multiplicity(0), indices, alpha),
            self.record("rank", "1 + p_0 + p_1", 1 + p_0 + p_1, tangent.rank, indices, alpha,
                        note=f"dim G/P = {dim}"),
        ]
