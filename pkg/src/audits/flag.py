"""
Audit of the closed-form ranks for partial flag varieties of SL(n).

For the entry in row i, column j of the lower-left part of the matrix,
with j in block s and i in block t, the published splitting is

    O(2) + O(0)^{n_0} + O(1)^{n_1}
    n_1 = n + k_{s+1} + ... + k_{t-1} - 1
    n_0 = (n^2 - (k_1^2 + ... + k_p^2)) / 2 - n_1

The last two make 1 + n_0 + n_1 one more than dim G/P, so the rank
identity is reported next to both ranks.
"""

import logging
from typing import List, Tuple

from src.core.base_audit import AuditResult, BaseAudit
from src.core.errors import ModelSpecError
from src.core.models import named_model
from src.core.parabolic import FlagShape, Parabolic
from src.core.registry import register_audit
from src.core.root_system import Root
from src.core.splitting_type import SplittingType

logger = logging.getLogger(__name__)


@register_audit("flag", "grassmannian")
class FlagAudit(BaseAudit):
    """Flag varieties F(k_1, ..., k_p) and Grassmannians Gr(k, n)."""

    MODEL = "flag"
    SECTION = "Flag variety connections"

    def parse_parameters(self, parameters: Tuple[int, ...]) -> None:
        if self.model == "grassmannian":
            if len(parameters) != 2 or not 1 <= parameters[0] < parameters[1]:
                raise ModelSpecError(f"grassmannian audit needs k,n with 1 <= k < n, got {list(parameters)}")
            k, n = parameters
            blocks = (k, n - k)
        else:
            blocks = parameters
        try:
            self.shape = FlagShape(block_sizes=blocks)
        except ValueError as e:
            raise ModelSpecError(f"Bad flag block sizes {list(blocks)}: {e}")

    def build_parabolic(self) -> Parabolic:
        if self.model == "grassmannian":
            return named_model("grassmannian", self.parameters)
        return named_model("flag", self.shape.block_sizes)

    def index_pairs(self) -> List[Tuple[int, int]]:
        """One representative entry per pair of blocks s < t."""
        p = len(self.shape.block_sizes)
        return [
            (self.shape.first_index(t), self.shape.first_index(s))
            for s in range(1, p + 1)
            for t in range(s + 1, p + 1)
        ]

    def alpha_for(self, i: int, j: int) -> Root:
        return self.shape.alpha(i, j, self.parabolic.root_system.rank)

    def audit_indices(self, i: int, j: int, alpha: Root, tangent: SplittingType) -> List[AuditResult]:
        s, t = self.shape.blocks_for(i, j)
        k = self.shape.block_sizes
        n = self.shape.n
        n_1 = n + sum(k[s:t - 1]) - 1
        dim = (n * n - sum(x * x for x in k)) // 2
        n_0 = dim - n_1
        indices = {"i": i, "j": j, "s": s, "t": t}
        return [
            self.record("O(2)", "1", 1, tangent.multiplicity(2), indices, alpha),
            self.record("n_1", "n + k_{s+1} + ... + k_{t-1} - 1", n_1, tangent.multiplicity(1), indices, alpha),
            self.record("n_0", "(n^2 - (k_1^2 + ... + k_p^2))/2 - n_1", n_0, tangent.multiplicity(0), indices, alpha),
            self.record("rank", "1 + n_0 + n_1", 1 + n_0 + n_1, tangent.rank, indices, alpha,
                        note=f"dim G/P = {dim}"),
        ]
