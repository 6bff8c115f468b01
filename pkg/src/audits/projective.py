"""
Normal bundles of projective lines and of conformal circles.

A line in P^n has normal bundle O(1)^{n-1}. Cartan's conformal circle in
the quadric Q^n has normal bundle O(2)^{n-1}; it is a conic, so it is a
root circle only in the coincidence Q^3 = LG(2), where the short-root
circle of lagrangian:2 reproduces it. For n >= 4 the value is recorded.
"""

import logging
from typing import List, Optional, Tuple

from src.core.base_audit import AuditResult, BaseAudit
from src.core.errors import AuditIndexError, ModelSpecError
from src.core.models import named_model
from src.core.parabolic import FlagShape, Parabolic
from src.core.registry import register_audit
from src.core.root_system import Root
from src.core.splitting import normal_splitting
from src.core.splitting_type import SplittingType

logger = logging.getLogger(__name__)


@register_audit("projective")
class ProjectiveAudit(BaseAudit):
    """Lines in P^n; the circle at (i, 1) is the matrix entry E_{i1} of sl(n+1)."""

    MODEL = "projective"
    SECTION = "Projective connections"

    def parse_parameters(self, parameters: Tuple[int, ...]) -> None:
        if len(parameters) != 1 or parameters[0] < 1:
            raise ModelSpecError(f"projective audit takes one parameter n >= 1, got {list(parameters)}")
        self.n = parameters[0]
        self.shape = FlagShape(block_sizes=(1, self.n))

    def build_parabolic(self) -> Parabolic:
        return named_model("projective", (self.n,))

    def index_pairs(self) -> List[Tuple[int, int]]:
        return [(i, 1) for i in range(2, self.n + 2)]

    def alpha_for(self, i: int, j: int) -> Root:
        if j != 1 or not 2 <= i <= self.n + 1:
            raise AuditIndexError(f"projective audit needs j = 1 and 2 <= i <= {self.n + 1}, got i={i}, j={j}")
        return self.shape.alpha(i, j, self.n)

    def audit_indices(self, i: int, j: int, alpha: Root, tangent: SplittingType) -> List[AuditResult]:
        normal = tangent.remove(2)
        indices = {"i": i, "j": j}
        return [
            self.record("O(2)", "1", 1, tangent.multiplicity(2), indices, alpha),
            self.record("normal O(1)", "n - 1", self.n - 1, normal.multiplicity(1), indices, alpha),
            self.record("normal rank", "n - 1", self.n - 1, normal.rank, indices, alpha),
        ]


@register_audit("quadric", "conformal")
class ConformalAudit(BaseAudit):
    """Conformal circles in Q^n; no (i, j) parameters."""

    MODEL = "quadric"
    SECTION = "Conformal connections"

    # Q^3 = LG(2): the short omitted root -(e_1 + e_2) of C2
    COINCIDENCE_ALPHA = (-1, -1)

    def parse_parameters(self, parameters: Tuple[int, ...]) -> None:
        if len(parameters) != 1 or parameters[0] < 3:
            raise ModelSpecError(f"conformal audit takes one parameter n >= 3, got {list(parameters)}")
        self.n = parameters[0]

    def build_parabolic(self) -> Parabolic:
        return named_model("quadric", (self.n,))

    def index_pairs(self) -> List[Tuple[int, int]]:
        return []

    def alpha_for(self, i: int, j: int) -> Root:
        raise AuditIndexError("conformal audit takes no (i, j) indices")

    def audit_indices(self, i: int, j: int, alpha: Root, tangent: SplittingType) -> List[AuditResult]:
        return []

    def run(self, indices: Optional[Tuple[int, int]] = None) -> List[AuditResult]:
        if indices is not None:
            raise AuditIndexError("conformal audit takes no (i, j) indices")
        expression = "n - 1"
        if self.n == 3:
            lagrangian = named_model("lagrangian", (2,))
            alpha = lagrangian.root_system.root(self.COINCIDENCE_ALPHA)
            normal = normal_splitting(lagrangian, alpha)
            result = self.record(
                "normal O(2)", expression, self.n - 1, normal.multiplicity(2), alpha=alpha,
                note="computed on lagrangian:2 (Q^3 = LG(2)), short-root circle",
            )
        else:
            result = self.record(
                "normal O(2)", expression, self.n - 1, None,
                note="the conformal circle is a conic, not a root circle",
            )
        return [result]
