"""
Audits of closed-form splitting formulas, one module per model family.

Importing this package registers every audit with the AuditRegistry.
"""

from typing import List, Optional, Sequence, Tuple

from src.core.base_audit import AuditResult, BaseAudit
from src.core.errors import ModelSpecError
from src.core.registry import AuditRegistry

from .flag import FlagAudit
from .lagrangian import LagrangianAudit
from .projective import ConformalAudit, ProjectiveAudit
from .spinor import SpinorAudit


def get_audit(model: str, parameters: Sequence[int]) -> BaseAudit:
    """
    Instantiate the audit registered for a model name.

    grassmannian:1,n is audited as projective:n-1, the same parabolic.

    Raises:
        ModelSpecError: if no audit covers the model or its parameters are bad
    """
    name = model.lower()
    params = tuple(parameters)
    if name == "grassmannian" and len(params) == 2 and params[0] == 1:
        name, params = "projective", (params[1] - 1,)
    audit_class = AuditRegistry.get_audit_class(name)
    if audit_class is None:
        audited = ", ".join(AuditRegistry.list_audits())
        raise ModelSpecError(f"No audit for model '{model}' (audited models: {audited})")
    return audit_class(params, model=name)


def audit_paper_formulas(
    model: str,
    parameters: Sequence[int],
    indices: Optional[Tuple[int, int]] = None,
) -> List[AuditResult]:
    """
    Compare published closed forms with computed splittings.

    Args:
        model: Model name (flag, grassmannian, spinor, lagrangian, projective, quadric)
        parameters: Model parameters
        indices: A single (i, j); None runs every index pair of the model

    Returns:
        One AuditResult per formula and index pair; mismatches are data
    """
    return get_audit(model, parameters).run(indices)


__all__ = [
    "FlagAudit",
    "SpinorAudit",
    "LagrangianAudit",
    "ProjectiveAudit",
    "ConformalAudit",
    "get_audit",
    "audit_paper_formulas",
]
