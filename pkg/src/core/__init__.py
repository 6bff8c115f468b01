"""Core module for root circle splitting types."""

from .errors import (
    CircleError,
    InvalidLieTypeError,
    NotARootError,
    ParabolicIndexError,
    NotOmittedError,
    ModelSpecError,
    AuditIndexError,
    SplittingError,
    InvariantError,
)

from .root_system import (
    Family,
    LieType,
    Root,
    RootSystem,
    build,
    build_from_name,
    cartan_matrix,
    is_root,
    negate,
    add,
    pairing,
)

from .parabolic import (
    Parabolic,
    FlagShape,
    make_parabolic,
)

from .strings import (
    NodeTag,
    StringNode,
    AlphaString,
    alpha_string_through,
    string_inventory,
    oracle_degree,
    full_alpha_strings,
)

from .splitting_type import SplittingType

from .splitting import (
    dual,
    tensor,
    wedge2,
    direct_sum,
    h0,
    tangent_splitting,
    normal_splitting,
    adjoint_splitting,
    CurvatureReport,
    curvature_report,
    FlatnessReport,
    flatness_report,
)

from .p1_bundles import (
    BStringRep,
    from_weights,
    canonical_matrices,
    is_equivariantly_trivial,
    to_splitting,
    invariant_subspace,
    quotient,
    tensor_reps,
)

from .base_audit import (
    AuditStatus,
    AuditResult,
    BaseAudit,
    classify,
)

from .registry import (
    ModelRegistry,
    AuditRegistry,
    ModelSpec,
    register_model,
    register_audit,
    parse_model_spec,
)

from .models import (
    named_model,
    resolve,
    resolve_text,
)

from .config import (
    Settings,
    ReportSettings,
    SweepSettings,
    LoggingSettings,
    OutputFormat,
    ConfigManager,
    get_config_manager,
    get_settings,
)

from .schema import (
    ReportDocument,
    AuditDocument,
    AlphaEntry,
    report_document,
    flatness_document,
    audit_document,
)

from .sweep import (
    SweepResult,
    run_sweep,
)

__all__ = [
    # Errors
    "CircleError",
    "InvalidLieTypeError",
    "NotARootError",
    "ParabolicIndexError",
    "NotOmittedError",
    "ModelSpecError",
    "AuditIndexError",
    "SplittingError",
    "InvariantError",
    # Root systems
    "Family",
    "LieType",
    "Root",
    "RootSystem",
    "build",
    "build_from_name",
    "cartan_matrix",
    "is_root",
    "negate",
    "add",
    "pairing",
    # Parabolics
    "Parabolic",
    "FlagShape",
    "make_parabolic",
    # Strings
    "NodeTag",
    "StringNode",
    "AlphaString",
    "alpha_string_through",
    "string_inventory",
    "oracle_degree",
    "full_alpha_strings",
    # Splitting
    "SplittingType",
    "dual",
    "tensor",
    "wedge2",
    "direct_sum",
    "h0",
    "tangent_splitting",
    "normal_splitting",
    "adjoint_splitting",
    "CurvatureReport",
    "curvature_report",
    "FlatnessReport",
    "flatness_report",
    # P1 string calculus
    "BStringRep",
    "from_weights",
    "canonical_matrices",
    "is_equivariantly_trivial",
    "to_splitting",
    "invariant_subspace",
    "quotient",
    "tensor_reps",
    # Audits
    "AuditStatus",
    "AuditResult",
    "BaseAudit",
    "classify",
    # Registry
    "ModelRegistry",
    "AuditRegistry",
    "ModelSpec",
    "register_model",
    "register_audit",
    "parse_model_spec",
    "named_model",
    "resolve",
    "resolve_text",
    # Config
    "Settings",
    "ReportSettings",
    "SweepSettings",
    "LoggingSettings",
    "OutputFormat",
    "ConfigManager",
    "get_config_manager",
    "get_settings",
    # Documents
    "ReportDocument",
    "AuditDocument",
    "AlphaEntry",
    "report_document",
    "flatness_document",
    "audit_document",
    # Sweep
    "SweepResult",
    "run_sweep",
]
