"""Quality scoring, maturity grading and remediation reporting for ML
systems.

The package evaluates one system per assessment: a gap per quality
attribute feeds a 0..100 quality score, a maturity level derived from a
per-level requirement matrix, a business-criticality class with its
required maturity, color-coded remediation priorities and a
self-contained HTML report. Assessments can be written by hand (gaps CSV),
collected through a questionnaire, or inferred automatically from registry
metadata; results are stored versioned on disk and aggregated into fleet
views.
"""

from .analytics import (
    ComplianceRow,
    DistributionSummary,
    compliance_by_subcharacteristic,
    render_compliance_chart,
    render_trend_chart,
    score_distribution,
)
from .assessment import (
    Assessment,
    GapEntry,
    parse_assessment,
    serialize_assessment,
)
from .errors import (
    GapFileError,
    MlQualityError,
    ModelConfigError,
    OverrideError,
    SnapshotError,
    StoreError,
)
from .form import questionnaire_template
from .model import (
    Characteristic,
    Demand,
    Gap,
    QualityModel,
    SubCharacteristic,
    default_model,
    load_quality_model,
    validate_model,
)
from .registry import (
    ManualOverrides,
    RegistrySnapshot,
    SystemMetadata,
    fleet_percentiles,
    infer_gaps,
    load_overrides,
    load_registry_snapshot,
    parse_registry_snapshot,
    usage_from_metadata,
)
from .report import ReportDocument, render_radar, render_report
from .scoring import (
    AssessmentResult,
    BusinessCriticality,
    CriticalityLevel,
    FleetStats,
    GapColor,
    Recommendation,
    SystemUsage,
    characteristic_scores,
    classify_gaps,
    determine_criticality,
    evaluate,
    maturity_level,
    quality_score,
    recommendations,
    required_maturity,
    satisfies_level,
)
from .store import (
    HistoryRow,
    StoredAssessment,
    history,
    load_assessment,
    model_fingerprint,
    persist_assessment,
)

__version__ = "0.1.0"

__all__ = [
    "Assessment",
    "AssessmentResult",
    "BusinessCriticality",
    "Characteristic",
    "ComplianceRow",
    "CriticalityLevel",
    "Demand",
    "DistributionSummary",
    "FleetStats",
    "Gap",
    "GapColor",
    "GapEntry",
    "GapFileError",
    "HistoryRow",
    "ManualOverrides",
    "MlQualityError",
    "ModelConfigError",
    "OverrideError",
    "QualityModel",
    "Recommendation",
    "RegistrySnapshot",
    "ReportDocument",
    "SnapshotError",
    "StoreError",
    "StoredAssessment",
    "SubCharacteristic",
    "SystemMetadata",
    "SystemUsage",
    "characteristic_scores",
    "classify_gaps",
    "compliance_by_subcharacteristic",
    "default_model",
    "determine_criticality",
    "evaluate",
    "fleet_percentiles",
    "history",
    "infer_gaps",
    "load_assessment",
    "load_overrides",
    "load_quality_model",
    "load_registry_snapshot",
    "maturity_level",
    "model_fingerprint",
    "parse_assessment",
    "parse_registry_snapshot",
    "persist_assessment",
    "quality_score",
    "questionnaire_template",
    "recommendations",
    "render_compliance_chart",
    "render_radar",
    "render_report",
    "render_trend_chart",
    "required_maturity",
    "satisfies_level",
    "score_distribution",
    "serialize_assessment",
    "usage_from_metadata",
    "validate_model",
]
