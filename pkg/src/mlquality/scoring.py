"""Scoring engine: quality score, maturity level, business criticality,
gap colors and ordered recommendations.

All functions are pure and operate on immutable inputs, so assessments can
be evaluated in parallel without shared state.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum

from .assessment import Assessment, check_gaps_total
from .model import Characteristic, Demand, Gap, QualityModel

MATURITY_LEVELS = (1, 2, 3, 4, 5)


class CriticalityLevel(IntEnum):
    """Business criticality classes; the value doubles as the required
    maturity level."""

    PROOF_OF_CONCEPT = 1
    PRODUCTION_NON_CRITICAL = 3
    PRODUCTION_CRITICAL = 5


@dataclass(frozen=True)
class BusinessCriticality:
    level: CriticalityLevel
    justification: str


@dataclass(frozen=True)
class SystemUsage:
    """Usage facts feeding the criticality decision."""

    requests_per_day: int = 0
    dependent_consumers: int = 0
    revenue_share: float = 0.0
    strategic: bool = False
    in_production: bool = False


@dataclass(frozen=True)
class FleetStats:
    """Fleet-level thresholds used by the criticality and efficiency rules.

    `requests_p66` is the 66th percentile of daily request volume over
    production systems; `training_duration_p80` the 80th percentile of
    training durations (minutes) over the fleet.
    """

    requests_p66: float
    training_duration_p80: float


class GapColor(Enum):
    """Remediation urgency of a gap relative to the maturity ladder."""

    RED = "red"        # blocks the next maturity level
    ORANGE = "orange"  # blocks a later level up to the required one
    YELLOW = "yellow"  # blocks only levels above the required one
    GREEN = "green"    # no gap


_SEVERITY = {GapColor.RED: 0, GapColor.ORANGE: 1, GapColor.YELLOW: 2, GapColor.GREEN: 3}


@dataclass(frozen=True)
class Recommendation:
    sub_characteristic: str
    reason: str
    remediation: str


@dataclass(frozen=True)
class AssessmentResult:
    """Everything derived from one assessment, ready for rendering.

    Mapping fields preserve catalog row order (and catalog characteristic
    order for `characteristic_scores`), which is what makes rendering from
    a stored result reproducible without the model at hand.
    """

    assessment: Assessment
    quality_score: int
    characteristic_scores: dict[Characteristic, int]
    maturity: int
    required_maturity: int
    colors: dict[str, GapColor]
    recommendations: tuple[Recommendation, ...]


def _floor_score(gap_sum: int, row_count: int) -> int:
    # floor(100 * (1 - gap_sum / (2 * row_count))), in exact integer math
    return 100 * (2 * row_count - gap_sum) // (2 * row_count)


def quality_score(assessment: Assessment, model: QualityModel) -> int:
    """Overall quality score in 0..100.

    The score is the floored percentage of gap mass the system does not
    have: 100 means no gaps anywhere, 0 means a large gap on every
    attribute.
    """
    check_gaps_total(assessment, model)
    total = sum(entry.gap for entry in assessment.gaps.values())
    return _floor_score(total, len(model.ids))


def characteristic_scores(
    assessment: Assessment, model: QualityModel
) -> dict[Characteristic, int]:
    """Quality score restricted to each characteristic's own attributes.

    Uses the same floored formula as the overall score, over the rows of
    one characteristic; these are the radar chart axis values.
    """
    check_gaps_total(assessment, model)
    scores: dict[Characteristic, int] = {}
    for characteristic in model.characteristics:
        rows = model.rows_of(characteristic)
        total = sum(assessment.gap(sub.id) for sub in rows)
        scores[characteristic] = _floor_score(total, len(rows))
    return scores


def satisfies_level(assessment: Assessment, level: int, model: QualityModel) -> bool:
    """True iff every attribute meets the demand this maturity level puts
    on it."""
    if level not in MATURITY_LEVELS:
        raise ValueError(f"level must be in 1..5, got {level}")
    return all(
        model.demand(sub_id, level).satisfied_by(entry.gap)
        for sub_id, entry in assessment.gaps.items()
    )


def maturity_level(assessment: Assessment, model: QualityModel) -> int:
    """The highest satisfied maturity level, or 0 when even level 1 fails.

    Matrix rows are non-decreasing, so satisfied levels form a prefix of
    1..5 and the highest one is well-defined.
    """
    check_gaps_total(assessment, model)
    for level in reversed(MATURITY_LEVELS):
        if satisfies_level(assessment, level, model):
            return level
    return 0


def determine_criticality(usage: SystemUsage, fleet: FleetStats) -> BusinessCriticality:
    """Classify business criticality from usage facts.

    Systems outside production are proofs of concept. A production system
    is critical when any one condition holds, checked in a fixed order:
    request volume strictly above the fleet's 66th percentile, more than
    four dependent consumers, revenue share strictly above 1%, or strategic
    importance. The justification names the first condition that fired.
    """
    if not usage.in_production:
        return BusinessCriticality(
            level=CriticalityLevel.PROOF_OF_CONCEPT,
            justification="system under experimentation, not in production",
        )
    if usage.requests_per_day > fleet.requests_p66:
        return BusinessCriticality(
            level=CriticalityLevel.PRODUCTION_CRITICAL,
            justification=(
                f"requests per day ({usage.requests_per_day}) above the 66th "
                f"percentile of production systems ({fleet.requests_p66})"
            ),
        )
    if usage.dependent_consumers > 4:
        return BusinessCriticality(
            level=CriticalityLevel.PRODUCTION_CRITICAL,
            justification=(
                f"more than four dependent teams or products "
                f"({usage.dependent_consumers})"
            ),
        )
    if usage.revenue_share > 0.01:
        return BusinessCriticality(
            level=CriticalityLevel.PRODUCTION_CRITICAL,
            justification=(
                f"revenue share ({usage.revenue_share:.2%}) above 1% of "
                "yearly revenue"
            ),
        )
    if usage.strategic:
        return BusinessCriticality(
            level=CriticalityLevel.PRODUCTION_CRITICAL,
            justification="flagged as strategically important",
        )
    return BusinessCriticality(
        level=CriticalityLevel.PRODUCTION_NON_CRITICAL,
        justification="production system with no criticality condition met",
    )


def required_maturity(criticality: BusinessCriticality) -> int:
    """The maturity level a system must reach, equal to its criticality."""
    return int(criticality.level)


def classify_gaps(
    assessment: Assessment, model: QualityModel, required: int
) -> dict[str, GapColor]:
    """Color every attribute by how urgently its gap blocks progression.

    With M the current maturity: an attribute with no gap is green. An
    attribute whose gap first violates a demand at level M+1 is red; at a
    later level up to `required`, orange; only above `required`, yellow.
    A fully mature system is all green. Every gapped attribute violates
    level 5, so the first violated level always exists.
    """
    if required not in (1, 3, 5):
        raise ValueError(f"required maturity must be one of 1, 3, 5, got {required}")
    maturity = maturity_level(assessment, model)
    colors: dict[str, GapColor] = {}
    for sub_id, entry in assessment.gaps.items():
        if entry.gap is Gap.NO_GAP or maturity == 5:
            colors[sub_id] = GapColor.GREEN
            continue
        first_violated = next(
            level
            for level in range(maturity + 1, 6)
            if not model.demand(sub_id, level).satisfied_by(entry.gap)
        )
        if first_violated == maturity + 1:
            colors[sub_id] = GapColor.RED
        elif first_violated <= required:
            colors[sub_id] = GapColor.ORANGE
        else:
            colors[sub_id] = GapColor.YELLOW
    return colors


def recommendations(
    assessment: Assessment,
    colors: dict[str, GapColor],
    model: QualityModel,
) -> tuple[Recommendation, ...]:
    """One remediation entry per non-green attribute.

    Ordered red before orange before yellow, ties broken by catalog row
    order, so the list is deterministic.
    """
    row_index = {sub_id: index for index, sub_id in enumerate(model.ids)}
    gapped = [sub_id for sub_id in model.ids if colors[sub_id] is not GapColor.GREEN]
    gapped.sort(key=lambda sub_id: (_SEVERITY[colors[sub_id]], row_index[sub_id]))
    return tuple(
        Recommendation(
            sub_characteristic=sub_id,
            reason=assessment.reason(sub_id),
            remediation=model.remediation_texts.get(sub_id, ""),
        )
        for sub_id in gapped
    )


def evaluate(assessment: Assessment, model: QualityModel) -> AssessmentResult:
    """Derive the full result bundle for one assessment.

    The assessment must carry its business criticality; use
    `determine_criticality` or supply it manually first.
    """
    if assessment.criticality is None:
        raise ValueError("assessment has no business criticality attached")
    check_gaps_total(assessment, model)
    required = required_maturity(assessment.criticality)
    colors = classify_gaps(assessment, model, required)
    return AssessmentResult(
        assessment=assessment,
        quality_score=quality_score(assessment, model),
        characteristic_scores=characteristic_scores(assessment, model),
        maturity=maturity_level(assessment, model),
        required_maturity=required,
        colors=colors,
        recommendations=recommendations(assessment, colors, model),
    )
