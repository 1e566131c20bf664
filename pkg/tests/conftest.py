"""Shared fixtures and assessment builders."""

from __future__ import annotations

import datetime as dt

import pytest

from mlquality.assessment import Assessment, GapEntry
from mlquality.model import Gap, QualityModel, default_model
from mlquality.scoring import BusinessCriticality, CriticalityLevel

DATE = dt.date(2026, 1, 5)


@pytest.fixture(scope="session")
def model() -> QualityModel:
    return default_model()


def make_assessment(
    model: QualityModel,
    gaps: dict[str, Gap] | None = None,
    *,
    team: str = "search",
    system_id: str = "ranker",
    date: dt.date = DATE,
    criticality_level: int | None = 5,
    family: tuple[str, ...] = (),
) -> Assessment:
    """An assessment with NO_GAP everywhere except the given overrides."""
    gaps = gaps or {}
    entries = {
        sub_id: GapEntry(gap=gaps.get(sub_id, Gap.NO_GAP), reason=f"reason {sub_id}")
        for sub_id in model.ids
    }
    criticality = (
        BusinessCriticality(
            level=CriticalityLevel(criticality_level), justification="fixture"
        )
        if criticality_level is not None
        else None
    )
    return Assessment(
        team=team,
        system_id=system_id,
        date=date,
        gaps=entries,
        family_members=family,
        criticality=criticality,
    )


def legal_gaps_by_row(model: QualityModel) -> dict[str, tuple[Gap, ...]]:
    return {sub_id: model.legal_gaps(sub_id) for sub_id in model.ids}
