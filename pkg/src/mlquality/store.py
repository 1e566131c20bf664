"""Versioned on-disk storage of assessment results.

Each evaluation lands in `<root>/<team>/<system>/<date>/` with three
files: the gaps CSV, a canonical JSON snapshot of the full result, and the
rendered HTML report. The snapshot alone is enough to reproduce the report
byte for byte, so results can be re-derived long after the input files are
gone. Snapshot bytes are canonical (sorted keys, fixed indentation, UTF-8,
newline-terminated), which is what makes re-persisting a no-op.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
import logging
import os
import re
from dataclasses import dataclass
from pathlib import Path

from .assessment import Assessment, GapEntry, serialize_assessment
from .errors import StoreError
from .model import GAP_ALIASES, Characteristic, QualityModel
from .report import render_report
from .scoring import (
    AssessmentResult,
    BusinessCriticality,
    CriticalityLevel,
    GapColor,
    Recommendation,
)

logger = logging.getLogger(__name__)

SNAPSHOT_VERSION = 1
GAPS_FILE = "gaps.csv"
SNAPSHOT_FILE = "snapshot.json"
REPORT_FILE = "report.html"


@dataclass(frozen=True)
class StoredAssessment:
    team: str
    system: str
    date: dt.date
    directory: Path
    gaps_csv: Path
    snapshot: Path
    report: Path


@dataclass(frozen=True)
class HistoryRow:
    team: str
    system: str
    date: dt.date
    quality_score: int
    maturity: int


def sanitize_component(name: str) -> str:
    """Make an identity component safe to use as a directory name.

    Path separators and whitespace runs become single underscores; the
    original name is preserved inside the snapshot.
    """
    cleaned = re.sub(r"[\s/\\]+", "_", name.strip())
    if not cleaned or cleaned in (".", "..") or "\x00" in cleaned:
        raise StoreError(f"identity component {name!r} is not path-safe")
    return cleaned


def model_fingerprint(model: QualityModel) -> str:
    """Content hash of everything in the model that affects results."""
    payload = {
        "sub_characteristics": [
            {
                "id": sub.id,
                "characteristic": sub.characteristic.value,
                "minimal_requirement": sub.minimal_requirement,
                "full_requirement": sub.full_requirement,
                "reasoning": sub.reasoning,
                "remediation": model.remediation_texts.get(sub.id, ""),
                "demands": [demand.token for demand in model.matrix[sub.id]],
            }
            for sub in model.sub_characteristics
        ]
    }
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _snapshot_payload(result: AssessmentResult, model: QualityModel) -> dict:
    assessment = result.assessment
    criticality = assessment.criticality
    if criticality is None:
        raise StoreError("cannot persist a result without business criticality")
    return {
        "snapshot_version": SNAPSHOT_VERSION,
        "model_fingerprint": model_fingerprint(model),
        "identity": {
            "team": assessment.team,
            "system": assessment.system_id,
            "family_members": list(assessment.family_members),
            "date": assessment.date.isoformat(),
        },
        "criticality": {
            "level": int(criticality.level),
            "justification": criticality.justification,
        },
        "quality_score": result.quality_score,
        "maturity": result.maturity,
        "required_maturity": result.required_maturity,
        "characteristic_scores": [
            {"characteristic": characteristic.value, "score": score}
            for characteristic, score in result.characteristic_scores.items()
        ],
        "gaps": [
            {"sub_characteristic": sub_id, "gap": entry.gap.token, "reason": entry.reason}
            for sub_id, entry in assessment.gaps.items()
        ],
        "colors": [
            {"sub_characteristic": sub_id, "color": color.value}
            for sub_id, color in result.colors.items()
        ],
        "recommendations": [
            {
                "sub_characteristic": rec.sub_characteristic,
                "reason": rec.reason,
                "remediation": rec.remediation,
            }
            for rec in result.recommendations
        ],
    }


def _result_from_payload(payload: dict) -> AssessmentResult:
    identity = payload["identity"]
    criticality = BusinessCriticality(
        level=CriticalityLevel(payload["criticality"]["level"]),
        justification=payload["criticality"]["justification"],
    )
    gaps = {
        row["sub_characteristic"]: GapEntry(
            gap=GAP_ALIASES[row["gap"]], reason=row["reason"]
        )
        for row in payload["gaps"]
    }
    assessment = Assessment(
        team=identity["team"],
        system_id=identity["system"],
        date=dt.date.fromisoformat(identity["date"]),
        gaps=gaps,
        family_members=tuple(identity["family_members"]),
        criticality=criticality,
    )
    return AssessmentResult(
        assessment=assessment,
        quality_score=int(payload["quality_score"]),
        characteristic_scores={
            Characteristic(row["characteristic"]): int(row["score"])
            for row in payload["characteristic_scores"]
        },
        maturity=int(payload["maturity"]),
        required_maturity=int(payload["required_maturity"]),
        colors={
            row["sub_characteristic"]: GapColor(row["color"])
            for row in payload["colors"]
        },
        recommendations=tuple(
            Recommendation(
                sub_characteristic=row["sub_characteristic"],
                reason=row["reason"],
                remediation=row["remediation"],
            )
            for row in payload["recommendations"]
        ),
    )


def _write_text(path: Path, content: str) -> None:
    # tmp + replace keeps readers from ever seeing a half-written file
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(content, encoding="utf-8")
    os.replace(tmp, path)


def persist_assessment(
    root: str | Path, result: AssessmentResult, model: QualityModel
) -> StoredAssessment:
    """Write one result into the store, overwriting the same identity+date.

    All three files are deterministic functions of the result and model,
    so persisting the same inputs twice leaves identical bytes on disk.
    """
    assessment = result.assessment
    directory = (
        Path(root)
        / sanitize_component(assessment.team)
        / sanitize_component(assessment.system_id)
        / assessment.date.isoformat()
    )
    directory.mkdir(parents=True, exist_ok=True)

    gaps_csv = directory / GAPS_FILE
    snapshot = directory / SNAPSHOT_FILE
    report = directory / REPORT_FILE
    _write_text(gaps_csv, serialize_assessment(assessment, model))
    payload = _snapshot_payload(result, model)
    _write_text(
        snapshot,
        json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n",
    )
    _write_text(report, render_report(result, model).html)
    return StoredAssessment(
        team=assessment.team,
        system=assessment.system_id,
        date=assessment.date,
        directory=directory,
        gaps_csv=gaps_csv,
        snapshot=snapshot,
        report=report,
    )


def _read_snapshot(path: Path) -> dict:
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise StoreError(f"unreadable snapshot {path}: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("snapshot_version") != SNAPSHOT_VERSION:
        raise StoreError(f"unsupported snapshot version in {path}")
    return payload


def load_assessment(
    root: str | Path,
    team: str,
    system: str,
    date: dt.date | None = None,
    model: QualityModel | None = None,
) -> AssessmentResult:
    """Load a stored result; with no date, the latest one.

    When a model is supplied its fingerprint is compared against the one
    recorded in the snapshot; a mismatch logs a warning but still loads,
    since the snapshot is self-contained.
    """
    system_dir = Path(root) / sanitize_component(team) / sanitize_component(system)
    if date is None:
        candidates = sorted(
            entry.name
            for entry in (system_dir.iterdir() if system_dir.is_dir() else ())
            if entry.is_dir() and (entry / SNAPSHOT_FILE).is_file()
        )
        if not candidates:
            raise StoreError(f"not found: no assessments under {system_dir}")
        date_name = candidates[-1]
    else:
        date_name = date.isoformat()
    snapshot = system_dir / date_name / SNAPSHOT_FILE
    if not snapshot.is_file():
        raise StoreError(f"not found: {snapshot}")
    payload = _read_snapshot(snapshot)
    if model is not None:
        recorded = payload.get("model_fingerprint")
        current = model_fingerprint(model)
        if recorded != current:
            logger.warning(
                "snapshot %s was produced with a different model "
                "(stored %s, supplied %s)",
                snapshot,
                recorded,
                current,
            )
    return _result_from_payload(payload)


def history(
    root: str | Path,
    team: str | None = None,
    system: str | None = None,
) -> list[HistoryRow]:
    """All stored evaluations, optionally filtered by team and system.

    Reads only snapshots and never recomputes scores. A corrupted snapshot
    is reported with a warning and skipped; the rest of the history is
    still returned. Rows are sorted by team, system, then date ascending.
    """
    root = Path(root)
    rows: list[HistoryRow] = []
    if not root.is_dir():
        return rows
    for snapshot in sorted(root.glob(f"*/*/*/{SNAPSHOT_FILE}")):
        try:
            payload = _read_snapshot(snapshot)
            identity = payload["identity"]
            row = HistoryRow(
                team=identity["team"],
                system=identity["system"],
                date=dt.date.fromisoformat(identity["date"]),
                quality_score=int(payload["quality_score"]),
                maturity=int(payload["maturity"]),
            )
        except (StoreError, KeyError, TypeError, ValueError) as exc:
            logger.warning("skipping corrupted snapshot %s: %s", snapshot, exc)
            continue
        if team is not None and row.team != team:
            continue
        if system is not None and row.system != system:
            continue
        rows.append(row)
    rows.sort(key=lambda row: (row.team, row.system, row.date))
    return rows
