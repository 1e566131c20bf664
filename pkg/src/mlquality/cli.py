"""Command-line entry point.

Subcommands: assess (score a gaps CSV), infer (automated assessment from a
registry snapshot), report (re-render from a stored snapshot), history,
fleet (aggregate views), validate and form (questionnaire template).

Exit codes: 0 success, 1 validation or domain error, 2 usage error. All
output is plain text and files; there are no interactive prompts, so every
command can run from a scheduler.
"""

from __future__ import annotations

import argparse
import datetime as dt
import logging
import os
import sys
from dataclasses import fields as dataclass_fields, replace
from pathlib import Path

import yaml

from .analytics import (
    compliance_by_subcharacteristic,
    compliance_csv,
    distribution_csv,
    render_compliance_chart,
    render_trend_chart,
    score_distribution,
)
from .assessment import parse_assessment
from .errors import GapFileError, MlQualityError, ModelConfigError
from .form import questionnaire_template
from .model import QualityModel, load_quality_model, validate_model
from .registry import (
    fleet_percentiles,
    infer_gaps,
    load_overrides,
    load_registry_snapshot,
    usage_from_metadata,
)
from .report import render_report
from .scoring import (
    BusinessCriticality,
    CriticalityLevel,
    SystemUsage,
    determine_criticality,
    evaluate,
)
from .store import (
    REPORT_FILE,
    history,
    load_assessment,
    persist_assessment,
    sanitize_component,
)

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Bad flag combination; maps to exit code 2."""


def _load_model(args) -> QualityModel:
    return load_quality_model(Path(args.model) if args.model else None)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MlQualityError(f"cannot read {path}: {exc}") from exc


def _load_usage(path: str) -> SystemUsage:
    document = yaml.safe_load(_read_text(path))
    if not isinstance(document, dict):
        raise MlQualityError(f"usage file {path} must be a mapping")
    known = {f.name for f in dataclass_fields(SystemUsage)}
    unknown = sorted(set(document) - known)
    if unknown:
        raise MlQualityError(
            f"usage file {path}: unknown fields: {', '.join(unknown)}"
        )
    for name in ("strategic", "in_production"):
        if name in document and not isinstance(document[name], bool):
            raise MlQualityError(f"usage file {path}: {name} must be a boolean")
    for name in ("requests_per_day", "dependent_consumers", "revenue_share"):
        value = document.get(name)
        if value is not None and (
            isinstance(value, bool) or not isinstance(value, (int, float))
        ):
            raise MlQualityError(f"usage file {path}: {name} must be a number")
    return SystemUsage(**document)


def _store_root(args) -> Path:
    if not args.store:
        raise UsageError("--store is required (or set MLQ_STORE)")
    return Path(args.store)


def cmd_assess(args) -> int:
    model = _load_model(args)
    if args.criticality is not None:
        criticality = BusinessCriticality(
            level=CriticalityLevel(args.criticality),
            justification="provided on the command line",
        )
    elif args.usage and args.fleet:
        fleet = fleet_percentiles(load_registry_snapshot(Path(args.fleet)).systems)
        criticality = determine_criticality(_load_usage(args.usage), fleet)
    else:
        raise UsageError(
            "business criticality is undetermined: pass --criticality, "
            "or both --usage and --fleet"
        )
    family = tuple(args.family.split(",")) if args.family else ()
    assessment = parse_assessment(
        _read_text(args.gaps),
        model,
        team=args.team,
        system_id=args.system,
        date=args.date,
        family_members=family,
        criticality=criticality,
    )
    result = evaluate(assessment, model)
    stored = persist_assessment(_store_root(args), result, model)
    print(
        f"score={result.quality_score} maturity={result.maturity} "
        f"required={result.required_maturity}"
    )
    print(f"stored: {stored.directory}")
    return 0


def cmd_infer(args) -> int:
    model = _load_model(args)
    snapshot = load_registry_snapshot(Path(args.registry))
    overrides = load_overrides(Path(args.overrides) if args.overrides else None)
    date = args.date or snapshot.snapshot_date or dt.date.today()
    records = list(snapshot.systems)
    if not records:
        raise MlQualityError("registry snapshot contains no systems")
    fleet = fleet_percentiles(records)
    store = _store_root(args)
    for record in records:
        assessment = infer_gaps(
            record, overrides.for_system(record.system_id), fleet, model, date=date
        )
        criticality = determine_criticality(usage_from_metadata(record), fleet)
        result = evaluate(replace(assessment, criticality=criticality), model)
        persist_assessment(store, result, model)
        print(
            f"system={record.system_id} team={record.team} "
            f"score={result.quality_score} maturity={result.maturity} "
            f"required={result.required_maturity} "
            f"criticality={int(criticality.level)}"
        )
    return 0


def cmd_report(args) -> int:
    model = load_quality_model(Path(args.model)) if args.model else None
    result = load_assessment(
        _store_root(args), args.team, args.system, date=args.date, model=model
    )
    document = render_report(result, model)
    if args.out:
        target = Path(args.out)
    else:
        target = (
            _store_root(args)
            / sanitize_component(args.team)
            / sanitize_component(args.system)
            / result.assessment.date.isoformat()
            / REPORT_FILE
        )
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(document.html, encoding="utf-8")
    print(f"report: {target}")
    return 0


def cmd_history(args) -> int:
    rows = history(_store_root(args), team=args.team, system=args.system)
    print("team,system,date,quality_score,maturity")
    for row in rows:
        print(
            f"{row.team},{row.system},{row.date.isoformat()},"
            f"{row.quality_score},{row.maturity}"
        )
    return 0


def _latest_result_per_system(store, rows, keep):
    """Load the newest stored result per system among rows passing `keep`."""
    picked: dict[tuple[str, str], dt.date] = {}
    for row in rows:
        if not keep(row.date):
            continue
        key = (row.team, row.system)
        if key not in picked or row.date > picked[key]:
            picked[key] = row.date
    return [
        load_assessment(store, team, system, date=date)
        for (team, system), date in sorted(picked.items())
    ]


def cmd_fleet(args) -> int:
    store = _store_root(args)
    rows = history(store)
    if not rows:
        raise MlQualityError(f"store {store} contains no assessments")
    if (args.before is None) != (args.after is None):
        raise UsageError("--before and --after must be given together")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    (out / "distribution.csv").write_text(
        distribution_csv(score_distribution(rows)), encoding="utf-8"
    )
    (out / "trend.svg").write_text(render_trend_chart(rows), encoding="utf-8")
    written = ["distribution.csv", "trend.svg"]

    if args.before is not None:
        before = _latest_result_per_system(store, rows, lambda d: d <= args.before)
        after = _latest_result_per_system(store, rows, lambda d: d >= args.after)
        if not before or not after:
            raise MlQualityError(
                "before/after dates leave an empty cohort; nothing to compare"
            )
        compliance = compliance_by_subcharacteristic(before, after)
        (out / "compliance.csv").write_text(
            compliance_csv(compliance), encoding="utf-8"
        )
        (out / "compliance.svg").write_text(
            render_compliance_chart(compliance), encoding="utf-8"
        )
        written += ["compliance.csv", "compliance.svg"]
    for name in written:
        print(f"wrote: {out / name}")
    return 0


def cmd_validate(args) -> int:
    problems: list[str] = []
    model = None
    try:
        model = _load_model(args)
        print(
            f"model OK: {len(model.ids)} sub-characteristics, "
            f"{len(model.characteristics)} characteristics"
        )
    except ModelConfigError as exc:
        problems.extend(exc.problems)
    if args.gaps:
        if model is None:
            problems.append("gaps CSV not checked: model invalid")
        else:
            try:
                parse_assessment(
                    _read_text(args.gaps),
                    model,
                    team="unchecked",
                    system_id="unchecked",
                    date=dt.date(1970, 1, 1),
                )
                print("gaps CSV OK")
            except GapFileError as exc:
                problems.extend(exc.problems)
    for problem in problems:
        print(problem, file=sys.stderr)
    return 1 if problems else 0


def cmd_form(args) -> int:
    model = _load_model(args)
    target = Path(args.out)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(questionnaire_template(model), encoding="utf-8")
    print(f"form: {target}")
    return 0


def _add_store_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--store",
        default=os.environ.get("MLQ_STORE"),
        help="assessment store root (default: $MLQ_STORE)",
    )


def _add_model_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--model", help="quality model config file (default: built-in model)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlq",
        description="Quality and maturity assessment for ML systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    assess = sub.add_parser("assess", help="score a gaps CSV and store the result")
    assess.add_argument("--gaps", required=True, help="gaps CSV file")
    assess.add_argument("--team", required=True)
    assess.add_argument("--system", required=True)
    assess.add_argument("--date", required=True, type=dt.date.fromisoformat)
    assess.add_argument("--family", help="comma-separated system ids sharing this assessment")
    assess.add_argument(
        "--criticality", type=int, choices=(1, 3, 5), help="business criticality level"
    )
    assess.add_argument("--usage", help="usage facts file, to derive criticality")
    assess.add_argument("--fleet", help="registry snapshot, to derive fleet percentiles")
    _add_store_flag(assess)
    _add_model_flag(assess)
    assess.set_defaults(func=cmd_assess)

    infer = sub.add_parser(
        "infer", help="assess every system in a registry snapshot automatically"
    )
    infer.add_argument("--registry", required=True, help="registry snapshot file")
    infer.add_argument("--overrides", help="manual overrides file")
    infer.add_argument(
        "--date",
        type=dt.date.fromisoformat,
        help="assessment date (default: snapshot_date from the document, else today)",
    )
    _add_store_flag(infer)
    _add_model_flag(infer)
    infer.set_defaults(func=cmd_infer)

    report = sub.add_parser("report", help="re-render a report from a stored snapshot")
    report.add_argument("--team", required=True)
    report.add_argument("--system", required=True)
    report.add_argument("--date", type=dt.date.fromisoformat)
    report.add_argument("--out", help="write the report here instead of into the store")
    _add_store_flag(report)
    _add_model_flag(report)
    report.set_defaults(func=cmd_report)

    hist = sub.add_parser("history", help="list stored evaluations")
    hist.add_argument("--team")
    hist.add_argument("--system")
    _add_store_flag(hist)
    hist.set_defaults(func=cmd_history)

    fleet = sub.add_parser("fleet", help="aggregate stored assessments into fleet views")
    fleet.add_argument("--out", required=True, help="output directory")
    fleet.add_argument(
        "--before", type=dt.date.fromisoformat, help="cohort cut-off for 'before'"
    )
    fleet.add_argument(
        "--after", type=dt.date.fromisoformat, help="cohort cut-off for 'after'"
    )
    _add_store_flag(fleet)
    fleet.set_defaults(func=cmd_fleet)

    validate = sub.add_parser("validate", help="validate a model config or gaps CSV")
    validate.add_argument("--gaps", help="gaps CSV to check against the model")
    _add_model_flag(validate)
    validate.set_defaults(func=cmd_validate)

    form = sub.add_parser("form", help="emit a blank questionnaire template")
    form.add_argument("--out", required=True, help="output file")
    _add_model_flag(form)
    form.set_defaults(func=cmd_form)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except MlQualityError as exc:
        for problem in getattr(exc, "problems", [str(exc)]):
            print(problem, file=sys.stderr)
        return 1
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
