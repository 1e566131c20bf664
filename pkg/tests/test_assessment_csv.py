"""Gaps CSV parsing, error reporting and the serialize round trip."""

from __future__ import annotations

import datetime as dt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mlquality.assessment import parse_assessment, serialize_assessment
from mlquality.errors import GapFileError
from mlquality.model import Gap, default_model
from mlquality.scoring import BusinessCriticality, CriticalityLevel

MODEL = default_model()
DATE = dt.date(2026, 1, 5)


def _csv(rows: dict[str, tuple[str, str]]) -> str:
    lines = ["sub_characteristic,gap,reason"]
    lines += [f"{sub_id},{gap},{reason}" for sub_id, (gap, reason) in rows.items()]
    return "\n".join(lines) + "\n"


def _full_csv(**overrides: tuple[str, str]) -> str:
    rows = {sub_id: ("no", "all good") for sub_id in MODEL.ids}
    rows.update(overrides)
    return _csv(rows)


def _parse(text: str):
    return parse_assessment(
        text, MODEL, team="search", system_id="ranker", date=DATE
    )


def test_all_no_gaps_parse():
    assessment = _parse(_full_csv())
    assert set(assessment.gaps) == set(MODEL.ids)
    assert all(entry.gap is Gap.NO_GAP for entry in assessment.gaps.values())
    assert assessment.family_members == ("ranker",)


def test_numeric_tokens_accepted():
    assessment = _parse(_full_csv(testability=("1", "some tests")))
    assert assessment.gap("testability") is Gap.SMALL


def test_small_gap_rejected_on_full_only_row():
    with pytest.raises(GapFileError) as excinfo:
        _parse(_full_csv(fairness=("small", "partial bias check")))
    assert any(
        "small gap illegal for fairness" in p for p in excinfo.value.problems
    )
    # fairness is row 22, one line after the header
    assert any("line 23" in p for p in excinfo.value.problems)


def test_missing_row_reported():
    rows = {sub_id: ("no", "ok") for sub_id in MODEL.ids if sub_id != "traceability"}
    with pytest.raises(GapFileError) as excinfo:
        _parse(_csv(rows))
    assert excinfo.value.problems == ["missing sub-characteristic: traceability"]


def test_unknown_row_reported_with_line():
    with pytest.raises(GapFileError) as excinfo:
        _parse(_full_csv() + "latency,no,fast\n")
    assert any(
        p == "line 27: unknown sub-characteristic: latency"
        for p in excinfo.value.problems
    )


def test_duplicate_row_reported():
    with pytest.raises(GapFileError) as excinfo:
        _parse(_full_csv() + "accuracy,no,again\n")
    assert any(
        p == "line 27: duplicate sub-characteristic: accuracy"
        for p in excinfo.value.problems
    )


def test_malformed_gap_token_reported():
    with pytest.raises(GapFileError) as excinfo:
        _parse(_full_csv(accuracy=("tiny", "oops")))
    assert any("malformed gap token: 'tiny'" in p for p in excinfo.value.problems)


def test_bad_header_rejected():
    with pytest.raises(GapFileError) as excinfo:
        _parse("attribute,gap,reason\n")
    assert "line 1" in excinfo.value.problems[0]


def test_multiple_problems_collected():
    text = _full_csv(accuracy=("tiny", "oops")) + "latency,no,fast\n"
    with pytest.raises(GapFileError) as excinfo:
        _parse(text)
    # the bad accuracy row leaves accuracy missing, plus two row problems
    assert len(excinfo.value.problems) == 3


def test_rows_order_insensitive():
    rows = {sub_id: ("no", "ok") for sub_id in reversed(MODEL.ids)}
    assessment = _parse(_csv(rows))
    assert list(assessment.gaps) == list(MODEL.ids)


reason_text = st.text(
    alphabet=st.characters(blacklist_categories=("Cs", "Cc")),
    max_size=40,
).map(lambda s: s.replace(",", " ").replace("\n", " ").replace("\r", " ").strip())


@st.composite
def random_assessments(draw):
    from mlquality.assessment import Assessment, GapEntry

    gaps = {
        sub_id: GapEntry(
            gap=draw(st.sampled_from(MODEL.legal_gaps(sub_id))),
            reason=draw(reason_text),
        )
        for sub_id in MODEL.ids
    }
    return Assessment(
        team="search",
        system_id="ranker",
        date=DATE,
        gaps=gaps,
        criticality=BusinessCriticality(
            level=CriticalityLevel.PRODUCTION_CRITICAL, justification="fixture"
        ),
    )


@given(random_assessments())
@settings(max_examples=150)
def test_serialize_parse_round_trip(assessment):
    text = serialize_assessment(assessment, MODEL)
    parsed = parse_assessment(
        text,
        MODEL,
        team=assessment.team,
        system_id=assessment.system_id,
        date=assessment.date,
        family_members=assessment.family_members,
        criticality=assessment.criticality,
    )
    assert parsed == assessment
