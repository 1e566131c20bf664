"""Questionnaire template emission."""

from __future__ import annotations

from mlquality.form import questionnaire_template


def test_template_has_one_entry_per_attribute(model):
    text = questionnaire_template(model)
    for sub in model.sub_characteristics:
        assert f"(`{sub.id}`)" in text
    assert text.count("- [ ] Full requirement met:") == 25
    assert text.count("- Reason:") == 25


def test_full_only_rows_have_no_minimal_checkbox(model):
    text = questionnaire_template(model)
    assert text.count("- [ ] Minimal requirement met:") == 14
    blocks = text.split("### ")[1:]
    assert len(blocks) == 25
    for sub in model.sub_characteristics:
        block = next(b for b in blocks if f"(`{sub.id}`)" in b)
        has_minimal = "Minimal requirement met" in block
        assert has_minimal == (sub.minimal_requirement is not None)


def test_template_documents_gap_mapping(model):
    text = questionnaire_template(model)
    assert "full requirement met: gap `no`" in text
    assert "only the minimal requirement met: gap `small`" in text
    assert "neither requirement met: gap `large`" in text


def test_template_is_byte_deterministic(model):
    assert questionnaire_template(model) == questionnaire_template(model)


def test_template_groups_by_characteristic(model):
    text = questionnaire_template(model)
    headers = [line for line in text.splitlines() if line.startswith("## ")]
    assert headers == [
        "## Utility", "## Economy", "## Robustness", "## Productionizability",
        "## Modifiability", "## Comprehensibility", "## Responsibility",
    ]
