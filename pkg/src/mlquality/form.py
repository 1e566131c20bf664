"""Blank questionnaire for the semi-automated assessment path.

The emitted Markdown lists every quality attribute with its requirement
texts and met/not-met checkboxes. A filled form maps onto the gaps CSV by
a fixed rule: full requirement met means gap "no", only the minimal one
met means "small", neither means "large". Attributes without a minimal
requirement get no minimal checkbox, and "small" is not a legal gap for
them.
"""

from __future__ import annotations

from .model import QualityModel

_HEADER = """\
# ML system quality questionnaire

For every quality attribute below, tick the requirements the system meets
and note the evidence in the reason line. Convert the filled form to a
gaps CSV (`sub_characteristic,gap,reason`) as follows:

* full requirement met: gap `no`
* only the minimal requirement met: gap `small`
* neither requirement met: gap `large`

Attributes listed without a minimal requirement only take `no` or `large`.
"""


def questionnaire_template(model: QualityModel) -> str:
    """Render the blank questionnaire for this model, byte-deterministic."""
    blocks = [_HEADER]
    for characteristic in model.characteristics:
        blocks.append(f"\n## {characteristic.display_name}\n")
        description = model.characteristic_descriptions.get(characteristic)
        if description:
            blocks.append(f"{description}\n")
        for sub in model.rows_of(characteristic):
            blocks.append(f"\n### {sub.display_name} (`{sub.id}`)\n")
            blocks.append(f"{sub.reasoning}\n\n")
            if sub.minimal_requirement is not None:
                blocks.append(
                    f"- [ ] Minimal requirement met: {sub.minimal_requirement}\n"
                )
            blocks.append(f"- [ ] Full requirement met: {sub.full_requirement}\n")
            blocks.append("- Reason: \n")
    return "".join(blocks)
