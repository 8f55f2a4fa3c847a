"""Stable dictionary forms of every report, shared by JSON and plain output.

Orders are decimal strings so that large level-quotient orders survive any
JSON consumer unchanged.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .ac import ACClassReport
from .group import Subgroup
from .mn import TheoremOneReport, WitnessReport
from .tree import DihedralReport

SCHEMA_VERSION = "1"


def _subgroup(H: Optional[Subgroup]) -> Optional[dict]:
    if H is None:
        return None
    return {"order": str(H.order()), "generators": [str(g) for g in H.generators]}


def envelope(kind: str, body: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "report": kind, **body}


def theorem1_dict(r: TheoremOneReport) -> dict:
    w = r.witnesses
    witnesses = None
    if w is not None:
        witnesses = {
            "non_normal_maximal": _subgroup(w.non_normal_maximal),
            "non_mn_quotient_by": _subgroup(w.non_mn_quotient_by),
            "non_nilpotent_quotient_by": _subgroup(w.non_nilpotent_quotient_by),
            "commutator_outside_frattini": (
                None if w.commutator_outside_frattini is None else str(w.commutator_outside_frattini)
            ),
        }
    return envelope("theorem1", {
        "group": r.group_label,
        "order": str(r.group_order),
        "cond1_all_maximal_normal": r.cond1_all_maximal_normal,
        "cond2_quotients_in_mn": r.cond2_quotients_in_mn,
        "cond3_maximal_finite_index_and_finite_quotients_nilpotent":
            r.cond3_maximal_finite_index_and_finite_quotients_nilpotent,
        "cond4_commutator_in_frattini": r.cond4_commutator_in_frattini,
        "cond2_exhaustive": r.cond2_exhaustive,
        "normal_subgroups_checked": r.normal_subgroups_checked,
        "all_agree": r.all_agree,
        "witnesses": witnesses,
    })


def witness_dict(r: WitnessReport) -> dict:
    return envelope("witness", {
        "group": r.group_label,
        "order": str(r.group_order),
        "witness_set": sorted(str(g) for g in r.witness_set),
        "generated_order": str(r.generated_order),
        "normal_closure_order": str(r.normal_closure_order),
        "verdict": r.verdict.value,
    })


def ac_dict(r: ACClassReport, extra: Optional[dict] = None) -> dict:
    body = {
        "group": r.group_label,
        "tuple_length": r.tuple_length,
        "normally_generating_count": r.normally_generating_count,
        "ac_class_count": r.ac_class_count,
        "abelianized_class_count": r.abelianized_class_count,
        "refinement_ok": r.refinement_ok,
        "bijective": r.bijective,
        "group_in_mn": r.group_in_mn,
    }
    body.update(extra or {})
    return envelope("ac_classes", body)


def dihedral_dict(r: DihedralReport) -> dict:
    return envelope("basilica_probe", {
        "level": r.level,
        "base_order": str(r.base_order),
        "kernel_order": str(r.kernel_order),
        "quotient_order": str(r.quotient_order),
        "is_dihedral": r.is_dihedral,
        "cyclic_index2_order": str(r.cyclic_index2_order),
        "degenerate": r.degenerate,
        "rotation_is_image_of_a": r.rotation_is_image_of_a,
    })


def to_json(d: dict) -> str:
    return json.dumps(d, sort_keys=True, indent=2)


def _plain_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, list):
        return ", ".join(_plain_value(x) for x in v) or "(none)"
    return str(v)


def to_plain(d: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in d.items():
        if key == "schema_version":
            continue
        label = key.replace("_", " ")
        if isinstance(value, dict):
            lines.append(f"{pad}{label}:")
            lines.append(to_plain(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{label}:")
            for item in value:
                lines.append(to_plain(item, indent + 1))
                lines.append("")
        else:
            lines.append(f"{pad}{label}: {_plain_value(value)}")
    return "\n".join(line for line in lines)
