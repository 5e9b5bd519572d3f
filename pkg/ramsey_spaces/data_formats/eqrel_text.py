from __future__ import annotations

import json
from typing import Any

from ramsey_spaces.domain.eqrel.finite import FiniteEqRel


def format_eqrel(relation: FiniteEqRel) -> str:
    """代表元配列を空白区切りで返す (例: "0 0 2 0 2")。"""
    return " ".join(str(rep) for rep in relation.assign)


def parse_eqrel(text: str) -> FiniteEqRel:
    """空白区切りの代表元配列、または {"m":..,"assign":[..]} 形式の JSON を読む。"""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            raw = json.loads(stripped)
        except json.JSONDecodeError as e:
            msg = f"同値関係の JSON を解釈できません: {e}"
            raise ValueError(msg) from e
        return eqrel_from_dict(raw)
    try:
        assign = tuple(int(token) for token in stripped.replace(",", " ").split())
    except ValueError as e:
        msg = f"代表元配列は整数の並びである必要があります: {text!r}"
        raise ValueError(msg) from e
    return FiniteEqRel(assign)


def eqrel_to_dict(relation: FiniteEqRel) -> dict[str, Any]:
    return {"m": relation.m, "assign": list(relation.assign)}


def eqrel_from_dict(raw: object) -> FiniteEqRel:
    if not isinstance(raw, dict) or not isinstance(raw.get("assign"), list):
        msg = "同値関係は assign 配列を持つオブジェクトである必要があります。"
        raise ValueError(msg)  # noqa: TRY004
    relation = FiniteEqRel(tuple(int(rep) for rep in raw["assign"]))
    declared = raw.get("m", relation.m)
    if declared != relation.m:
        msg = f"m={declared} と assign の長さ {relation.m} が一致しません。"
        raise ValueError(msg)
    return relation
