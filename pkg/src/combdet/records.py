"""Exact value encoding shared by reports and the command line."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Union

from .families import FamilyId

Number = Union[int, Fraction]


def encode_value(v: Number) -> dict:
    if isinstance(v, int):
        return {"int": str(v)}
    v = Fraction(v)
    return {"num": str(v.numerator), "den": str(v.denominator)}


def decode_value(d: dict) -> Number:
    if "int" in d:
        return int(d["int"])
    return Fraction(int(d["num"]), int(d["den"]))


def format_plain(v: Number) -> str:
    """'p/q' with q omitted when 1; never a decimal."""
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def output_record(family: FamilyId, n: int, method: str, value: Number, extra: Optional[dict] = None) -> dict:
    rec = {"family": family.tag}
    if family.params():
        rec["params"] = family.params()
    rec["n"] = n
    rec["method"] = method
    rec["value"] = encode_value(value)
    if extra:
        rec.update(extra)
    return rec


def dumps(obj) -> str:
    """Canonical compact JSON: insertion order kept, no whitespace."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)
