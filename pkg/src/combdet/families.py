"""Sequence family identifiers shared by every computation route."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


class FamilyError(ValueError):
    """Invalid family tag or parameter."""


# tag -> (parameter name, minimum value); None means the family takes no parameter
_PARAMS = {
    "fubini": None,
    "fubini_restricted": ("m", 1),
    "fubini_associated": ("m", 1),
    "bernoulli": None,
    "cauchy": None,
    "euler": None,
    "mod_cauchy_restricted": ("m", 2),
    "mod_cauchy_associated": ("m", 2),
    "mod_bernoulli_restricted": ("m", 2),
    "mod_bernoulli_associated": ("m", 2),
    "gen_fubini": ("k", 1),
}

FAMILY_TAGS = tuple(_PARAMS)

# families whose named numbers are integers
INTEGER_FAMILIES = frozenset({"fubini", "fubini_restricted", "fubini_associated", "euler"})


@dataclass(frozen=True, order=True)
class FamilyId:
    tag: str
    param: Optional[int] = None

    def __post_init__(self):
        if self.tag not in _PARAMS:
            raise FamilyError(f"unknown family {self.tag!r}")
        rule = _PARAMS[self.tag]
        if rule is None:
            if self.param is not None:
                raise FamilyError(f"family {self.tag} takes no parameter")
            return
        name, low = rule
        if self.param is None:
            raise FamilyError(f"family {self.tag} requires --{name}")
        if not isinstance(self.param, int) or self.param < low:
            raise FamilyError(f"family {self.tag} requires {name} >= {low}, got {self.param}")

    @property
    def param_name(self) -> Optional[str]:
        rule = _PARAMS[self.tag]
        return None if rule is None else rule[0]

    @property
    def m(self) -> Optional[int]:
        return self.param if self.param_name == "m" else None

    @property
    def k(self) -> Optional[int]:
        return self.param if self.param_name == "k" else None

    @property
    def is_integer(self) -> bool:
        return self.tag in INTEGER_FAMILIES

    def params(self) -> dict:
        return {} if self.param is None else {self.param_name: self.param}

    def __str__(self) -> str:
        if self.param is None:
            return self.tag
        return f"{self.tag}({self.param_name}={self.param})"


def family(tag: str, param: Optional[int] = None) -> FamilyId:
    return FamilyId(tag, param)


def parse_family(tag: str, m: Optional[int] = None, k: Optional[int] = None) -> FamilyId:
    """Build a FamilyId from a tag and the CLI-style ``m``/``k`` options."""
    if tag not in _PARAMS:
        raise FamilyError(f"unknown family {tag!r}; expected one of {', '.join(FAMILY_TAGS)}")
    rule = _PARAMS[tag]
    if rule is None:
        return FamilyId(tag)
    return FamilyId(tag, m if rule[0] == "m" else k)
