from __future__ import annotations

import enum


class Strategy(enum.Enum):
    """How the negated word is picked from a cue's word window."""

    BASELINE = "baseline"
    FNS = "fns"
    FV = "fv"
    FV_FNS = "fv-fns"
    COMB = "comb"

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def left_extended(self) -> bool:
        return self is Strategy.COMB

    @classmethod
    def parse(cls, name: "str | Strategy") -> "Strategy":
        if isinstance(name, Strategy):
            return name
        key = name.strip().lower().replace("+", "-").replace("_", "-").rstrip(".")
        aliases = {"fns-fv": "fv-fns", "combination": "comb"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(
                f"unknown strategy {name!r}; choose from {', '.join(s.value for s in cls)}"
            ) from None


_LABELS = {
    Strategy.BASELINE: "Baseline",
    Strategy.FNS: "FNS",
    Strategy.FV: "FV",
    Strategy.FV_FNS: "FV+FNS",
    Strategy.COMB: "Comb.",
}
