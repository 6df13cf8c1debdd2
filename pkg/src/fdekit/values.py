"""Truth values and the four Dunn interpretations.

An interpretation is the subset of ``{1, 0}`` a valuation relates a formula
to.  Each one is encoded as a two-bit code (bit 0: ``1`` is in the set,
bit 1: ``0`` is in the set) so that truth tables can be stored as flat byte
strings indexed by code.
"""

from __future__ import annotations

from enum import IntEnum


class TruthValue(IntEnum):
    FALSITY = 0
    TRUTH = 1

    def __str__(self) -> str:
        return str(int(self))


class Interpretation(IntEnum):
    N = 0  # {}
    T = 1  # {1}
    F = 2  # {0}
    B = 3  # {1,0}

    @property
    def true(self) -> bool:
        return bool(self & 1)

    @property
    def false(self) -> bool:
        return bool(self & 2)

    def contains(self, value: TruthValue | int) -> bool:
        return self.true if int(value) == 1 else self.false

    @classmethod
    def from_flags(cls, true: bool, false: bool) -> Interpretation:
        return cls(int(true) | (int(false) << 1))

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def rank(self) -> int:
        """Position in the canonical order {1}, {1,0}, {}, {0}."""
        return _RANK[self]

    @classmethod
    def parse(cls, text: str) -> Interpretation:
        """Read ``{1}``, ``{1,0}``, ``{}``, ``{0}`` or one of the aliases T, B, N, F."""
        key = "".join(text.split())
        if key.upper() in ("T", "B", "N", "F"):
            return cls[key.upper()]
        if not (key.startswith("{") and key.endswith("}")):
            raise ValueError(f"not an interpretation: {text!r}")
        members = [m for m in key[1:-1].split(",") if m]
        if any(m not in ("0", "1") for m in members) or len(set(members)) != len(members):
            raise ValueError(f"not an interpretation: {text!r}")
        return cls.from_flags("1" in members, "0" in members)

    def __str__(self) -> str:
        return self.label


_LABELS = {
    Interpretation.T: "{1}",
    Interpretation.B: "{1,0}",
    Interpretation.N: "{}",
    Interpretation.F: "{0}",
}

CANONICAL_ORDER: tuple[Interpretation, ...] = (
    Interpretation.T,
    Interpretation.B,
    Interpretation.N,
    Interpretation.F,
)
CLASSICAL: tuple[Interpretation, ...] = (Interpretation.T, Interpretation.F)

_RANK = {v: i for i, v in enumerate(CANONICAL_ORDER)}


def canonical(values) -> tuple[Interpretation, ...]:
    """Deduplicate and sort interpretations into canonical order."""
    return tuple(sorted(set(values), key=lambda v: _RANK[v]))
