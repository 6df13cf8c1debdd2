"""Tarskian consequence, logical truth and equivalence by exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .formula import Formula, ShapeError, check_well_formed, variables
from .semantics import (
    LogicSpec,
    enumerate_valuations,
    evaluate_unchecked,
    format_valuation,
    tables_of,
)
from .values import Interpretation


@dataclass(frozen=True)
class Argument:
    premises: tuple[Formula, ...]
    conclusion: Formula

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))

    def variables(self) -> list[str]:
        names = set(variables(self.conclusion))
        for p in self.premises:
            names.update(variables(p))
        return sorted(names)

    def render(self, logic: LogicSpec) -> str:
        left = ", ".join(logic.render(p) for p in self.premises)
        right = logic.render(self.conclusion)
        return f"{left} |- {right}" if left else f"|- {right}"


def parse_argument(text: str, logic: LogicSpec) -> Argument:
    """Read ``"B1, B2 |- A"``; the left side may be empty."""
    if text.count("|-") != 1:
        raise ShapeError("an argument needs exactly one '|-'", max(text.find("|-"), 0))
    left, right = text.split("|-")
    premises = [logic.parse(p) for p in left.split(",")] if left.strip() else []
    return Argument(tuple(premises), logic.parse(right))


@dataclass(frozen=True)
class Verdict:
    valid: bool
    counterexample: Mapping[str, Interpretation] | None = None

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        if self.valid:
            return "Valid"
        return f"Invalid, counterexample {format_valuation(self.counterexample)}"


def entails(arg: Argument, logic: LogicSpec) -> Verdict:
    logic.require_closure()
    for f in (*arg.premises, arg.conclusion):
        check_well_formed(f, logic.signatures)
    tables = tables_of(logic)
    for v in enumerate_valuations(arg.variables(), logic.admissible):
        if all(evaluate_unchecked(p, v, tables).true for p in arg.premises):
            if not evaluate_unchecked(arg.conclusion, v, tables).true:
                return Verdict(False, v)
    return Verdict(True)


def is_logical_truth(f: Formula, logic: LogicSpec) -> Verdict:
    return entails(Argument((), f), logic)


@dataclass(frozen=True)
class Equivalence:
    same: bool
    witness: Mapping[str, Interpretation] | None = None
    left: Interpretation | None = None
    right: Interpretation | None = None

    def __bool__(self) -> bool:
        return self.same

    def __str__(self) -> str:
        if self.same:
            return "Same value under every valuation"
        return f"Differ at {format_valuation(self.witness)}: {self.left.label} vs {self.right.label}"


def same_value(f: Formula, g: Formula, logic: LogicSpec) -> Equivalence:
    logic.require_closure()
    check_well_formed(f, logic.signatures)
    check_well_formed(g, logic.signatures)
    tables = tables_of(logic)
    names = sorted(set(variables(f)) | set(variables(g)))
    for v in enumerate_valuations(names, logic.admissible):
        a = evaluate_unchecked(f, v, tables)
        b = evaluate_unchecked(g, v, tables)
        if a != b:
            return Equivalence(False, v, a, b)
    return Equivalence(True)


def entails_text(text: str, logic: LogicSpec) -> Verdict:
    return entails(parse_argument(text, logic), logic)

