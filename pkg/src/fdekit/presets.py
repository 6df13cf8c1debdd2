"""Built-in logics and the JSON spec-file format for user-defined ones.

Spec file schema (``format_version`` 1)::

    {
      "format_version": 1,
      "name": "MC",
      "admissible": ["{1}", "{1,0}", "{}", "{0}"],
      "connectives": [
        {"token": "->w", "symbol": "→W", "arity": 2, "precedence": 1,
         "truth": "1 notin A1 or 1 in A2", "falsity": "1 notin A1 or 0 in A2",
         "classical_counterpart": "implication"}
      ]
    }

Conditions are written in the condition DSL of :mod:`fdekit.conditions`.
Biconditional abbreviations (``<->``, ``<=>``, ``<->w``) are derived from
the symbols present and are not stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any

from .conditions import ConditionSyntaxError, ConnectiveDef, connective, parse_condition, render_condition
from .formula import ConnectiveSignature
from .semantics import LogicSpec
from .values import CANONICAL_ORDER, CLASSICAL, Interpretation

FORMAT_VERSION = 1

T, B, N, F = Interpretation.T, Interpretation.B, Interpretation.N, Interpretation.F

NEG = connective("∼", "~", 1, "0 in A1", "1 in A1", "negation")
CONJ = connective("∧", "&", 2, "1 in A1 and 1 in A2", "0 in A1 or 0 in A2", "conjunction")
DISJ = connective("∨", "|", 2, "1 in A1 or 1 in A2", "0 in A1 and 0 in A2", "disjunction")
IMP = connective("→", "->", 2, "0 in A1 or 1 in A2", "1 in A1 and 0 in A2", "implication")

BOOL_NEG = connective("¬", "!", 1, "1 notin A1", "0 notin A1", "negation")
MAT_IMP = connective("⊃", "=>", 2, "1 notin A1 or 1 in A2", "1 in A1 and 0 in A2", "implication")

RUET_NEG = connective("∼R", "~R", 1, "0 notin A1", "1 in A1", "negation")
KAMIDE_NEG = connective("∼K", "~K", 1, "0 in A1", "1 notin A1", "negation")
TONK_AND = connective("∧t", "&t", 2, "1 in A1 or 1 in A2", "0 in A1 or 0 in A2", "conjunction")
INFO_MEET = connective("∧AA", "&aa", 2, "1 in A1 and 1 in A2", "0 in A1 and 0 in A2", "conjunction")
TONK_OR = connective("∨t", "|t", 2, "1 in A1 and 1 in A2", "0 in A1 and 0 in A2", "disjunction")
INFO_JOIN = connective("∨AA", "|aa", 2, "1 in A1 or 1 in A2", "0 in A1 or 0 in A2", "disjunction")
DF_IMP = connective("→DF", "->df", 2, "1 in A1 and 1 in A2", "1 in A1 and 0 in A2", "implication")
W_IMP = connective("→W", "->w", 2, "1 notin A1 or 1 in A2", "1 notin A1 or 0 in A2", "implication")

PCON_CONJ = connective(
    "∧", "&", 2, "1 in A1 and 1 in A2", "(1 in A1 and 0 in A2) or (0 in A1 and 1 in A2)", "conjunction"
)
PCON_DISJ = connective("∨", "|", 2, "1 in A1 or 1 in A2", "0 in A1 or 0 in A2", "disjunction")

P1_NEG = connective("∼", "~", 1, "0 in A1", "0 notin A1", "negation")
P1_CONJ = connective("∧", "&", 2, "1 in A1 and 1 in A2", "1 notin A1 or 1 notin A2", "conjunction")
P1_DISJ = connective("∨", "|", 2, "1 in A1 or 1 in A2", "1 notin A1 and 1 notin A2", "disjunction")
P1_IMP = connective("→", "->", 2, "0 in A1 or 1 in A2", "0 notin A1 and 1 notin A2", "implication")

FDE_CONNECTIVES = (NEG, CONJ, DISJ, IMP)

_PRESETS: dict[str, tuple[tuple[ConnectiveDef, ...], tuple[Interpretation, ...], str]] = {
    "FDE": (FDE_CONNECTIVES, CANONICAL_ORDER, "first-degree entailment"),
    "K3": (FDE_CONNECTIVES, (T, N, F), "strong Kleene logic: {1,0} excluded"),
    "LP": (FDE_CONNECTIVES, (T, B, F), "logic of paradox: {} excluded"),
    "CL": (FDE_CONNECTIVES, CLASSICAL, "classical logic: {1,0} and {} excluded"),
    "FDE-NEG": (FDE_CONNECTIVES + (BOOL_NEG,), CANONICAL_ORDER, "FDE with Boolean negation"),
    "FDE-MAT": (FDE_CONNECTIVES + (MAT_IMP,), CANONICAL_ORDER, "FDE with the material conditional"),
    "RUET": ((RUET_NEG, CONJ, DISJ, IMP, BOOL_NEG), CANONICAL_ORDER, "negation truth condition changed (Ruet)"),
    "CP": ((KAMIDE_NEG, CONJ, DISJ, IMP, BOOL_NEG), CANONICAL_ORDER, "negation falsity condition changed (Kamide)"),
    "TONK-AND": (FDE_CONNECTIVES + (MAT_IMP, TONK_AND), CANONICAL_ORDER, "conjunction with disjunctive truth (tonk)"),
    "TONK-OR": (FDE_CONNECTIVES + (MAT_IMP, TONK_OR), CANONICAL_ORDER, "disjunction with conjunctive truth"),
    "BLSUP": (
        (NEG, CONJ, DISJ, MAT_IMP, INFO_MEET, INFO_JOIN),
        CANONICAL_ORDER,
        "informational meet and join (Arieli-Avron)",
    ),
    "DF": ((NEG, CONJ, DISJ, DF_IMP), CANONICAL_ORDER, "conditional truth condition changed (de Finetti)"),
    "MC": ((NEG, CONJ, DISJ, W_IMP), CANONICAL_ORDER, "material connexive logic (Wansing)"),
    "PCON": (
        (NEG, PCON_CONJ, PCON_DISJ, W_IMP),
        CANONICAL_ORDER,
        "poly-connexive logic (Francez): three falsity conditions changed",
    ),
    "P1GEN": (
        (P1_NEG, P1_CONJ, P1_DISJ, P1_IMP),
        CANONICAL_ORDER,
        "four-valued generalization of Sette's P1: all falsity conditions tweaked",
    ),
}

PRESET_IDS: tuple[str, ...] = tuple(_PRESETS)


class UnknownPresetError(KeyError):
    def __str__(self) -> str:
        return self.args[0]


def get_preset(preset_id: str) -> LogicSpec:
    key = preset_id.strip().upper()
    if key not in _PRESETS:
        raise UnknownPresetError(f"unknown preset {preset_id!r}; choose from {', '.join(PRESET_IDS)}")
    return _build_preset(key)


@lru_cache(maxsize=None)
def _build_preset(key: str) -> LogicSpec:
    conns, admissible, description = _PRESETS[key]
    return LogicSpec(key, conns, admissible, description=description)


class SpecError(ValueError):
    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.message = message
        self.location = location


class DuplicateTokenError(SpecError):
    pass


class SpecClosureError(SpecError):
    def __init__(self, report, location: str = "admissible"):
        super().__init__(f"admissible set not closed: {report}", location)
        self.report = report


_FIELDS = ("token", "symbol", "arity", "precedence", "truth", "falsity", "classical_counterpart")


@dataclass
class SpecDocument:
    name: str
    admissible: list[str]
    connectives: list[dict[str, Any]] = field(default_factory=list)
    format_version: int = FORMAT_VERSION

    def to_dict(self) -> dict[str, Any]:
        return {
            "format_version": self.format_version,
            "name": self.name,
            "admissible": list(self.admissible),
            "connectives": [{k: c[k] for k in _FIELDS} for c in self.connectives],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: Any) -> SpecDocument:
        if not isinstance(data, dict):
            raise SpecError("spec document must be a JSON object")
        for key in ("format_version", "name", "admissible", "connectives"):
            if key not in data:
                raise SpecError(f"missing field {key!r}")
        if data["format_version"] != FORMAT_VERSION:
            raise SpecError(f"unsupported format_version {data['format_version']!r}", "format_version")
        if not isinstance(data["name"], str) or not data["name"]:
            raise SpecError("must be a non-empty string", "name")
        if not isinstance(data["admissible"], list):
            raise SpecError("must be a list", "admissible")
        if not isinstance(data["connectives"], list):
            raise SpecError("must be a list", "connectives")
        return cls(data["name"], list(data["admissible"]), list(data["connectives"]), data["format_version"])

    @classmethod
    def from_json(cls, text: str) -> SpecDocument:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON ({exc.msg})", f"line {exc.lineno} column {exc.colno}") from None
        return cls.from_dict(data)


def save_spec(logic: LogicSpec) -> SpecDocument:
    return SpecDocument(
        name=logic.name,
        admissible=[a.label for a in logic.admissible],
        connectives=[
            {
                "token": c.token,
                "symbol": c.symbol,
                "arity": c.arity,
                "precedence": c.signature.precedence,
                "truth": render_condition(c.truth),
                "falsity": render_condition(c.falsity),
                "classical_counterpart": c.classical_counterpart,
            }
            for c in logic.connectives
        ],
    )


def _load_connective(entry: Any, where: str) -> ConnectiveDef:
    if not isinstance(entry, dict):
        raise SpecError("connective entry must be an object", where)
    for key in ("token", "symbol", "arity", "truth", "falsity"):
        if key not in entry:
            raise SpecError(f"missing field {key!r}", where)
    arity = entry["arity"]
    if arity not in (1, 2) or isinstance(arity, bool):
        raise SpecError("arity must be 1 or 2", f"{where}.arity")
    conds = {}
    for key in ("truth", "falsity"):
        text = entry[key]
        if not isinstance(text, str):
            raise SpecError("condition must be a string", f"{where}.{key}")
        try:
            conds[key] = parse_condition(text)
        except ConditionSyntaxError as exc:
            raise SpecError(exc.message, f"{where}.{key} offset {exc.offset}") from None
    precedence = entry.get("precedence")
    try:
        sig_prec = precedence if precedence is not None else (4 if arity == 1 else 1)
        sig = ConnectiveSignature(str(entry["symbol"]), str(entry["token"]), arity, int(sig_prec))
        return ConnectiveDef(sig, conds["truth"], conds["falsity"], entry.get("classical_counterpart"))
    except (TypeError, ValueError) as exc:
        raise SpecError(str(exc), where) from None


def load_spec(doc: SpecDocument | dict | str | Path, check_closure: bool = True) -> LogicSpec:
    """Validate a spec document (object, dict, JSON text or path) into a LogicSpec.

    With ``check_closure=False`` an unclosed admissible set is accepted, so
    the caller can inspect ``logic.closure`` itself; evaluation still refuses
    such a logic.
    """
    if isinstance(doc, Path):
        doc = SpecDocument.from_json(doc.read_text(encoding="utf-8"))
    elif isinstance(doc, str):
        doc = SpecDocument.from_json(doc)
    elif isinstance(doc, dict):
        doc = SpecDocument.from_dict(doc)
    admissible = []
    for i, text in enumerate(doc.admissible):
        try:
            admissible.append(Interpretation.parse(str(text)))
        except ValueError as exc:
            raise SpecError(str(exc), f"admissible[{i}]") from None
    if not admissible:
        raise SpecError("must list at least one interpretation", "admissible")
    conns = []
    seen_tokens: dict[str, int] = {}
    seen_symbols: dict[str, int] = {}
    for i, entry in enumerate(doc.connectives):
        where = f"connectives[{i}]"
        conn = _load_connective(entry, where)
        if conn.token in seen_tokens:
            raise DuplicateTokenError(
                f"token {conn.token!r} already used by connectives[{seen_tokens[conn.token]}]", f"{where}.token"
            )
        if conn.symbol in seen_symbols:
            raise SpecError(f"symbol {conn.symbol!r} already used", f"{where}.symbol")
        seen_tokens[conn.token] = i
        seen_symbols[conn.symbol] = i
        conns.append(conn)
    try:
        logic = LogicSpec(doc.name, tuple(conns), tuple(admissible))
    except ValueError as exc:
        raise SpecError(str(exc)) from None
    if check_closure and not logic.closure:
        raise SpecClosureError(logic.closure)
    return logic


def load_spec_file(path: str | Path, check_closure: bool = True) -> LogicSpec:
    return load_spec(Path(path), check_closure)


__all__ = [
    "PRESET_IDS",
    "get_preset",
    "SpecDocument",
    "SpecError",
    "DuplicateTokenError",
    "SpecClosureError",
    "UnknownPresetError",
    "save_spec",
    "load_spec",
    "load_spec_file",
]
