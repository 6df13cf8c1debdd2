"""Where contra-classicality comes from.

Each connective declares the classical connective it is meant to stand for.
Replacing every connective by the FDE conditions of its declared family and
keeping only the classical interpretations gives the *classical benchmark*
of a logic.  A contra-classical witness is an argument valid in the logic
but invalid in its benchmark.  The source classifier reads every condition
two-valuedly and reports which classical condition it coincides with.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import kernels
from .conditions import BooleanFunction, ConnectiveDef, FAMILIES, classical_profile, parse_condition
from .consequence import Argument, entails
from .formula import Apply, Atom, Formula
from .semantics import LogicSpec, atom_vectors
from .values import CLASSICAL

FAMILY_CONDITIONS: dict[str, tuple[int, str, str]] = {
    "identity": (1, "1 in A1", "0 in A1"),
    "negation": (1, "0 in A1", "1 in A1"),
    "conjunction": (2, "1 in A1 and 1 in A2", "0 in A1 or 0 in A2"),
    "disjunction": (2, "1 in A1 or 1 in A2", "0 in A1 and 0 in A2"),
    "implication": (2, "0 in A1 or 1 in A2", "1 in A1 and 0 in A2"),
    "biconditional": (
        2,
        "(0 in A1 or 1 in A2) and (0 in A2 or 1 in A1)",
        "(1 in A1 and 0 in A2) or (1 in A2 and 0 in A1)",
    ),
}

FAMILY_SYMBOLS = {
    "identity": "id",
    "negation": "¬",
    "conjunction": "∧",
    "disjunction": "∨",
    "implication": "→",
    "biconditional": "↔",
}

VARIABLE_NAMES = ("p", "q", "r", "s", "t", "u", "v", "w")


class CounterpartError(ValueError):
    pass


@dataclass(frozen=True)
class ClassicalCatalog:
    """Two-valued truth and falsity profiles of each classical connective family."""

    truth: dict[str, BooleanFunction]
    falsity: dict[str, BooleanFunction]

    def arity(self, family: str) -> int:
        return self.truth[family].arity

    def profile(self, family: str, polarity: str) -> BooleanFunction:
        return (self.truth if polarity == "truth" else self.falsity)[family]


@lru_cache(maxsize=1)
def classical_catalog() -> ClassicalCatalog:
    truth, falsity = {}, {}
    for fam in FAMILIES:
        arity, t, f = FAMILY_CONDITIONS[fam]
        truth[fam] = classical_profile(parse_condition(t), arity)
        falsity[fam] = classical_profile(parse_condition(f), arity)
    return ClassicalCatalog(truth, falsity)


def classical_benchmark(logic: LogicSpec) -> LogicSpec:
    conns = []
    for c in logic.connectives:
        try:
            fam = c.family()
        except ValueError as exc:
            raise CounterpartError(str(exc)) from None
        arity, t, f = FAMILY_CONDITIONS[fam]
        if arity != c.arity:
            raise CounterpartError(f"{c.symbol} has arity {c.arity} but its counterpart {fam} has arity {arity}")
        conns.append(ConnectiveDef(c.signature, parse_condition(t), parse_condition(f), fam))
    name = logic.name if logic.name.endswith("/classical") else f"{logic.name}/classical"
    return LogicSpec(name, tuple(conns), CLASSICAL, logic.macros)


def is_contra_classical_witness(arg: Argument, logic: LogicSpec) -> bool:
    if not entails(arg, logic):
        return False
    return not entails(arg, classical_benchmark(logic))


@dataclass(frozen=True)
class WitnessSearchBounds:
    max_vars: int = 2
    max_depth: int = 2
    max_premises: int = 2
    time_budget: float | None = 120.0

    def __post_init__(self):
        if self.max_vars < 1 or self.max_vars > len(VARIABLE_NAMES):
            raise ValueError(f"max_vars must be between 1 and {len(VARIABLE_NAMES)}")
        if self.max_depth < 0:
            raise ValueError("max_depth must be >= 0")
        if not 0 <= self.max_premises <= 2:
            raise ValueError("max_premises must be 0, 1 or 2")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")

    @classmethod
    def parse(cls, text: str) -> WitnessSearchBounds:
        """Read ``vars=V,depth=D,premises=P,budget=S`` (any subset, any order)."""
        keys = {"vars": "max_vars", "depth": "max_depth", "premises": "max_premises", "budget": "time_budget"}
        kwargs = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            key, sep, value = part.partition("=")
            if not sep or key.strip() not in keys:
                raise ValueError(f"bad bounds entry {part!r}")
            field_name = keys[key.strip()]
            kwargs[field_name] = float(value) if field_name == "time_budget" else int(value)
        return cls(**kwargs)

    def describe(self) -> str:
        return f"vars={self.max_vars}, depth={self.max_depth}, premises={self.max_premises}"


class SearchResult(list):
    """A list of findings that also records whether the search ran to completion."""

    def __init__(self, items: Iterable = (), truncated: bool = False, count: int | None = None, **stats):
        super().__init__(items)
        self.truncated = truncated
        self.count = len(self) if count is None else count
        self.stats = stats


@dataclass(frozen=True)
class PoolEntry:
    formula: Formula
    depth: int
    vector: bytes
    classical: bytes = b""


def _deadline(budget: float | None) -> float | None:
    return None if budget is None else time.monotonic() + budget


def formula_pool(
    logic: LogicSpec,
    names: tuple[str, ...],
    max_depth: int,
    benchmark: LogicSpec | None = None,
    deadline: float | None = None,
) -> tuple[list[PoolEntry], bool]:
    """Formulas up to ``max_depth``, keeping the first of each value signature.

    The signature is the value vector over all valuations of ``names`` in
    ``logic``, joined with the vector over classical valuations in
    ``benchmark`` when one is given.  Formulas are generated depth by depth;
    within a depth, unary connectives come first, each connective in
    declaration order, operands in pool order.
    """
    lvecs = atom_vectors(names, logic.admissible)
    cvecs = atom_vectors(names, CLASSICAL) if benchmark is not None else {}
    ltab = {c.symbol: c.table for c in logic.connectives}
    ctab = {c.symbol: c.table for c in benchmark.connectives} if benchmark is not None else {}
    unary = [c for c in logic.connectives if c.arity == 1]
    binary = [c for c in logic.connectives if c.arity == 2]
    map1, map2 = kernels.map_unary, kernels.map_binary

    pool: list[PoolEntry] = []
    seen: set[bytes] = set()

    def add(f: Formula, d: int, lv: bytes, cv: bytes) -> None:
        key = lv + cv
        if key not in seen:
            seen.add(key)
            pool.append(PoolEntry(f, d, lv, cv))

    for n in names:
        add(Atom(n), 0, lvecs[n], cvecs.get(n, b""))
    start_prev = 0
    for d in range(1, max_depth + 1):
        end_prev = len(pool)
        previous = pool[start_prev:end_prev]
        older = pool[:end_prev]
        for c in unary:
            lt, ct = ltab[c.symbol], ctab.get(c.symbol)
            for e in previous:
                cv = map1(ct, e.classical) if ct is not None else b""
                add(Apply(c.symbol, (e.formula,)), d, map1(lt, e.vector), cv)
        for c in binary:
            lt, ct = ltab[c.symbol], ctab.get(c.symbol)
            for x in older:
                if deadline is not None and time.monotonic() > deadline:
                    return pool, False
                fresh_x = x.depth == d - 1
                for y in older if fresh_x else previous:
                    cv = map2(ct, x.classical, y.classical) if ct is not None else b""
                    add(Apply(c.symbol, (x.formula, y.formula)), d, map2(lt, x.vector, y.vector), cv)
        start_prev = end_prev
        if len(pool) == end_prev:
            break  # closed under every connective: deeper levels add nothing
    return pool, True


def find_contra_witnesses(
    logic: LogicSpec, bounds: WitnessSearchBounds = WitnessSearchBounds(), limit: int | None = None
) -> SearchResult:
    """Arguments valid in ``logic`` but invalid in its classical benchmark.

    Pool formulas with equal truth masks in both logics yield the same
    verdicts, so the scan runs over one representative per mask pair and
    over premise sets with distinct joint masks.  ``count`` is the number of
    such witnesses; at most ``limit`` of them are materialized.
    """
    logic.require_closure()
    benchmark = classical_benchmark(logic)
    deadline = _deadline(bounds.time_budget)
    names = VARIABLE_NAMES[: bounds.max_vars]
    pool, complete = formula_pool(logic, names, bounds.max_depth, benchmark, deadline)

    reps: list[Formula] = []
    lmasks: list[int] = []
    cmasks: list[int] = []
    classes: set[tuple[int, int]] = set()
    for e in pool:
        key = (kernels.truth_mask(e.vector), kernels.truth_mask(e.classical))
        if key not in classes:
            classes.add(key)
            reps.append(e.formula)
            lmasks.append(key[0])
            cmasks.append(key[1])

    lfull = (1 << len(pool[0].vector)) - 1
    cfull = (1 << len(pool[0].classical)) - 1
    hits, count, scanned = kernels.witness_scan(
        lmasks, cmasks, lfull, cfull, bounds.max_premises, limit, deadline
    )
    witnesses = [Argument(tuple(reps[i] for i in prem), reps[k]) for prem, k in hits]
    return SearchResult(
        witnesses,
        truncated=not (complete and scanned),
        count=count,
        pool_size=len(pool),
        classes=len(reps),
        bounds=bounds,
    )


def negation_inconsistency_witnesses(
    logic: LogicSpec, negation: str, bounds: WitnessSearchBounds = WitnessSearchBounds()
) -> SearchResult:
    """Formulas ``A`` within bounds such that both ``A`` and its negation are logical truths."""
    logic.require_closure()
    neg = logic.connective(negation)
    if neg.arity != 1:
        raise ValueError(f"{neg.symbol} is not unary")
    names = VARIABLE_NAMES[: bounds.max_vars]
    pool, complete = formula_pool(logic, names, bounds.max_depth, None, _deadline(bounds.time_budget))
    found = []
    for e in pool:
        if all(code & 1 for code in e.vector):
            if all(code & 1 for code in kernels.map_unary(neg.table, e.vector)):
                found.append(e.formula)
    return SearchResult(found, truncated=not complete, pool_size=len(pool))


@dataclass(frozen=True)
class ConditionSource:
    symbol: str
    token: str
    polarity: str
    own_family: str | None
    family: str | None
    profile: str | None
    borrowed: bool

    @property
    def matched(self) -> bool:
        return self.family is not None

    def compact(self) -> str:
        head = f"{self.polarity}({self.token})"
        if not self.matched:
            return f"{head} = no classical match"
        tail = " [borrowed]" if self.borrowed else ""
        return f"{head} = classical {self.profile}({FAMILY_SYMBOLS[self.family]}){tail}"

    def sentence(self) -> str:
        if not self.matched:
            return f"the {self.polarity} condition of {self.symbol} matches no classical condition"
        return (
            f"the {self.polarity} condition of {self.symbol} is classically that of "
            f"{self.family}'s {self.profile} condition"
        )


@dataclass(frozen=True)
class SourceReport:
    logic: str
    entries: tuple[ConditionSource, ...]

    @property
    def borrowed(self) -> bool:
        return any(e.borrowed for e in self.entries)

    def entry(self, name: str, polarity: str) -> ConditionSource:
        for e in self.entries:
            if (e.symbol == name or e.token == name) and e.polarity == polarity:
                return e
        raise KeyError((name, polarity))

    def lines(self) -> list[str]:
        return [e.compact() for e in self.entries]

    def bullets(self) -> list[str]:
        return [f"- {e.sentence()}" for e in self.entries]


def _match(profile: BooleanFunction, polarity: str, own: str | None, catalog: ClassicalCatalog):
    other = "falsity" if polarity == "truth" else "truth"
    candidates = [f for f in FAMILIES if catalog.arity(f) == profile.arity]
    ordered = [(own, polarity)] if own in candidates else []
    ordered += [(f, polarity) for f in candidates]
    ordered += [(own, other)] if own in candidates else []
    ordered += [(f, other) for f in candidates]
    for fam, pol in ordered:
        if catalog.profile(fam, pol) == profile:
            return fam, pol
    return None, None


def source_classification(logic: LogicSpec) -> SourceReport:
    catalog = classical_catalog()
    entries = []
    for c in logic.connectives:
        try:
            own = c.family()
        except ValueError:
            own = None
        for polarity, cond in (("truth", c.truth), ("falsity", c.falsity)):
            fam, prof = _match(classical_profile(cond, c.arity), polarity, own, catalog)
            borrowed = fam is not None and own is not None and (fam != own or prof != polarity)
            entries.append(ConditionSource(c.symbol, c.token, polarity, own, fam, prof, borrowed))
    return SourceReport(logic.name, tuple(entries))
