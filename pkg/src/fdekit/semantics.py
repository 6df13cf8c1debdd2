"""Valuations, logic specifications, recursive evaluation and truth tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from . import kernels
from .conditions import ConnectiveDef
from .formula import Apply, Atom, ConnectiveSignature, Formula, Macro, parse, render, variables
from .values import CANONICAL_ORDER, Interpretation, canonical

Valuation = Mapping[str, Interpretation]


class SemanticsError(Exception):
    pass


class UnknownConnectiveError(SemanticsError, KeyError):
    def __str__(self) -> str:
        return self.args[0] if self.args else "unknown connective"


class UnboundVariableError(SemanticsError, KeyError):
    def __str__(self) -> str:
        return self.args[0] if self.args else "unbound variable"


class ClosureError(SemanticsError):
    def __init__(self, report: ClosureReport):
        super().__init__(f"admissible set not closed: {report}")
        self.report = report


DEFAULT_MACROS = (
    Macro("↔", "<->", "→", "∧"),
    Macro("≡", "<=>", "⊃", "∧"),
    Macro("↔W", "<->w", "→W", "∧"),
)


@dataclass(frozen=True)
class ClosureReport:
    ok: bool
    symbol: str | None = None
    args: tuple[Interpretation, ...] = ()
    result: Interpretation | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        args = ", ".join(a.label for a in self.args)
        return f"violation({self.symbol}, [{args}], {self.result.label})"


@dataclass(frozen=True)
class LogicSpec:
    name: str
    connectives: tuple[ConnectiveDef, ...]
    admissible: tuple[Interpretation, ...] = CANONICAL_ORDER
    macros: tuple[Macro, ...] | None = None
    description: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "connectives", tuple(self.connectives))
        adm = canonical(Interpretation(a) for a in self.admissible)
        if not adm:
            raise ValueError(f"{self.name}: admissible set must be non-empty")
        object.__setattr__(self, "admissible", adm)
        symbols = [c.symbol for c in self.connectives]
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"{self.name}: duplicate connective symbol")
        tokens = [c.token for c in self.connectives]
        dup = {t for t in tokens if tokens.count(t) > 1}
        if dup:
            raise ValueError(f"{self.name}: duplicate token {sorted(dup)[0]!r}")
        if self.macros is None:
            have = set(symbols)
            auto = tuple(
                m
                for m in DEFAULT_MACROS
                if {m.conditional, m.conjunction} <= have and m.token not in tokens and m.symbol not in have
            )
            object.__setattr__(self, "macros", auto)
        else:
            object.__setattr__(self, "macros", tuple(self.macros))
            for m in self.macros:
                if m.token in tokens:
                    raise ValueError(f"{self.name}: duplicate token {m.token!r}")
                if not {m.conditional, m.conjunction} <= set(symbols):
                    raise ValueError(f"{self.name}: macro {m.symbol} refers to a missing connective")

    @cached_property
    def by_symbol(self) -> dict[str, ConnectiveDef]:
        return {c.symbol: c for c in self.connectives}

    @property
    def signatures(self) -> list[ConnectiveSignature]:
        return [c.signature for c in self.connectives]

    def connective(self, name: str) -> ConnectiveDef:
        """Look a connective up by display symbol or by source token."""
        if name in self.by_symbol:
            return self.by_symbol[name]
        for c in self.connectives:
            if c.token == name:
                return c
        raise UnknownConnectiveError(f"{self.name}: unknown connective {name!r}")

    def parse(self, text: str) -> Formula:
        return parse(text, self.signatures, self.macros)

    def render(self, f: Formula) -> str:
        return render(f, self.signatures)

    def restrict(self, admissible: Iterable[Interpretation], name: str | None = None) -> LogicSpec:
        return replace(self, name=name or self.name, admissible=tuple(admissible))

    def extend(self, connectives: Iterable[ConnectiveDef], name: str | None = None) -> LogicSpec:
        """A new spec with extra connectives; connectives already present by symbol are skipped."""
        extra = [c for c in connectives if c.symbol not in self.by_symbol]
        return replace(self, name=name or self.name, connectives=self.connectives + tuple(extra), macros=None)

    @cached_property
    def closure(self) -> ClosureReport:
        return closure_check(self)

    def require_closure(self) -> None:
        if not self.closure:
            raise ClosureError(self.closure)


def closure_check(logic: LogicSpec) -> ClosureReport:
    allowed = set(logic.admissible)
    for conn in logic.connectives:
        for args in itertools.product(logic.admissible, repeat=conn.arity):
            result = conn.apply(*args)
            if result not in allowed:
                return ClosureReport(False, conn.symbol, tuple(args), result)
    return ClosureReport(True)


def _check_valuation(v: Valuation, names: Iterable[str], logic: LogicSpec) -> None:
    allowed = set(logic.admissible)
    for name in names:
        if name not in v:
            raise UnboundVariableError(f"variable {name!r} has no value")
        if Interpretation(v[name]) not in allowed:
            raise SemanticsError(f"{name}={Interpretation(v[name]).label} is not admissible in {logic.name}")


def _eval(f: Formula, v: Valuation, tables: Mapping[str, bytes]) -> int:
    if isinstance(f, Atom):
        return v[f.name]
    try:
        table = tables[f.symbol]
    except KeyError:
        raise UnknownConnectiveError(f"unknown connective {f.symbol!r}") from None
    if len(f.args) == 1:
        return table[_eval(f.args[0], v, tables)]
    return table[4 * _eval(f.args[0], v, tables) + _eval(f.args[1], v, tables)]


def tables_of(logic: LogicSpec) -> dict[str, bytes]:
    return {c.symbol: c.table for c in logic.connectives}


def evaluate(f: Formula, v: Valuation, logic: LogicSpec) -> Interpretation:
    logic.require_closure()
    _check_valuation(v, variables(f), logic)
    return Interpretation(_eval(f, v, tables_of(logic)))


def evaluate_unchecked(f: Formula, v: Valuation, tables: Mapping[str, bytes]) -> Interpretation:
    """Evaluation without closure or admissibility checks, for inner loops."""
    return Interpretation(_eval(f, v, tables))


def enumerate_valuations(names: Sequence[str], admissible: Sequence[Interpretation]) -> Iterator[dict[str, Interpretation]]:
    """All valuations over ``names`` in canonical order, first variable slowest."""
    names = sorted(set(names))
    order = canonical(admissible)
    for combo in itertools.product(order, repeat=len(names)):
        yield dict(zip(names, combo))


def value_vector(f: Formula, names: Sequence[str], logic: LogicSpec) -> bytes:
    """Interpretation codes of ``f`` over every valuation of ``names`` in canonical order."""
    names = sorted(set(names))
    tables = tables_of(logic)
    atoms = atom_vectors(names, logic.admissible)

    def go(g: Formula) -> bytes:
        if isinstance(g, Atom):
            try:
                return atoms[g.name]
            except KeyError:
                raise UnboundVariableError(f"variable {g.name!r} has no value") from None
        table = tables.get(g.symbol)
        if table is None:
            raise UnknownConnectiveError(f"unknown connective {g.symbol!r}")
        if len(g.args) == 1:
            return kernels.map_unary(table, go(g.args[0]))
        return kernels.map_binary(table, go(g.args[0]), go(g.args[1]))

    return go(f)


def atom_vectors(names: Sequence[str], admissible: Sequence[Interpretation]) -> dict[str, bytes]:
    order = canonical(admissible)
    rows = list(itertools.product(order, repeat=len(names)))
    return {name: bytes(row[i] for row in rows) for i, name in enumerate(names)}


@dataclass(frozen=True)
class TruthTable:
    symbol: str
    arity: int
    axis: tuple[Interpretation, ...]
    cells: Mapping[tuple[Interpretation, ...], Interpretation]

    def __getitem__(self, args) -> Interpretation:
        if isinstance(args, Interpretation):
            args = (args,)
        return self.cells[tuple(args)]

    def rows(self) -> list[list[Interpretation]]:
        if self.arity == 1:
            return [[self.cells[(a,)]] for a in self.axis]
        return [[self.cells[(a, b)] for b in self.axis] for a in self.axis]


def truth_table(name: str, logic: LogicSpec) -> TruthTable:
    conn = logic.connective(name)
    cells = {}
    for args in itertools.product(logic.admissible, repeat=conn.arity):
        f = Apply(conn.symbol, tuple(Atom(f"a{i}") for i in range(conn.arity)))
        v = {f"a{i}": a for i, a in enumerate(args)}
        cells[tuple(args)] = Interpretation(_eval(f, v, {conn.symbol: conn.table}))
    return TruthTable(conn.symbol, conn.arity, logic.admissible, cells)


def render_table(table: TruthTable) -> str:
    """Plain-text table; unary tables show the result column before the argument column."""
    if table.arity == 1:
        head = [f"{table.symbol}A", "A"]
        body = [[table.cells[(a,)].label, a.label] for a in table.axis]
    else:
        head = [f"A {table.symbol} B"] + [b.label for b in table.axis]
        body = [[a.label] + [table.cells[(a, b)].label for b in table.axis] for a in table.axis]
    widths = [max(len(r[i]) for r in [head] + body) for i in range(len(head))]

    def line(cells):
        first = cells[0].ljust(widths[0])
        rest = "  ".join(c.ljust(w) for c, w in zip(cells[1:], widths[1:]))
        return f"{first} | {rest}".rstrip()

    rule = "-" * (widths[0] + 1) + "+" + "-" * (sum(widths[1:]) + 2 * (len(widths) - 2) + 1)
    return "\n".join([line(head), rule] + [line(r) for r in body])


def format_valuation(v: Valuation) -> str:
    return ", ".join(f"{k}={Interpretation(v[k]).label}" for k in sorted(v))
