"""Evaluation conditions over Dunn atoms.

A condition such as ``0 in A1 or 1 notin A2`` states when a truth value
belongs to the interpretation of a compound formula, in terms of the
interpretations of its arguments ``A1``, ``A2``.  Meta-level connectives are
read classically.

Condition DSL::

    cond   := iff
    iff    := impl ("iff" impl)*
    impl   := or ("implies" impl)?
    or     := and ("or" and)*
    and    := unary ("and" unary)*
    unary  := "not" unary | "(" cond ")" | leaf
    leaf   := ("1" | "0") ("in" | "notin" | "not in" | "∈" | "∉") "A" INDEX

Keywords are case-insensitive; argument indices start at 1.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Sequence, Union

from .formula import ConnectiveSignature
from .values import CANONICAL_ORDER, Interpretation, TruthValue


@dataclass(frozen=True)
class DunnAtom:
    value: int
    member: bool
    arg: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError("Dunn atom value must be 0 or 1")
        if self.arg < 1:
            raise ValueError("argument indices start at 1")

    def __str__(self) -> str:
        return f"{self.value} {'in' if self.member else 'notin'} A{self.arg}"


@dataclass(frozen=True)
class MetaOp:
    op: str
    args: tuple[ConditionExpr, ...]

    def __post_init__(self):
        want = 1 if self.op == "not" else 2
        if self.op not in _PREC or len(self.args) != want:
            raise ValueError(f"bad condition node {self.op!r}/{len(self.args)}")

    def __str__(self) -> str:
        return render_condition(self)


ConditionExpr = Union[DunnAtom, MetaOp]


def Not(a: ConditionExpr) -> MetaOp:
    return MetaOp("not", (a,))


def And(a: ConditionExpr, b: ConditionExpr) -> MetaOp:
    return MetaOp("and", (a, b))


def Or(a: ConditionExpr, b: ConditionExpr) -> MetaOp:
    return MetaOp("or", (a, b))


def Implies(a: ConditionExpr, b: ConditionExpr) -> MetaOp:
    return MetaOp("implies", (a, b))


def Iff(a: ConditionExpr, b: ConditionExpr) -> MetaOp:
    return MetaOp("iff", (a, b))


_PREC = {"iff": 1, "implies": 2, "or": 3, "and": 4, "not": 5}


class ConditionSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


_TOKEN_RE = re.compile(r"\s*(?:(?P<lp>\()|(?P<rp>\))|(?P<val>[01])(?![0-9])|(?P<mem>∈|∉)|(?P<word>[A-Za-z]+[0-9]*))")


def _tokenize_condition(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            if rest.strip():
                off = pos + len(rest) - len(rest.lstrip())
                raise ConditionSyntaxError(f"unexpected character {text[off]!r}", off)
            break
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _CondParser:
    def __init__(self, text: str):
        self.toks = _tokenize_condition(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def keyword(self, word: str) -> bool:
        kind, text, _ = self.peek()
        if kind == "word" and text.lower() == word:
            self.i += 1
            return True
        return False

    def parse(self) -> ConditionExpr:
        c = self.iff()
        kind, text, off = self.peek()
        if kind != "end":
            raise ConditionSyntaxError(f"unexpected {text!r}", off)
        return c

    def iff(self):
        left = self.impl()
        while self.keyword("iff"):
            left = Iff(left, self.impl())
        return left

    def impl(self):
        left = self.disj()
        if self.keyword("implies"):
            return Implies(left, self.impl())
        return left

    def disj(self):
        left = self.conj()
        while self.keyword("or"):
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.keyword("and"):
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.keyword("not"):
            return Not(self.unary())
        kind, text, off = self.next()
        if kind == "lp":
            inner = self.iff()
            k2, t2, o2 = self.next()
            if k2 != "rp":
                raise ConditionSyntaxError("expected ')'", o2)
            return inner
        if kind == "val":
            return self.leaf(int(text))
        if kind == "end":
            raise ConditionSyntaxError("unexpected end of condition", off)
        raise ConditionSyntaxError(f"unexpected {text!r}", off)

    def leaf(self, value: int) -> DunnAtom:
        kind, text, off = self.next()
        if kind == "mem":
            member = text == "∈"
        elif kind == "word" and text.lower() == "in":
            member = True
        elif kind == "word" and text.lower() == "notin":
            member = False
        elif kind == "word" and text.lower() == "not" and self.keyword("in"):
            member = False
        else:
            raise ConditionSyntaxError("expected 'in' or 'notin'", off)
        kind, text, off = self.next()
        m = re.fullmatch(r"[Aa]([1-9][0-9]*)", text) if kind == "word" else None
        if m is None:
            raise ConditionSyntaxError("expected an argument reference like A1", off)
        return DunnAtom(value, member, int(m.group(1)))


def parse_condition(text: str) -> ConditionExpr:
    return _CondParser(text).parse()


def render_condition(c: ConditionExpr) -> str:
    def go(e: ConditionExpr) -> tuple[str, int]:
        if isinstance(e, DunnAtom):
            return str(e), 6
        prec = _PREC[e.op]
        if e.op == "not":
            text, p = go(e.args[0])
            return f"not {text if p >= prec else f'({text})'}", prec
        (lt, lp), (rt, rp) = go(e.args[0]), go(e.args[1])
        if e.op == "implies":
            left_ok, right_ok = lp > prec, rp >= prec
        else:
            left_ok, right_ok = lp >= prec, rp > prec
        lt = lt if left_ok else f"({lt})"
        rt = rt if right_ok else f"({rt})"
        return f"{lt} {e.op} {rt}", prec

    return go(c)[0]


def condition_arity(c: ConditionExpr) -> int:
    """Largest argument index mentioned (0 for none)."""
    return max((leaf.arg for leaf in leaves(c)), default=0)


def leaves(c: ConditionExpr) -> list[DunnAtom]:
    if isinstance(c, DunnAtom):
        return [c]
    out: list[DunnAtom] = []
    for a in c.args:
        out.extend(leaves(a))
    return out


def eval_condition(c: ConditionExpr, args: Sequence[Interpretation]) -> bool:
    if isinstance(c, DunnAtom):
        if c.arg > len(args):
            raise IndexError(f"condition refers to A{c.arg} but only {len(args)} argument(s) given")
        return Interpretation(args[c.arg - 1]).contains(c.value) == c.member
    op = c.op
    if op == "not":
        return not eval_condition(c.args[0], args)
    a = eval_condition(c.args[0], args)
    b = eval_condition(c.args[1], args)
    if op == "and":
        return a and b
    if op == "or":
        return a or b
    if op == "implies":
        return (not a) or b
    return a == b


def boolean_counterpart(a: DunnAtom) -> DunnAtom:
    """Swap ``1 in`` with ``0 notin`` and ``0 in`` with ``1 notin``."""
    return DunnAtom(1 - a.value, not a.member, a.arg)


def _skeleton(c: ConditionExpr):
    if isinstance(c, DunnAtom):
        return None
    return (c.op, tuple(_skeleton(a) for a in c.args))


def _changed_leaves(a: ConditionExpr, b: ConditionExpr) -> list[tuple[DunnAtom, DunnAtom]] | None:
    if _skeleton(a) != _skeleton(b):
        return None
    return [(x, y) for x, y in zip(leaves(a), leaves(b)) if x != y]


def is_tweaking(source: ConditionExpr, target: ConditionExpr) -> bool:
    changed = _changed_leaves(source, target)
    if not changed:
        return False
    return all(y == boolean_counterpart(x) for x, y in changed)


class ChangeKind(Enum):
    IDENTICAL = "Identical"
    VALUE = "C1-ValueChange"
    MEMBERSHIP = "C2-MembershipChange"
    TWEAKING = "Tweaking"
    RELATION = "C3-RelationChange"
    EXTRA = "C4-ExtraCondition"
    MIXED = "C5-Mixed"

    def __str__(self) -> str:
        return self.value


def classify_change(source: ConditionExpr, target: ConditionExpr) -> ChangeKind:
    """Structural classification of how ``target`` differs from ``source``.

    This is a best-effort reading of raw trees: no rewriting up to logical
    equivalence is attempted, so the residual class is ``C5-Mixed``.
    """
    if source == target:
        return ChangeKind.IDENTICAL
    changed = _changed_leaves(source, target)
    if changed is not None:
        if all(y == boolean_counterpart(x) for x, y in changed):
            return ChangeKind.TWEAKING
        if all(x.arg == y.arg and x.member == y.member for x, y in changed):
            return ChangeKind.VALUE
        if all(x.arg == y.arg and x.value == y.value for x, y in changed):
            return ChangeKind.MEMBERSHIP
        return ChangeKind.MIXED
    if Counter(leaves(source)) == Counter(leaves(target)):
        return ChangeKind.RELATION
    if isinstance(target, MetaOp) and target.op == "and" and source in target.args:
        return ChangeKind.EXTRA
    return ChangeKind.MIXED


@dataclass(frozen=True)
class BooleanFunction:
    """A two-valued function as its outputs on ``{True, False}**arity``.

    Points are listed lexicographically with True first, so for arity 2 the
    order is TT, TF, FT, FF.
    """

    arity: int
    bits: tuple[bool, ...]

    def __post_init__(self):
        if len(self.bits) != 2**self.arity:
            raise ValueError("wrong number of entries for arity")

    @classmethod
    def from_callable(cls, arity: int, fn) -> BooleanFunction:
        return cls(arity, tuple(bool(fn(*pt)) for pt in classical_points(arity)))

    def __call__(self, *args: bool) -> bool:
        idx = 0
        for a in args:
            idx = idx * 2 + (0 if a else 1)
        return self.bits[idx]

    def complement(self) -> BooleanFunction:
        return BooleanFunction(self.arity, tuple(not b for b in self.bits))

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


def classical_points(arity: int):
    return itertools.product((True, False), repeat=arity)


def classical_profile(c: ConditionExpr, arity: int | None = None) -> BooleanFunction:
    """Two-valued reading of a condition: a true argument is {1}, a false one {0}."""
    if arity is None:
        arity = condition_arity(c)
    if condition_arity(c) > arity:
        raise IndexError("condition mentions an argument beyond the given arity")
    bits = []
    for pt in classical_points(arity):
        args = [Interpretation.T if x else Interpretation.F for x in pt]
        bits.append(eval_condition(c, args))
    return BooleanFunction(arity, tuple(bits))


FAMILIES = ("identity", "negation", "conjunction", "disjunction", "implication", "biconditional")

_SELF_FAMILY = {
    "∼": "negation",
    "~": "negation",
    "¬": "negation",
    "∧": "conjunction",
    "∨": "disjunction",
    "→": "implication",
    "⊃": "implication",
    "↔": "biconditional",
    "≡": "biconditional",
}


@dataclass(frozen=True)
class ConnectiveDef:
    signature: ConnectiveSignature
    truth: ConditionExpr
    falsity: ConditionExpr
    classical_counterpart: str | None = None

    def __post_init__(self):
        for name, cond in (("truth", self.truth), ("falsity", self.falsity)):
            if condition_arity(cond) > self.signature.arity:
                raise ValueError(
                    f"{self.signature.symbol}: {name} condition refers to A{condition_arity(cond)} "
                    f"but the connective has arity {self.signature.arity}"
                )
        cp = self.classical_counterpart
        if cp is not None and cp != "self" and cp not in FAMILIES:
            raise ValueError(f"{self.signature.symbol}: unknown classical counterpart {cp!r}")

    @property
    def symbol(self) -> str:
        return self.signature.symbol

    @property
    def token(self) -> str:
        return self.signature.token

    @property
    def arity(self) -> int:
        return self.signature.arity

    def family(self) -> str:
        """The declared classical counterpart, with ``self`` resolved from the symbol."""
        cp = self.classical_counterpart
        if cp is None:
            raise ValueError(f"{self.symbol}: no classical counterpart declared")
        if cp != "self":
            return cp
        fam = _SELF_FAMILY.get(self.symbol[:1])
        if fam is None:
            raise ValueError(f"{self.symbol}: cannot resolve 'self' counterpart from the symbol")
        return fam

    def apply(self, *args: Interpretation) -> Interpretation:
        return Interpretation.from_flags(eval_condition(self.truth, args), eval_condition(self.falsity, args))

    @cached_property
    def table(self) -> bytes:
        """Result codes indexed by ``code(A1)`` or ``4*code(A1) + code(A2)``."""
        out = bytearray(4**self.arity)
        for combo in itertools.product(CANONICAL_ORDER, repeat=self.arity):
            idx = 0
            for a in combo:
                idx = idx * 4 + int(a)
            out[idx] = self.apply(*combo)
        return bytes(out)


def connective(
    symbol: str,
    token: str,
    arity: int,
    truth: str | ConditionExpr,
    falsity: str | ConditionExpr,
    counterpart: str | None = "self",
    precedence: int | None = None,
) -> ConnectiveDef:
    """Build a connective from DSL text, with the default precedence for its family."""
    if isinstance(truth, str):
        truth = parse_condition(truth)
    if isinstance(falsity, str):
        falsity = parse_condition(falsity)
    if precedence is None:
        precedence = default_precedence(symbol, arity)
    return ConnectiveDef(ConnectiveSignature(symbol, token, arity, precedence), truth, falsity, counterpart)


def default_precedence(symbol: str, arity: int) -> int:
    if arity == 1:
        return 4
    return {"∧": 3, "∨": 2, "→": 1, "⊃": 1}.get(symbol[:1], 1)


__all__ = [
    "TruthValue",
    "DunnAtom",
    "MetaOp",
    "ConditionExpr",
    "ConditionSyntaxError",
    "ChangeKind",
    "BooleanFunction",
    "ConnectiveDef",
    "FAMILIES",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "parse_condition",
    "render_condition",
    "condition_arity",
    "leaves",
    "eval_condition",
    "boolean_counterpart",
    "is_tweaking",
    "classify_change",
    "classical_profile",
    "classical_points",
    "connective",
    "default_precedence",
]
