"""Formula ASTs, a token-configurable parser, rendering and substitution.

Grammar (connective tokens come from the active logic)::

    formula := atom | "(" formula ")" | UNOP formula | formula BINOP formula
    atom    := [a-z][a-zA-Z0-9_]*

Unary operators bind tightest.  Among binary operators a higher precedence
binds tighter, and operators of equal precedence associate to the left.
Biconditional-style abbreviations are handled by :class:`Macro`, which the
parser expands in place, so they never appear in an AST.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")
_IDENT_CHAR = re.compile(r"[a-zA-Z0-9_]")


@dataclass(frozen=True)
class ConnectiveSignature:
    symbol: str
    token: str
    arity: int
    precedence: int = 0

    def __post_init__(self):
        if self.arity not in (1, 2):
            raise ValueError(f"connective {self.symbol!r}: arity must be 1 or 2")
        if not self.token or any(c.isspace() or c in "()" for c in self.token):
            raise ValueError(f"connective {self.symbol!r}: bad token {self.token!r}")
        if not self.symbol:
            raise ValueError("connective symbol must be non-empty")

    @property
    def fixity(self) -> str:
        return "prefix" if self.arity == 1 else "infix"


@dataclass(frozen=True)
class Macro:
    """A binary abbreviation ``A op B := (A cond B) conj (B cond A)``."""

    symbol: str
    token: str
    conditional: str
    conjunction: str
    precedence: int = 0

    def expand(self, left: Formula, right: Formula) -> Formula:
        return Apply(
            self.conjunction,
            (Apply(self.conditional, (left, right)), Apply(self.conditional, (right, left))),
        )


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not ATOM_RE.fullmatch(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Apply:
    symbol: str
    args: tuple[Formula, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) not in (1, 2):
            raise ValueError(f"{self.symbol}: connectives take one or two arguments")

    def __str__(self) -> str:
        if len(self.args) == 1:
            inner = str(self.args[0])
            return f"{self.symbol}{inner}" if isinstance(self.args[0], Atom) else f"{self.symbol}({inner})"
        parts = [str(a) if isinstance(a, Atom) else f"({a})" for a in self.args]
        return f"{parts[0]} {self.symbol} {parts[1]}"


Formula = Union[Atom, Apply]


class FormulaSyntaxError(ValueError):
    kind = "syntax"

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class LexicalError(FormulaSyntaxError):
    kind = "lexical"


class ShapeError(FormulaSyntaxError):
    kind = "shape"


class ParenthesisError(FormulaSyntaxError):
    kind = "parenthesis"


# token kinds
_ATOM, _UNOP, _BINOP, _MACRO, _LPAREN, _RPAREN, _END = range(7)


@dataclass(frozen=True)
class _Tok:
    kind: int
    text: str
    offset: int
    target: object = None


class _Lexicon:
    def __init__(self, signatures: Iterable[ConnectiveSignature], macros: Iterable[Macro]):
        self.by_token: dict[str, tuple[int, object]] = {}
        for sig in signatures:
            self._add(sig.token, _UNOP if sig.arity == 1 else _BINOP, sig)
        for mac in macros:
            self._add(mac.token, _MACRO, mac)
        # longest first so that "->w" wins over "->"
        self.tokens = sorted(self.by_token, key=len, reverse=True)

    def _add(self, token: str, kind: int, target: object) -> None:
        if token in self.by_token:
            raise ValueError(f"duplicate connective token {token!r}")
        self.by_token[token] = (kind, target)

    def tokenize(self, text: str) -> list[_Tok]:
        out: list[_Tok] = []
        i, n = 0, len(text)
        while i < n:
            c = text[i]
            if c.isspace():
                i += 1
                continue
            if c == "(":
                out.append(_Tok(_LPAREN, c, i))
                i += 1
                continue
            if c == ")":
                out.append(_Tok(_RPAREN, c, i))
                i += 1
                continue
            tok = self._match_operator(text, i)
            if tok is not None:
                kind, target = self.by_token[tok]
                out.append(_Tok(kind, tok, i, target))
                i += len(tok)
                continue
            m = ATOM_RE.match(text, i)
            if m:
                out.append(_Tok(_ATOM, m.group(), i))
                i = m.end()
                continue
            raise LexicalError(f"unknown token starting with {c!r}", i)
        out.append(_Tok(_END, "", n))
        return out

    def _match_operator(self, text: str, i: int) -> str | None:
        for tok in self.tokens:
            if not text.startswith(tok, i):
                continue
            end = i + len(tok)
            # a token ending in a letter or digit must not run into an identifier
            if _IDENT_CHAR.match(tok[-1]) and end < len(text) and _IDENT_CHAR.match(text[end]):
                continue
            return tok
        return None


class _Parser:
    def __init__(self, tokens: list[_Tok]):
        self.toks = tokens
        self.pos = 0

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def advance(self) -> _Tok:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Formula:
        f = self.expr(-(10**9))
        tok = self.peek()
        if tok.kind == _RPAREN:
            raise ParenthesisError("unmatched ')'", tok.offset)
        if tok.kind != _END:
            raise ShapeError(f"unexpected {tok.text!r}", tok.offset)
        return f

    def expr(self, min_prec: int) -> Formula:
        left = self.prefix()
        while True:
            tok = self.peek()
            if tok.kind not in (_BINOP, _MACRO) or tok.target.precedence < min_prec:
                return left
            self.advance()
            right = self.expr(tok.target.precedence + 1)
            if tok.kind == _MACRO:
                left = tok.target.expand(left, right)
            else:
                left = Apply(tok.target.symbol, (left, right))

    def prefix(self) -> Formula:
        tok = self.advance()
        if tok.kind == _ATOM:
            return Atom(tok.text)
        if tok.kind == _UNOP:
            return Apply(tok.target.symbol, (self.prefix(),))
        if tok.kind == _LPAREN:
            inner = self.expr(-(10**9))
            close = self.advance()
            if close.kind != _RPAREN:
                if close.kind == _END:
                    raise ParenthesisError("unmatched '('", tok.offset)
                raise ShapeError(f"unexpected {close.text!r}", close.offset)
            return inner
        if tok.kind == _RPAREN:
            raise ParenthesisError("unexpected ')'", tok.offset)
        if tok.kind == _END:
            raise ShapeError("unexpected end of input", tok.offset)
        raise ShapeError(f"operator {tok.text!r} is missing its left operand", tok.offset)


def parse(text: str, signatures: Iterable[ConnectiveSignature], macros: Iterable[Macro] = ()) -> Formula:
    if not text.strip():
        raise ShapeError("empty formula", 0)
    lexicon = _Lexicon(signatures, macros)
    return _Parser(lexicon.tokenize(text)).parse()


_ATOMIC = 10**9


def render(f: Formula, signatures: Iterable[ConnectiveSignature]) -> str:
    """Source text for ``f`` with the fewest parentheses that still parse back to ``f``."""
    sigs = list(signatures)
    by_symbol = {s.symbol: s for s in sigs}
    tokens = [s.token for s in sigs]

    def glue(token: str, rest: str) -> str:
        if _IDENT_CHAR.match(token[-1]) and rest[0] != "(":
            return f"{token} {rest}"
        if any(len(t) > len(token) and (token + rest).startswith(t) for t in tokens):
            return f"{token} {rest}"
        return token + rest

    def go(g: Formula) -> tuple[str, int]:
        if isinstance(g, Atom):
            return g.name, _ATOMIC
        sig = by_symbol.get(g.symbol)
        if sig is None:
            raise KeyError(f"unknown connective {g.symbol!r}")
        if sig.arity != len(g.args):
            raise ValueError(f"{g.symbol} expects {sig.arity} argument(s)")
        if sig.arity == 1:
            text, prec = go(g.args[0])
            if prec != _ATOMIC and prec != _ATOMIC - 1:
                text = f"({text})"
            return glue(sig.token, text), _ATOMIC - 1
        (lt, lp), (rt, rp) = go(g.args[0]), go(g.args[1])
        if lp < sig.precedence:
            lt = f"({lt})"
        if rp <= sig.precedence:
            rt = f"({rt})"
        return f"{lt} {sig.token} {rt}", sig.precedence

    return go(f)[0]


def variables(f: Formula) -> list[str]:
    names: set[str] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            names.add(g.name)
        else:
            stack.extend(g.args)
    return sorted(names)


def substitute(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Simultaneous substitution of formulas for atoms."""
    if isinstance(f, Atom):
        return mapping.get(f.name, f)
    return Apply(f.symbol, tuple(substitute(a, mapping) for a in f.args))


def depth(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    return 1 + max(depth(a) for a in f.args)


def size(f: Formula) -> int:
    if isinstance(f, Atom):
        return 1
    return 1 + sum(size(a) for a in f.args)


def symbols(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return set()
    out = {f.symbol}
    for a in f.args:
        out |= symbols(a)
    return out


def check_well_formed(f: Formula, signatures: Sequence[ConnectiveSignature]) -> None:
    arities = {s.symbol: s.arity for s in signatures}
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Apply):
            if g.symbol not in arities:
                raise KeyError(f"unknown connective {g.symbol!r}")
            if arities[g.symbol] != len(g.args):
                raise ValueError(f"{g.symbol} expects {arities[g.symbol]} argument(s)")
            stack.extend(g.args)
