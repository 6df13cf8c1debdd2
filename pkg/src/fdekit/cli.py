"""Command-line interface.

Exit codes: 0 for Valid / true / found outcomes, 1 for Invalid / false /
nothing-found outcomes, 2 for usage and input errors.

``--format machine-readable`` prints JSON Lines: one object per record, keys
sorted, with a ``record`` field naming the record type (``cell``,
``verdict``, ``value``, ``equivalence``, ``closure``, ``source``,
``witness``, ``search``, ``formula``, ``change``, ``preset``).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from .conditions import ConditionSyntaxError, classify_change, condition_arity, is_tweaking, parse_condition
from .consequence import entails, is_logical_truth, parse_argument, same_value
from .contraclassic import (
    CounterpartError,
    WitnessSearchBounds,
    find_contra_witnesses,
    negation_inconsistency_witnesses,
    source_classification,
)
from .formula import FormulaSyntaxError
from .presets import PRESET_IDS, SpecError, UnknownPresetError, get_preset, load_spec_file, save_spec
from .semantics import LogicSpec, SemanticsError, evaluate, render_table, truth_table
from .values import Interpretation

TEXT, MACHINE = "text", "machine-readable"
DEFAULT_BOUNDS = "vars=2,depth=2,premises=2,budget=120"


class UsageError(Exception):
    pass


def _record(record_type: str, /, **fields) -> str:
    return json.dumps({"record": record_type, **fields}, sort_keys=True, ensure_ascii=False)


def _valuation_fields(v) -> dict[str, str]:
    return {k: Interpretation(v[k]).label for k in sorted(v)}


def _common(top_level: bool) -> argparse.ArgumentParser:
    # subcommands must not reset flags already given before the command name
    unset = None if top_level else argparse.SUPPRESS
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_argument_group("logic source")
    source.add_argument("--logic", metavar="PRESET", default=unset, help=f"built-in logic: {', '.join(PRESET_IDS)}")
    source.add_argument("--spec", metavar="FILE", default=unset, help="JSON spec file defining a logic")
    common.add_argument("--format", choices=(TEXT, MACHINE), default=TEXT if top_level else unset)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common(top_level=False)
    parser = argparse.ArgumentParser(prog="fdekit", description=__doc__.split("\n")[0], parents=[_common(True)])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_, parents=[common], description=help_)

    p = add("presets", "list the built-in logics")
    p.add_argument("--export", metavar="PRESET", help="print a preset as a spec file instead")
    p = add("table", "print the four-valued table of a connective")
    p.add_argument("connective", help="token or symbol, e.g. '->w'")
    p = add("eval", "evaluate a formula under a valuation")
    p.add_argument("formula")
    p.add_argument("--assign", action="append", default=[], metavar="VAR=VALUE", help="e.g. p={1,0}")
    p = add("entail", "check an argument 'B1, B2 |- A'")
    p.add_argument("argument")
    p = add("taut", "check whether a formula is a logical truth")
    p.add_argument("formula")
    p = add("equiv", "check whether two formulas take the same value under every valuation")
    p.add_argument("left")
    p.add_argument("right")
    add("closure", "check that the connectives preserve the admissible set")
    p = add("classify", "match every condition against the classical catalog")
    p.add_argument("--prose", action="store_true", help="print sentences instead of compact lines")
    for name, help_ in (
        ("contra", "search for contra-classical witnesses within bounds"),
        ("neg-inconsistency", "search for A with both A and its negation logically true"),
    ):
        p = add(name, help_)
        p.add_argument("--bounds", default=DEFAULT_BOUNDS, help=f"default {DEFAULT_BOUNDS}")
        if name == "contra":
            p.add_argument("--limit", type=int, default=20, help="witnesses to print (default 20, 0 = all)")
        else:
            p.add_argument("--negation", metavar="TOKEN", help="unary connective (default: first negation)")
    p = add("diff-conditions", "classify the change from one condition to another")
    p.add_argument("source", help="condition DSL text, e.g. '0 in A1'")
    p.add_argument("target")
    return parser


def _load_logic(args) -> LogicSpec:
    if args.logic and args.spec:
        raise UsageError("give either --logic or --spec, not both")
    if args.logic:
        return get_preset(args.logic)
    if args.spec:
        # the closure command reports a violation instead of refusing the file
        return load_spec_file(Path(args.spec), check_closure=args.command != "closure")
    raise UsageError(f"{args.command} needs --logic PRESET or --spec FILE")


def _parse_assignments(items: Sequence[str]) -> dict[str, Interpretation]:
    out = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"bad --assign {item!r}; expected VAR=VALUE")
        try:
            out[name.strip()] = Interpretation.parse(value)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return out


def render_report(kind: str, result, fmt: str, logic: LogicSpec | None = None, **extra) -> str:
    """Render a command result as text or as JSON Lines."""
    machine = fmt == MACHINE
    if kind == "table":
        if not machine:
            return render_table(result)
        return "\n".join(
            _record("cell", symbol=result.symbol, args=[a.label for a in args], value=v.label)
            for args, v in result.cells.items()
        )
    if kind == "verdict":
        if machine:
            cx = _valuation_fields(result.counterexample) if result.counterexample else None
            return _record("verdict", valid=result.valid, counterexample=cx)
        return str(result)
    if kind == "value":
        return _record("value", value=result.label) if machine else result.label
    if kind == "equivalence":
        if machine:
            return _record(
                "equivalence",
                same=result.same,
                witness=_valuation_fields(result.witness) if result.witness else None,
                left=result.left.label if result.left is not None else None,
                right=result.right.label if result.right is not None else None,
            )
        return str(result)
    if kind == "closure":
        if machine:
            return _record(
                "closure",
                ok=result.ok,
                symbol=result.symbol,
                args=[a.label for a in result.args],
                result=result.result.label if result.result is not None else None,
            )
        return str(result)
    if kind == "classify":
        if machine:
            return "\n".join(
                _record(
                    "source",
                    symbol=e.symbol,
                    token=e.token,
                    condition=e.polarity,
                    counterpart=e.own_family,
                    family=e.family,
                    profile=e.profile,
                    borrowed=e.borrowed,
                )
                for e in result.entries
            )
        lines = result.bullets() if extra.get("prose") else result.lines()
        return "\n".join(lines)
    if kind == "contra":
        bounds = result.stats["bounds"]
        if machine:
            recs = [_record("witness", argument=a.render(logic)) for a in result]
            recs.append(
                _record(
                    "search",
                    count=result.count,
                    truncated=result.truncated,
                    bounds=bounds.describe(),
                    pool=result.stats["pool_size"],
                    classes=result.stats["classes"],
                )
            )
            return "\n".join(recs)
        note = " (search truncated by time budget)" if result.truncated else ""
        if not result.count:
            return f"no witnesses (bounds: {bounds.describe()}){note}"
        head = f"{result.count} witnesses (bounds: {bounds.describe()}){note}"
        if len(result) < result.count:
            head += f"; first {len(result)}:"
        return "\n".join([head] + [f"  {a.render(logic)}" for a in result])
    if kind == "neg-inconsistency":
        bounds = extra["bounds"]
        if machine:
            recs = [_record("formula", formula=logic.render(f)) for f in result]
            recs.append(_record("search", count=len(result), truncated=result.truncated, bounds=bounds.describe()))
            return "\n".join(recs)
        note = " (search truncated by time budget)" if result.truncated else ""
        if not result:
            return f"no witnesses (bounds: {bounds.describe()}){note}"
        return "\n".join([f"{len(result)} formulas{note}:"] + [f"  {logic.render(f)}" for f in result])
    if kind == "change":
        change, tweak = result
        if machine:
            return _record("change", kind=change.value, tweaking=tweak)
        return f"{change.value} (tweaking: {'yes' if tweak else 'no'})"
    raise ValueError(f"unknown report kind {kind!r}")


def _dispatch(args) -> tuple[str, int]:
    fmt = args.format
    cmd = args.command
    if cmd == "presets":
        if args.export:
            return save_spec(get_preset(args.export)).to_json().rstrip("\n"), 0
        if fmt == MACHINE:
            return "\n".join(_record("preset", id=p, description=get_preset(p).description) for p in PRESET_IDS), 0
        width = max(map(len, PRESET_IDS))
        return "\n".join(f"{p.ljust(width)}  {get_preset(p).description}" for p in PRESET_IDS), 0
    if cmd == "diff-conditions":
        src, dst = parse_condition(args.source), parse_condition(args.target)
        if condition_arity(src) != condition_arity(dst):
            raise UsageError("conditions mention different numbers of arguments")
        return render_report("change", (classify_change(src, dst), is_tweaking(src, dst)), fmt), 0

    logic = _load_logic(args)
    if cmd == "table":
        return render_report("table", truth_table(args.connective, logic), fmt), 0
    if cmd == "eval":
        value = evaluate(logic.parse(args.formula), _parse_assignments(args.assign), logic)
        return render_report("value", value, fmt), 0
    if cmd == "entail":
        verdict = entails(parse_argument(args.argument, logic), logic)
        return render_report("verdict", verdict, fmt), 0 if verdict else 1
    if cmd == "taut":
        verdict = is_logical_truth(logic.parse(args.formula), logic)
        return render_report("verdict", verdict, fmt), 0 if verdict else 1
    if cmd == "equiv":
        eq = same_value(logic.parse(args.left), logic.parse(args.right), logic)
        return render_report("equivalence", eq, fmt), 0 if eq else 1
    if cmd == "closure":
        report = logic.closure
        return render_report("closure", report, fmt), 0 if report else 1
    if cmd == "classify":
        return render_report("classify", source_classification(logic), fmt, prose=args.prose), 0
    bounds = _parse_bounds(args.bounds)
    if cmd == "contra":
        limit = None if args.limit == 0 else args.limit
        found = find_contra_witnesses(logic, bounds, limit=limit)
        return render_report("contra", found, fmt, logic), 0 if found.count else 1
    if cmd == "neg-inconsistency":
        neg = args.negation or _default_negation(logic)
        found = negation_inconsistency_witnesses(logic, neg, bounds)
        return render_report("neg-inconsistency", found, fmt, logic, bounds=bounds), 0 if found else 1
    raise UsageError(f"unknown command {cmd!r}")


def _parse_bounds(text: str) -> WitnessSearchBounds:
    try:
        return WitnessSearchBounds.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad --bounds: {exc}") from None


def _default_negation(logic: LogicSpec) -> str:
    for c in logic.connectives:
        if c.arity == 1 and c.classical_counterpart in ("negation", "self"):
            return c.symbol
    raise UsageError(f"{logic.name} has no negation; pass --negation")


# tokens such as "->w" would otherwise be taken for unknown options
_OPERATOR_ARG = re.compile(r"^-[^-\w]")


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str]:
    """Run the CLI; returns ``(exit_code, stdout_text, stderr_text)``."""
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = [f" {a}" if _OPERATOR_ARG.match(a) else a for a in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already wrote usage/help to stderr or stdout
        return (0 if exc.code == 0 else 2), "", ""
    for name in ("connective", "formula", "argument", "left", "right", "source", "target"):
        if isinstance(getattr(args, name, None), str):
            setattr(args, name, getattr(args, name).strip())
    try:
        out, code = _dispatch(args)
    except UsageError as exc:
        return 2, "", f"error: {exc}\n{parser.format_usage()}"
    except (
        FormulaSyntaxError,
        ConditionSyntaxError,
        SpecError,
        SemanticsError,
        UnknownPresetError,
        CounterpartError,
        OSError,
        ValueError,
        KeyError,
    ) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        return 2, "", f"error: {msg}\n"
    return code, out + "\n", ""


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
