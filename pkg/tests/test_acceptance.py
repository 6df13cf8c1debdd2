"""Acceptance suite: seven criteria, one PASS/FAIL line each.

Run with pytest, or directly (``python tests/test_acceptance.py``) for the
summary lines alone.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

import reference_tables  # noqa: E402
from fdekit.consequence import entails_text, same_value  # noqa: E402
from fdekit.contraclassic import WitnessSearchBounds, find_contra_witnesses, source_classification  # noqa: E402
from fdekit.presets import KAMIDE_NEG, get_preset  # noqa: E402
from fdekit.semantics import truth_table  # noqa: E402
from fdekit.values import CANONICAL_ORDER, Interpretation  # noqa: E402

T, B, N, F = Interpretation.T, Interpretation.B, Interpretation.N, Interpretation.F


def criterion_1():
    """Fourteen connective tables equal the reference tables cell for cell."""
    failures = []
    labels = {v: v.label for v in CANONICAL_ORDER}
    assert tuple(labels[v] for v in CANONICAL_ORDER) == reference_tables.ORDER
    for (preset, symbol), expected in reference_tables.UNARY.items():
        t = truth_table(symbol, get_preset(preset))
        got = tuple(t[a].label for a in CANONICAL_ORDER)
        if got != expected:
            failures.append(f"{symbol}: {got} != {expected}")
    for (preset, symbol), expected in reference_tables.BINARY.items():
        t = truth_table(symbol, get_preset(preset))
        got = tuple(tuple(t[a, b].label for b in CANONICAL_ORDER) for a in CANONICAL_ORDER)
        if got != expected:
            failures.append(f"{symbol}: {got} != {expected}")
    n = len(reference_tables.UNARY) + len(reference_tables.BINARY)
    if n != 14:
        failures.append(f"expected 14 tables, checked {n}")
    return failures


def _verdict(text, preset):
    return entails_text(text, get_preset(preset))


def criterion_2():
    """Excluded middle and explosion across FDE, K3, LP and CL."""
    failures = []
    expect = [
        ("CL", "|- p | ~p", True, None),
        ("CL", "p & ~p |- q", True, None),
        ("K3", "|- p | ~p", False, {"p": N}),
        ("K3", "p & ~p |- q", True, None),
        ("LP", "|- p | ~p", True, None),
        ("LP", "p & ~p |- q", False, {"p": B, "q": F}),
        ("FDE", "|- p | ~p", False, {"p": N}),
        ("FDE", "p & ~p |- q", False, {"p": B, "q": N}),
    ]
    for preset, text, valid, cx in expect:
        v = _verdict(text, preset)
        if v.valid != valid or (cx is not None and dict(v.counterexample) != cx):
            failures.append(f"{preset} {text}: got {v}")
    return failures


def criterion_3():
    """Validity roster for the modified logics."""
    failures = []
    roster = [
        ("RUET", "|- p | ~R ~R p", True),
        ("RUET", "|- p | ~R p", False),
        ("CP", "|- ~K (p & ~K ~K p)", True),
        ("CP", "|- ~K ~K (p & ~K ~K p)", True),
        ("TONK-AND", "|- ~(p &t ~p) <=> (p &t ~p)", True),
        ("TONK-AND", "p &t q |- q", False),
        ("BLSUP", "|- ~(p &aa q) <=> (~p &aa ~q)", True),
        ("BLSUP", "|- ~(p |aa q) <=> (~p |aa ~q)", True),
        ("BLSUP", "|- (p => p) |aa ~(p => p)", True),
        ("BLSUP", "|- ~((p => p) |aa ~(p => p))", True),
        ("DF", "p ->df q |- p", True),
        ("MC", "|- ~(p ->w q) <->w (p ->w ~q)", True),
        ("MC", "|- ~(p ->w ~p)", True),
        ("MC", "|- ~(~p ->w p)", True),
        ("MC", "|- (p ->w q) ->w ~(p ->w ~q)", True),
        ("MC", "|- (p ->w ~q) ->w ~(p ->w q)", True),
        ("MC", "|- ~(p ->w ~q) ->w (p ->w q)", True),
        ("MC", "|- ~(p ->w q) ->w (p ->w ~q)", True),
        ("MC", "|- (p & ~p) ->w p", True),
        ("MC", "|- ~((p & ~p) ->w p)", True),
        ("PCON", "|- ~(p ->w ~p)", True),
    ]
    for preset, text, valid in roster:
        v = _verdict(text, preset)
        if v.valid != valid:
            failures.append(f"{preset} {text}: got {v}")
    tonk = _verdict("p &t q |- q", "TONK-AND")
    if tonk.valid or dict(tonk.counterexample) != {"p": T, "q": N}:
        failures.append(f"tonk countervaluation: got {tonk}")
    return failures


def criterion_4():
    """Demi-negations."""
    failures = []
    ruet, cp = get_preset("RUET"), get_preset("CP")
    if not same_value(ruet.parse("~R ~R p"), ruet.parse("!p"), ruet):
        failures.append("∼R∼R p differs from ¬p")
    if not same_value(cp.parse("~K ~K p"), cp.parse("!p"), cp):
        failures.append("∼K∼K p differs from ¬p")
    both = ruet.extend([KAMIDE_NEG])
    eq = same_value(both.parse("~R p"), both.parse("~K p"), both)
    if eq.same or dict(eq.witness) != {"p": T}:
        failures.append(f"∼R p vs ∼K p: got {eq}")
    return failures


BULLETS = [
    ("RUET", "∼R", "truth", "identity", "truth"),
    ("CP", "∼K", "falsity", "identity", "falsity"),
    ("TONK-AND", "∧t", "truth", "disjunction", "truth"),
    ("BLSUP", "∧AA", "falsity", "disjunction", "falsity"),
    ("TONK-OR", "∨t", "truth", "conjunction", "truth"),
    ("BLSUP", "∨AA", "falsity", "conjunction", "falsity"),
    ("DF", "→DF", "truth", "conjunction", "truth"),
    ("MC", "→W", "falsity", "conjunction", "falsity"),
]


def criterion_5():
    """Source classification: eight borrowed conditions, none in P1GEN."""
    failures = []
    for preset, symbol, polarity, family, profile in BULLETS:
        e = source_classification(get_preset(preset)).entry(symbol, polarity)
        if (e.family, e.profile, e.borrowed) != (family, profile, True):
            failures.append(f"{preset} {polarity}({symbol}): {e.compact()}")
    report = source_classification(get_preset("P1GEN"))
    for e in report.entries:
        if e.borrowed or (e.family, e.profile) != (e.own_family, e.polarity):
            failures.append(f"P1GEN {e.compact()}")
    return failures


CONTRA = ("RUET", "CP", "TONK-AND", "BLSUP", "DF", "MC", "PCON")
NON_CONTRA = ("FDE", "K3", "LP", "CL", "P1GEN")
THEOREM_ONLY_DEPTH = {"CP": 3, "BLSUP": 3}


def criterion_6():
    """Bounded search: non-empty exactly for the contra-classical presets, within 120 s."""
    failures = []
    start = time.monotonic()
    for preset in CONTRA + NON_CONTRA:
        depth = THEOREM_ONLY_DEPTH.get(preset, 2)
        found = find_contra_witnesses(get_preset(preset), WitnessSearchBounds(2, depth, 2, 120.0), limit=1)
        want = preset in CONTRA
        if (found.count > 0) != want:
            failures.append(f"{preset}: {found.count} witnesses at depth {depth}")
        if not want and found.truncated:
            failures.append(f"{preset}: search truncated, emptiness not established")
    elapsed = time.monotonic() - start
    if elapsed > 120:
        failures.append(f"took {elapsed:.1f} s")
    return failures


def criterion_7():
    """Property suites, 1000 generated cases each."""
    import test_conditions
    import test_consequence
    import test_formula
    import test_presets
    import test_semantics

    suites = [
        test_formula.test_round_trip_mc,
        test_formula.test_round_trip_word_tokens,
        test_formula.test_round_trip_blsup,
        test_semantics.test_table_engine_coherence,
        test_consequence.test_substitution_invariance,
        test_conditions.test_counterpart_involution,
        test_semantics.test_classical_collapse,
        test_presets.test_save_load_preserves_tables,
    ]
    failures = []
    for suite in suites:
        if suite._hypothesis_internal_use_settings.max_examples < 1000:
            failures.append(f"{suite.__name__}: fewer than 1000 cases")
        try:
            suite()
        except Exception as exc:  # report, do not abort the other suites
            failures.append(f"{suite.__name__}: {type(exc).__name__}: {exc}")
    return failures


CRITERIA = {
    1: ("table conformance", criterion_1),
    2: ("extension facts", criterion_2),
    3: ("validity roster", criterion_3),
    4: ("demi-negation identities", criterion_4),
    5: ("source classifier", criterion_5),
    6: ("bounded contra-classicality correlation", criterion_6),
    7: ("property suites", criterion_7),
}


def _line(number, failures, seconds):
    name = CRITERIA[number][0]
    status = "PASS" if not failures else "FAIL"
    head = f"criterion {number} ({name}): {status} [{seconds:.1f} s]"
    return head if not failures else head + "\n    " + "\n    ".join(failures)


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    start = time.monotonic()
    failures = CRITERIA[number][1]()
    with capsys.disabled():
        print("\n" + _line(number, failures, time.monotonic() - start))
    assert not failures


if __name__ == "__main__":
    bad = 0
    for number in sorted(CRITERIA):
        start = time.monotonic()
        failures = CRITERIA[number][1]()
        bad += bool(failures)
        print(_line(number, failures, time.monotonic() - start))
    sys.exit(1 if bad else 0)
