"""Dunn-semantics workbench for FDE and its contra-classical variants."""

from .conditions import (
    BooleanFunction,
    ChangeKind,
    ConnectiveDef,
    DunnAtom,
    boolean_counterpart,
    classical_profile,
    classify_change,
    connective,
    eval_condition,
    is_tweaking,
    parse_condition,
    render_condition,
)
from .consequence import Argument, Equivalence, Verdict, entails, is_logical_truth, parse_argument, same_value
from .contraclassic import (
    WitnessSearchBounds,
    classical_benchmark,
    find_contra_witnesses,
    is_contra_classical_witness,
    negation_inconsistency_witnesses,
    source_classification,
)
from .formula import Apply, Atom, ConnectiveSignature, Formula, parse, render, substitute, variables
from .presets import PRESET_IDS, get_preset, load_spec, save_spec
from .semantics import LogicSpec, closure_check, enumerate_valuations, evaluate, render_table, truth_table
from .values import Interpretation, TruthValue

__version__ = "0.1.0"
