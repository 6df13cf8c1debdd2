import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from fdekit.conditions import connective
from fdekit.consequence import Argument, is_logical_truth, parse_argument
from fdekit.contraclassic import (
    CounterpartError,
    WitnessSearchBounds,
    classical_benchmark,
    classical_catalog,
    find_contra_witnesses,
    formula_pool,
    is_contra_classical_witness,
    negation_inconsistency_witnesses,
    source_classification,
)
from fdekit.presets import PRESET_IDS, get_preset
from fdekit.semantics import closure_check, truth_table, value_vector
from fdekit.formula import variables
from fdekit.values import CLASSICAL, Interpretation

from strategies import formulas

SUBCLASSICAL = ("FDE", "K3", "LP", "CL", "P1GEN", "FDE-NEG", "FDE-MAT")


class TestBenchmark:
    def test_mc_reads_as_classical(self):
        bench = classical_benchmark(get_preset("MC"))
        assert bench.admissible == CLASSICAL
        assert bench.connective("→W").family() == "implication"
        assert bench.connective("∼").family() == "negation"
        assert truth_table("→W", bench).cells == truth_table("→", get_preset("CL")).cells

    def test_ruet_negation_becomes_classical(self):
        bench = classical_benchmark(get_preset("RUET"))
        assert truth_table("∼R", bench).cells == truth_table("∼", get_preset("CL")).cells

    def test_fde_benchmark_has_excluded_middle(self):
        bench = classical_benchmark(get_preset("FDE"))
        assert is_logical_truth(bench.parse("p | ~p"), bench)

    def test_tokens_retained(self):
        mc = get_preset("MC")
        bench = classical_benchmark(mc)
        assert [c.token for c in bench.connectives] == [c.token for c in mc.connectives]

    def test_missing_counterpart(self):
        odd = get_preset("FDE").extend([connective("⊙", "@", 2, "1 in A1", "0 in A2", counterpart=None)])
        with pytest.raises(CounterpartError):
            classical_benchmark(odd)

    @pytest.mark.parametrize("preset", PRESET_IDS)
    def test_closed_idempotent_two_valued(self, preset):
        bench = classical_benchmark(get_preset(preset))
        again = classical_benchmark(bench)
        assert closure_check(bench).ok
        assert again.name == bench.name
        for c in bench.connectives:
            t = truth_table(c.symbol, bench)
            assert set(t.cells.values()) <= set(CLASSICAL)
            assert truth_table(c.symbol, again).cells == t.cells


class TestCatalog:
    def test_truth_and_falsity_complementary(self):
        cat = classical_catalog()
        for fam in cat.truth:
            assert cat.falsity[fam] == cat.truth[fam].complement()

    def test_conjunction_profiles(self):
        cat = classical_catalog()
        assert str(cat.truth["conjunction"]) == "1000"
        assert str(cat.falsity["conjunction"]) == "0111"
        assert str(cat.truth["biconditional"]) == "1001"


class TestWitnessCheck:
    def test_aristotle_in_mc(self):
        mc = get_preset("MC")
        assert is_contra_classical_witness(parse_argument("|- ~(p ->w ~p)", mc), mc)

    def test_tonk_fixed_point(self):
        tonk = get_preset("TONK-AND")
        assert is_contra_classical_witness(parse_argument("|- ~(p &t ~p) <=> (p &t ~p)", tonk), tonk)

    def test_fde_conjunction_elimination_is_not(self):
        fde = get_preset("FDE")
        assert not is_contra_classical_witness(parse_argument("p & q |- p", fde), fde)

    def test_invalid_in_logic_is_not(self):
        mc = get_preset("MC")
        assert not is_contra_classical_witness(parse_argument("p |- q", mc), mc)


class TestBounds:
    def test_parse(self):
        b = WitnessSearchBounds.parse("vars=1,depth=3,premises=0,budget=5")
        assert (b.max_vars, b.max_depth, b.max_premises, b.time_budget) == (1, 3, 0, 5.0)
        assert b.describe() == "vars=1, depth=3, premises=0"

    @pytest.mark.parametrize("text", ["vars=0", "premises=3", "depth=-1", "budget=0", "size=2", "vars"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            WitnessSearchBounds.parse(text)


def _search(preset, vars_, depth, premises, limit=None):
    return find_contra_witnesses(get_preset(preset), WitnessSearchBounds(vars_, depth, premises, None), limit)


class TestSearch:
    def test_blsup_theorem_needs_depth_four(self):
        bl = get_preset("BLSUP")
        target = bl.parse("~((p => p) |aa ~(p => p))")
        assert _search("BLSUP", 1, 3, 0).count == 0
        found = _search("BLSUP", 1, 4, 0)
        assert found.count > 0 and not found.truncated
        bench = classical_benchmark(bl)
        assert any(_same_consequence(a.conclusion, target, bl, bench) for a in found)

    def test_fde_empty(self):
        found = _search("FDE", 2, 2, 2)
        assert found.count == 0 and list(found) == [] and not found.truncated

    def test_cp_theorems(self):
        cp = get_preset("CP")
        bench = classical_benchmark(cp)
        found = _search("CP", 1, 3, 0)
        assert found.count > 0
        target = cp.parse("~K (p & ~K ~K p)")
        assert any(_same_consequence(a.conclusion, target, cp, bench) for a in found)

    def test_df_needs_premises(self):
        assert _search("DF", 2, 2, 0).count == 0
        found = _search("DF", 2, 2, 1)
        assert found.count > 0
        assert all(len(a.premises) == 1 for a in found)

    def test_every_result_is_a_witness(self):
        for preset in ("RUET", "MC", "PCON", "TONK-AND"):
            logic = get_preset(preset)
            for arg in _search(preset, 1, 2, 2):
                assert is_contra_classical_witness(arg, logic)

    def test_limit_keeps_count(self):
        full = _search("MC", 2, 2, 2)
        few = _search("MC", 2, 2, 2, limit=3)
        assert len(few) == 3 and few.count == full.count
        assert list(few) == list(full)[:3]

    def test_deterministic(self):
        a = _search("TONK-AND", 2, 2, 1)
        b = _search("TONK-AND", 2, 2, 1)
        assert list(a) == list(b)

    def test_budget_truncates(self):
        found = find_contra_witnesses(get_preset("CP"), WitnessSearchBounds(2, 3, 2, 1e-6))
        assert found.truncated

    @pytest.mark.parametrize(
        "preset, vars_, depth, premises",
        [
            ("FDE", 1, 2, 2),
            ("RUET", 1, 2, 2),
            ("CP", 1, 2, 1),
            ("TONK-AND", 1, 2, 2),
            ("TONK-OR", 2, 1, 2),
            ("BLSUP", 1, 2, 2),
            ("DF", 2, 1, 2),
            ("MC", 1, 2, 2),
            ("MC", 2, 1, 2),
            ("PCON", 1, 2, 1),
            ("P1GEN", 1, 2, 2),
            ("LP", 2, 1, 2),
        ],
    )
    def test_matches_brute_force(self, preset, vars_, depth, premises):
        logic = get_preset(preset)
        conns = oracle.BY_PRESET[preset]
        adm = tuple(oracle.TO_SET[a] for a in logic.admissible)
        names = ["p", "q"][:vars_]
        want = oracle.witness_keys(conns, names, depth, premises, adm)
        found = _search(preset, vars_, depth, premises)
        got = [oracle.argument_key(a.premises, a.conclusion, names, conns, adm) for a in found]
        assert found.count == len(found) == len(want)
        assert len(set(got)) == len(got)
        assert set(got) == want


def _same_consequence(f, g, logic, bench):
    """Both truth sets coincide in the logic and in its benchmark."""
    names = sorted(set(variables(f)) | set(variables(g)))

    def mask(h, spec):
        return tuple(c & 1 for c in value_vector(h, names, spec))

    return mask(f, logic) == mask(g, logic) and mask(f, bench) == mask(g, bench)


class TestPool:
    def test_depth_zero_is_atoms(self):
        pool, complete = formula_pool(get_preset("FDE"), ("p", "q"), 0)
        assert complete and [oracle.atoms(e.formula) for e in pool] == [{"p"}, {"q"}]

    def test_vectors_distinct(self):
        logic = get_preset("MC")
        pool, _ = formula_pool(logic, ("p",), 3)
        vecs = [e.vector for e in pool]
        assert len(vecs) == len(set(vecs))

    def test_covers_every_vector(self):
        logic = get_preset("RUET")
        pool, _ = formula_pool(logic, ("p",), 2)
        conns = oracle.BY_PRESET["RUET"]
        vals = list(oracle.valuations(["p"]))
        reached = {tuple(oracle.value(f, v, conns) for v in vals) for f in oracle.all_formulas(conns, ["p"], 2)}
        got = {tuple(oracle.TO_SET[x] for x in _decode(e.vector)) for e in pool}
        assert got == reached


def _decode(vec):
    return [Interpretation(c) for c in vec]


class TestSourceClassification:
    # connective, condition, expected family, expected profile
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

    @pytest.mark.parametrize("preset, symbol, polarity, family, profile", BULLETS)
    def test_modified_condition_borrowed(self, preset, symbol, polarity, family, profile):
        e = source_classification(get_preset(preset)).entry(symbol, polarity)
        assert (e.family, e.profile, e.borrowed) == (family, profile, True)

    @pytest.mark.parametrize("preset, symbol, polarity, family, profile", BULLETS)
    def test_unmodified_condition_own(self, preset, symbol, polarity, family, profile):
        other = "falsity" if polarity == "truth" else "truth"
        e = source_classification(get_preset(preset)).entry(symbol, other)
        assert (e.family, e.profile, e.borrowed) == (e.own_family, other, False)

    def test_mc_compact_line(self):
        lines = source_classification(get_preset("MC")).lines()
        assert "falsity(->w) = classical falsity(∧) [borrowed]" in lines

    def test_pcon_conjunction_falsity_is_exclusive(self):
        e = source_classification(get_preset("PCON")).entry("∧", "falsity")
        assert (e.family, e.profile, e.borrowed) == ("biconditional", "falsity", True)

    def test_p1gen_never_borrows(self):
        report = source_classification(get_preset("P1GEN"))
        assert not report.borrowed
        for e in report.entries:
            assert (e.family, e.profile) == (e.own_family, e.polarity)

    @pytest.mark.parametrize("preset", ["FDE", "K3", "LP", "CL", "FDE-NEG", "FDE-MAT"])
    def test_subclassical_never_borrow(self, preset):
        assert not source_classification(get_preset(preset)).borrowed

    def test_no_match(self):
        odd = get_preset("FDE").extend([connective("∨x", "|x", 2, "0 in A1 and 1 in A2", "0 in A1", "disjunction")])
        e = source_classification(odd).entry("∨x", "truth")
        assert e.family is None and not e.borrowed
        assert e.compact() == "truth(|x) = no classical match"

    def test_sentence(self):
        e = source_classification(get_preset("RUET")).entry("∼R", "truth")
        assert e.sentence() == "the truth condition of ∼R is classically that of identity's truth condition"


class TestNegationInconsistency:
    def _has_vector_of(self, found, target, logic, names=("p",)):
        want = value_vector(target, list(names), logic)
        return any(value_vector(f, list(names), logic) == want for f in found)

    def test_mc(self):
        mc = get_preset("MC")
        found = negation_inconsistency_witnesses(mc, "∼", WitnessSearchBounds(1, 3, 0, None))
        assert self._has_vector_of(found, mc.parse("(p & ~p) ->w p"), mc)
        for f in found:
            assert is_logical_truth(f, mc) and is_logical_truth(mc.parse(f"~({mc.render(f)})"), mc)

    def test_blsup(self):
        bl = get_preset("BLSUP")
        found = negation_inconsistency_witnesses(bl, "∼", WitnessSearchBounds(1, 3, 0, None))
        assert self._has_vector_of(found, bl.parse("(p => p) |aa ~(p => p)"), bl)

    def test_cp(self):
        cp = get_preset("CP")
        found = negation_inconsistency_witnesses(cp, "∼K", WitnessSearchBounds(1, 3, 0, None))
        assert self._has_vector_of(found, cp.parse("~K (p & ~K ~K p)"), cp)

    @pytest.mark.parametrize("vars_, depth", [(1, 3), (2, 2)])
    def test_fde_none(self, vars_, depth):
        found = negation_inconsistency_witnesses(get_preset("FDE"), "∼", WitnessSearchBounds(vars_, depth, 0, None))
        assert list(found) == []

    def test_rejects_binary(self):
        with pytest.raises(ValueError):
            negation_inconsistency_witnesses(get_preset("FDE"), "∧", WitnessSearchBounds(1, 1, 0, None))

    def test_matches_brute_force(self):
        mc = get_preset("MC")
        conns = oracle.BY_PRESET["MC"]
        vals = list(oracle.valuations(["p"]))
        want = set()
        for f in oracle.all_formulas(conns, ["p"], 2):
            vec = [oracle.value(f, v, conns) for v in vals]
            if all(1 in x for x in vec) and all(1 in conns["∼"](x) for x in vec):
                want.add(tuple(vec))
        found = negation_inconsistency_witnesses(mc, "∼", WitnessSearchBounds(1, 2, 0, None))
        got = {tuple(oracle.TO_SET[x] for x in _decode(value_vector(f, ["p"], mc))) for f in found}
        assert got == want


class TestHyperConnexivity:
    THESES = [
        "~(p ->w ~p)",
        "~(~p ->w p)",
        "(p ->w q) ->w ~(p ->w ~q)",
        "(p ->w ~q) ->w ~(p ->w q)",
        "~(p ->w ~q) ->w (p ->w q)",
        "~(p ->w q) ->w (p ->w ~q)",
    ]

    @pytest.mark.parametrize("text", THESES)
    def test_logical_truth(self, text):
        mc = get_preset("MC")
        f = mc.parse(text)
        assert is_logical_truth(f, mc)
        assert oracle.counterexample([], f, oracle.BY_PRESET["MC"]) is None

    # the two converses also hold classically
    @pytest.mark.parametrize("text", THESES[:4])
    def test_not_classical(self, text):
        mc = get_preset("MC")
        assert is_contra_classical_witness(Argument((), mc.parse(text)), mc)

    @pytest.mark.parametrize("text", THESES[4:])
    def test_converses_classically_valid(self, text):
        mc = get_preset("MC")
        bench = classical_benchmark(mc)
        assert is_logical_truth(bench.parse(text), bench)


def test_correlation_at_small_bounds():
    """Borrowing and contra-classicality go together for every preset here."""
    for preset in PRESET_IDS:
        borrowed = source_classification(get_preset(preset)).borrowed
        found = _search(preset, 2, 2, 2, limit=1)
        assert borrowed == (found.count > 0), preset


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_sub_classical_presets_have_no_witness(data):
    preset = data.draw(st.sampled_from(SUBCLASSICAL))
    logic = get_preset(preset)
    fs = formulas(logic, names=("p", "q"), max_leaves=6)
    arg = Argument(tuple(data.draw(st.lists(fs, max_size=2))), data.draw(fs))
    assert not is_contra_classical_witness(arg, logic)
