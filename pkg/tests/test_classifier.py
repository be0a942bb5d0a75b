import pytest
from hypothesis import given

from sgbassian.classifier import (
    RULES, Mode, Value, classify, classify_ess, classify_sgb, ess_n, profile_n, rule_table,
)
from sgbassian.expr import OMEGA, UlmProfile, parse
from sgbassian.verify import GOLDEN, decomposable_profiles

from strategies import exprs

DERIVED = {r.rule_id for r in RULES.values() if r.kind == "derived"}


@pytest.mark.parametrize("text,prop,sv,sr,ev,er", GOLDEN)
def test_golden(text, prop, sv, sr, ev, er):
    e = parse(text)
    s = classify(e, prop, Mode.STRICT)
    x = classify(e, prop, Mode.EXTENDED)
    assert (s.value.value, s.rule_id) == (sv, sr)
    assert (x.value.value, x.rule_id) == (ev, er)


def test_profile_rule_reports_n():
    v = classify_sgb(parse("Z(2^2)^w + Z(2^3)^w + Z(2^9)^3"))
    assert "n = 2" in v.trail[-1].note


def test_failure_notes_name_the_obstruction():
    assert "Z(2) + Z(2^4)^w" in classify_sgb(parse("Z(2) + Z(2^4)^w")).trail[-1].note
    assert "(b)" in classify_sgb(parse("Z(2^2)^w + Z(2^inf)")).trail[-1].note


def test_multiprime_ess():
    e = parse("Z(2) + Z(3)")
    assert classify_ess(e, Mode.STRICT).rule_id == "GAP-ESS-MULTIPRIME"
    assert classify_ess(e, Mode.EXTENDED).value is Value.YES
    assert classify_ess(parse("Z(2) + Z(2^3) + Z(3)"), Mode.STRICT).value is Value.NO


def test_rule_table_is_complete():
    table = rule_table()
    assert {r["rule_id"] for r in table} == set(RULES)
    assert all(r["source"] and r["statement"] for r in table)
    assert {r["kind"] for r in table} <= {"decisive", "gap", "derived"}


def test_unknown_property():
    with pytest.raises(ValueError):
        classify(parse("Z"), "bassian")


@given(exprs())
def test_extended_only_resolves_undecided(e):
    for prop in ("sgb", "ess"):
        s = classify(e, prop, Mode.STRICT)
        x = classify(e, prop, Mode.EXTENDED)
        if s.value is not Value.UNDECIDED:
            assert x.value is s.value


@given(exprs())
def test_strict_cites_no_derived_rule(e):
    for prop in ("sgb", "ess", "bassian-tf"):
        v = classify(e, prop, Mode.STRICT)
        assert not {t.rule_id for t in v.trail} & DERIVED


@given(exprs())
def test_undecided_ends_in_a_gap(e):
    for mode in Mode:
        for prop in ("sgb", "ess", "bassian-tf"):
            v = classify(e, prop, mode)
            assert all(t.rule_id in RULES for t in v.trail)
            assert (RULES[v.rule_id].kind == "gap") == (v.value is Value.UNDECIDED)


@given(exprs(), exprs())
def test_summand_closure(a, b):
    for mode in Mode:
        for fn in (classify_sgb, classify_ess):
            if fn(a + b, mode).value is Value.YES:
                assert fn(a, mode).value is not Value.NO
                assert fn(b, mode).value is not Value.NO


@given(exprs())
def test_ess_yes_implies_sgb_not_no(e):
    for mode in Mode:
        if classify_ess(e, mode).value is Value.YES:
            assert classify_sgb(e, mode).value is not Value.NO


def test_ess_yes_implies_sgb_not_no_on_catalog():
    for text, *_ in GOLDEN:
        e = parse(text)
        for mode in Mode:
            if classify_ess(e, mode).value is Value.YES:
                assert classify_sgb(e, mode).value is not Value.NO


@given(exprs(max_terms=6, torsion_only=True))
def test_unbounded_rule_is_unreachable(e):
    for mode in Mode:
        assert classify_sgb(e, mode).rule_id != "SGB-P-UNBOUNDED-NO"


@pytest.mark.parametrize("base,extra", [
    ("Q^w + R{2:1}^3", "Q"),
    ("Q^w + R{2:1}^3", "Q^w"),
    ("Q^w", "Z(2^inf)"),
    ("Z(2^inf)^w", "Q^w"),
    ("Z(2^inf)^w", "Z(3^inf)^2"),
])
def test_divisible_atoms_keep_yes(base, extra):
    assert classify_sgb(parse(base)).value is Value.YES
    assert classify_sgb(parse(base + " + " + extra)).value is Value.YES


def test_profile_predicate_matches_search_small():
    mults = (0, 1, OMEGA)
    reach = decomposable_profiles(5, mults)
    import itertools
    for values in itertools.product(mults, repeat=5):
        f = {a: m for a, m in enumerate(values) if m != 0}
        assert (profile_n(UlmProfile(2, f)) is not None) == (values in reach)


def test_ess_n_examples():
    assert ess_n(UlmProfile(3, {1: 5, 2: OMEGA})) == 2
    assert ess_n(UlmProfile(2, {0: 1, 2: 1})) is None
    assert ess_n(UlmProfile(2, {0: OMEGA})) == 1
