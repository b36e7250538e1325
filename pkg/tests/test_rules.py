import random

import pytest

from causalext import load_default_rules
from causalext.features import generate_features
from causalext.rules import (
    CAUSE,
    EFFECT,
    OTHER,
    Rule,
    RuleError,
    RuleSet,
    load_rules,
    rule_coverage_report,
    rule_matches,
    serialize_rules,
)
from conftest import fixture_sentence

C1 = Rule(
    id="C1",
    label=CAUSE,
    and_set=frozenset({"dep.path.u<nsubj<v"}),
    or_set=frozenset({"u.POS_gen.NOUN", "u.POS_gen.PROPN"}),
    neg_set=frozenset({"v.rootword.result"}),
)


def pedv_features(u):
    sent = fixture_sentence("pedv.conllu")
    return generate_features(sent, v=8, u=u)


def test_rule_matches_pedv_subject_pair():
    assert rule_matches(C1, pedv_features(0))


def test_neg_vetoes():
    feats = set(pedv_features(0).features) | {"v.rootword.result"}
    assert not rule_matches(C1, feats)


def test_or_must_be_satisfied():
    feats = {"dep.path.u<nsubj<v", "u.POS_gen.VERB"}
    assert not rule_matches(C1, feats)


def test_and_must_all_be_present():
    assert not rule_matches(C1, {"u.POS_gen.NOUN"})


def test_empty_or_means_no_constraint():
    r = Rule(id="X", label=CAUSE, and_set=frozenset({"a"}))
    assert rule_matches(r, {"a", "b"})


def test_classify_pedv_pairs(ruleset):
    verdict = ruleset.classify(pedv_features(0))
    assert (verdict.label, verdict.rule_id) == (CAUSE, "C1")
    verdict = ruleset.classify(pedv_features(13))
    assert (verdict.label, verdict.rule_id) == (EFFECT, "E1")


def test_classify_no_match_is_other(ruleset):
    verdict = ruleset.classify(set())
    assert verdict.label == OTHER and verdict.rule_id is None


def test_counters_track_matches(ruleset):
    ruleset.reset_counters()
    ruleset.classify(pedv_features(0))
    ruleset.classify(pedv_features(0))
    ruleset.classify(pedv_features(13))
    ruleset.classify(set())
    assert ruleset.counters == {"C1": 2, "E1": 1}
    assert sum(ruleset.counters.values()) == 3


def test_shipped_rules_load():
    rs = load_default_rules()
    assert len(rs) == 54
    assert len(rs.by_label(CAUSE)) == 33
    assert len(rs.by_label(EFFECT)) == 21
    assert [r.priority for r in rs.rules] == list(range(54))
    # CAUSE rules precede EFFECT rules
    labels = [r.label for r in rs.rules]
    assert labels == [CAUSE] * 33 + [EFFECT] * 21


def test_rule_file_round_trip():
    rs = load_default_rules()
    again = load_rules(serialize_rules(rs))
    assert [(r.id, r.label, r.and_set, r.or_set, r.neg_set) for r in rs.rules] == [
        (r.id, r.label, r.and_set, r.or_set, r.neg_set) for r in again.rules
    ]


def test_empty_and_set_rejected():
    with pytest.raises(RuleError):
        load_rules("RULE X CAUSE\nOR: u.POS_gen.NOUN\n")


def test_duplicate_id_rejected():
    text = "RULE X CAUSE\nAND: ancestor.v.u\n\nRULE X EFFECT\nAND: ancestor.u.v\n"
    with pytest.raises(RuleError):
        load_rules(text)


def test_unknown_label_rejected():
    with pytest.raises(RuleError):
        load_rules("RULE X MAYBE\nAND: ancestor.v.u\n")


def test_unknown_feature_family_is_load_error():
    with pytest.raises(RuleError) as err:
        load_rules("RULE X CAUSE\nAND: v.shape.xxxx\n")
    assert "line 2" in str(err.value)


def test_first_match_wins_truncation(ruleset):
    """Dropping every rule after the matched one never changes a label."""
    feats = pedv_features(13)
    verdict = ruleset.classify(feats)
    matched_at = next(i for i, r in enumerate(ruleset.rules) if r.id == verdict.rule_id)
    truncated = RuleSet(ruleset.rules[: matched_at + 1])
    again = truncated.classify(feats)
    assert (again.label, again.rule_id) == (verdict.label, verdict.rule_id)


def test_decision_list_deterministic(ruleset):
    feats = pedv_features(0)
    first = ruleset.classify(feats)
    for _ in range(5):
        assert ruleset.classify(feats) == first


def test_neg_monotonicity():
    """Adding one feature can break a match only through NEG and create
    one only through AND/OR."""
    rng = random.Random(5)
    universe = [f"f{i}" for i in range(8)]
    for _ in range(200):
        and_set = frozenset(rng.sample(universe, rng.randrange(1, 3)))
        or_set = frozenset(rng.sample(universe, rng.randrange(0, 3))) - and_set
        neg_set = frozenset(rng.sample(universe, rng.randrange(0, 3))) - and_set - or_set
        rule = Rule(id="r", label=CAUSE, and_set=and_set, or_set=or_set, neg_set=neg_set)
        feats = set(rng.sample(universe, rng.randrange(0, 6)))
        extra = rng.choice(universe)
        before = rule_matches(rule, feats)
        after = rule_matches(rule, feats | {extra})
        if before and not after:
            assert extra in neg_set
        if not before and after:
            assert extra in and_set | or_set


def test_coverage_report_fresh_and_fractions(ruleset):
    ruleset.reset_counters()
    assert all(row.count == 0 for row in rule_coverage_report(ruleset))
    ruleset.merge_counters({"C1": 9, "C2": 1, "E1": 4})
    rows = {r.rule_id: r for r in rule_coverage_report(ruleset)}
    assert rows["C1"].fraction == pytest.approx(0.9)
    assert rows["C2"].fraction == pytest.approx(0.1)
    assert rows["E1"].fraction == pytest.approx(1.0)
    ordered = rule_coverage_report(ruleset)
    assert [r.count for r in ordered] == sorted((r.count for r in ordered), reverse=True)


def test_sets_must_be_disjoint():
    with pytest.raises(RuleError):
        Rule(id="x", label=CAUSE, and_set=frozenset({"a"}), neg_set=frozenset({"a"}))
