import json

import pytest

from causalext.extract import (
    ExpansionConfig,
    expand_phrase,
    extract_corpus,
    extract_negation,
    extract_sentence,
    extract_uncertainty,
    form_triplets,
    triplets_to_jsonl,
)
from causalext.features import generate_features
from causalext.lexicon import find_triggers
from causalext.rules import RuleSet, rule_matches
from conftest import fixture_sentence, load_fixture, make_sentence, synthetic_corpus

CFG = ExpansionConfig()


def test_expand_simple_noun_phrase(pedv):
    phrase = expand_phrase(pedv, head=13, trigger=8, cfg=CFG)
    assert phrase.text == "a highly contagious enteric disease"
    assert phrase.head == 13


def test_expand_leaf(pedv):
    phrase = expand_phrase(pedv, head=0, trigger=8, cfg=CFG)
    assert phrase.token_indices == (0,)
    assert phrase.text == "PEDV"


def test_expand_trigger_outside_subtree():
    sent = fixture_sentence("mmulv.conllu")
    phrase = expand_phrase(sent, head=1, trigger=5, cfg=CFG)
    assert phrase.text == "MMuLV infection of non-transgenic mice"


def test_expand_clamps_at_trigger():
    sent = fixture_sentence("headword_samples.conllu", 1)
    # headword "leukemia" dominates the trigger "caused"; everything from
    # the trigger rightward is dropped
    phrase = expand_phrase(sent, head=3, trigger=8, cfg=CFG)
    assert phrase.text == "Childhood acute myeloid leukemia with bone marrow eosinophilia"
    assert all(i < 8 for i in phrase.token_indices)


def test_expand_clamp_leftward():
    # trigger precedes the head inside its own subtree: low indices drop
    sent = make_sentence(
        [
            ("caused", "cause", "VBN", "VERB", 1, "amod"),
            ("damage", "damage", "NN", "NOUN", None, "root"),
            ("everywhere", "everywhere", "RB", "ADV", 1, "advmod"),
        ]
    )
    phrase = expand_phrase(sent, head=1, trigger=0, cfg=CFG)
    assert phrase.token_indices == (1, 2)


def test_expand_respects_exclusions():
    sent = fixture_sentence("headword_samples.conllu", 3)
    # appos branch "( morphologic and immunologic )" is pruned
    phrase = expand_phrase(sent, head=1, trigger=8, cfg=CFG)
    assert phrase.text == "Monocytic maturation"


def test_expand_head_equals_trigger_rejected(pedv):
    with pytest.raises(ValueError):
        expand_phrase(pedv, head=8, trigger=8, cfg=CFG)


def test_negation_found():
    sent = fixture_sentence("safrole_negation.conllu")
    idx = extract_negation(sent, trigger=8)
    assert idx is not None and sent.tokens[idx].text == "not"


def test_negation_absent(pedv):
    assert extract_negation(pedv, trigger=8) is None


def test_negation_leftmost_of_several():
    sent = make_sentence(
        [
            ("never", "never", "RB", "PART", 2, "neg"),
            ("not", "not", "RB", "PART", 2, "neg"),
            ("grew", "grow", "VBD", "VERB", None, "root"),
        ]
    )
    assert extract_negation(sent, trigger=2) == 0


def test_uncertainty_found():
    sent = fixture_sentence("glucocorticoids_uncertainty.conllu")
    idx = extract_uncertainty(sent, trigger=2, cfg=CFG)
    assert idx is not None and sent.tokens[idx].text == "might"


def test_uncertainty_word_set_is_respected(pedv):
    # "can" is an aux child but not in the default uncertainty set
    assert extract_uncertainty(pedv, trigger=8, cfg=CFG) is None
    wider = ExpansionConfig(uncertainty_words=frozenset({"can"}))
    assert extract_uncertainty(pedv, trigger=8, cfg=wider) == 7


def test_uncertainty_no_aux_child():
    sent = fixture_sentence("mmulv.conllu")
    assert extract_uncertainty(sent, trigger=5, cfg=CFG) is None


def test_form_triplets_cross_product(pedv, lexicon):
    trig = find_triggers(pedv, lexicon)[0]
    causes = [(0, "C1"), (5, "C2")]
    effects = [(13, "E1"), (11, "E2")]
    out = form_triplets(trig, causes, effects, pedv, CFG)
    assert len(out) == 4
    assert {(t.cause.head, t.effect.head) for t in out} == {(0, 13), (0, 11), (5, 13), (5, 11)}


def test_form_triplets_empty_side(pedv, lexicon):
    trig = find_triggers(pedv, lexicon)[0]
    assert form_triplets(trig, [], [(13, "E1")], pedv, CFG) == []


def test_form_triplets_drops_shared_head(pedv, lexicon):
    trig = find_triggers(pedv, lexicon)[0]
    out = form_triplets(trig, [(0, "C1")], [(0, "E1"), (13, "E1")], pedv, CFG)
    assert len(out) == 1 and out[0].effect.head == 13


def test_extract_pedv_end_to_end(pedv, lexicon, ruleset):
    triplets = extract_sentence(pedv, lexicon, ruleset)
    assert len(triplets) == 1
    t = triplets[0]
    assert t.cause.text == "PEDV"
    assert t.trigger_text == "cause"
    assert t.effect.text == "a highly contagious enteric disease"
    assert (t.cause_rule_id, t.effect_rule_id) == ("C1", "E1")
    assert t.negation is None and t.uncertainty is None


def test_extract_mmulv_end_to_end(lexicon, ruleset):
    sent = fixture_sentence("mmulv.conllu")
    triplets = extract_sentence(sent, lexicon, ruleset)
    assert len(triplets) == 1
    assert triplets[0].cause.text == "MMuLV infection of non-transgenic mice"
    assert triplets[0].effect.text == "primarily mature T cell lymphomas"


def test_extract_negation_attached(lexicon, ruleset):
    sent = fixture_sentence("safrole_negation.conllu")
    (t,) = extract_sentence(sent, lexicon, ruleset)
    assert t.negation == (7, "not")
    assert t.cause.text == "Overnight incubation with 1 microM safrole"
    assert t.effect.text == "cell proliferation"


def test_extract_uncertainty_attached(lexicon, ruleset):
    sent = fixture_sentence("glucocorticoids_uncertainty.conllu")
    (t,) = extract_sentence(sent, lexicon, ruleset)
    assert t.uncertainty == (1, "might")
    assert t.cause.text == "Glucocorticoids"
    assert t.effect.text == "the apoptosis of some types of AML cells"


def test_trigger_without_both_arguments_yields_nothing(lexicon, ruleset):
    # a trigger with a cause-side match only
    sent = make_sentence(
        [
            ("Drugs", "drug", "NNS", "NOUN", 1, "nsubj"),
            ("induce", "induce", "VBP", "VERB", None, "root"),
            (".", ".", ".", "PUNCT", 1, "punct"),
        ]
    )
    assert extract_sentence(sent, lexicon, ruleset) == []


def test_passive_and_agent_rules(lexicon, ruleset):
    sent = fixture_sentence("headword_samples.conllu", 3)
    triplets = extract_sentence(sent, lexicon, ruleset)
    assert len(triplets) == 1
    t = triplets[0]
    assert t.cause.text == "TNF-alpha" and t.cause_rule_id == "C3"
    assert t.effect.text == "Monocytic maturation" and t.effect_rule_id == "E3"


def test_relative_clause_rules(lexicon, ruleset):
    sent = fixture_sentence("headword_samples.conllu", 0)
    triplets = extract_sentence(sent, lexicon, ruleset)
    assert len(triplets) == 1
    t = triplets[0]
    assert t.cause_rule_id == "C8"
    assert t.effect_rule_id == "E6"
    assert t.cause.head == 19  # patients
    assert t.effect.head == 25  # expression


def test_agent_cause_rule_on_blocked(lexicon, ruleset):
    sent = fixture_sentence("headword_samples.conllu", 2)
    triplets = extract_sentence(sent, lexicon, ruleset)
    by_cause = {t.cause.text: t for t in triplets}
    blocked = by_cause.get("a caspase-8-selective inhibitor")
    assert blocked is not None and blocked.cause_rule_id == "C3"


def test_output_order_is_stable(lexicon, ruleset):
    sent = fixture_sentence("headword_samples.conllu", 2)
    triplets = extract_sentence(sent, lexicon, ruleset)
    keys = [(t.trigger.anchor, t.cause.head, t.effect.head) for t in triplets]
    assert keys == sorted(keys)


def test_phrases_never_contain_trigger_anchor(lexicon, ruleset):
    for name in [
        "pedv.conllu",
        "mmulv.conllu",
        "safrole_negation.conllu",
        "glucocorticoids_uncertainty.conllu",
        "headword_samples.conllu",
        "calcitonin.conllu",
        "stlv_lines.conllu",
    ]:
        for sent in load_fixture(name).sentences():
            for t in extract_sentence(sent, lexicon, ruleset):
                assert t.trigger.anchor not in t.cause.token_indices
                assert t.trigger.anchor not in t.effect.token_indices


def test_excluded_dep_never_crossed(lexicon, ruleset):
    """No phrase token's upward path to the phrase head crosses an
    excluded dependency edge."""
    corpus = synthetic_corpus(150, seed=42)
    for sent in corpus.sentences():
        for t in extract_sentence(sent, lexicon, RuleSet(ruleset.rules)):
            for phrase in (t.cause, t.effect):
                for i in phrase.token_indices:
                    j = i
                    while j != phrase.head:
                        assert sent.tokens[j].dep not in CFG.excluded_deps
                        j = sent.tokens[j].head


def test_cross_product_cardinality_and_replay(lexicon, ruleset):
    """Per trigger, the number of triplets equals |U_C x U_E| minus
    shared heads, and every recorded rule id replays true."""
    by_id = {r.id: r for r in ruleset.rules}
    corpus = synthetic_corpus(200, seed=7)
    for sent in corpus.sentences():
        rs = RuleSet(ruleset.rules)
        triplets = extract_sentence(sent, lexicon, rs)
        per_trigger = {}
        for t in triplets:
            per_trigger.setdefault(t.trigger.anchor, []).append(t)
        for anchor, ts in per_trigger.items():
            causes = {t.cause.head for t in ts}
            effects = {t.effect.head for t in ts}
            expected = sum(1 for c in causes for e in effects if c != e)
            assert len(ts) == expected
            for t in ts:
                fc = generate_features(sent, anchor, t.cause.head)
                fe = generate_features(sent, anchor, t.effect.head)
                assert rule_matches(by_id[t.cause_rule_id], fc)
                assert rule_matches(by_id[t.effect_rule_id], fe)


def test_rerun_is_byte_identical(lexicon, ruleset):
    corpus = load_fixture("headword_samples.conllu")
    a = triplets_to_jsonl(extract_corpus(corpus, lexicon, RuleSet(ruleset.rules)).triplets)
    b = triplets_to_jsonl(extract_corpus(corpus, lexicon, RuleSet(ruleset.rules)).triplets)
    assert a == b


def test_parallel_matches_sequential(lexicon, ruleset):
    corpus = synthetic_corpus(120, seed=3)
    seq_rules = RuleSet(ruleset.rules)
    par_rules = RuleSet(ruleset.rules)
    seq = extract_corpus(corpus, lexicon, seq_rules, jobs=1)
    par = extract_corpus(corpus, lexicon, par_rules, jobs=4)
    assert triplets_to_jsonl(seq.triplets) == triplets_to_jsonl(par.triplets)
    assert seq.counters == par.counters
    assert seq_rules.counters == par_rules.counters
    assert (seq.sentences, seq.triggers) == (par.sentences, par.triggers)


def test_jsonl_schema(pedv, lexicon, ruleset):
    (t,) = extract_sentence(pedv, lexicon, ruleset)
    rec = json.loads(triplets_to_jsonl([t]))
    assert rec["doc_id"] == "pedv" and rec["sent_id"] == "pedv-s1"
    assert rec["trigger"] == {"text": "cause", "lemma": "cause", "anchor_index": 8, "span": [8, 9]}
    assert rec["cause"]["head_index"] == 0 and rec["cause"]["text"] == "PEDV"
    assert rec["effect"]["indices"] == [9, 10, 11, 12, 13]
    assert rec["negation"] is None and rec["uncertainty"] is None
    assert rec["cause_rule_id"] == "C1" and rec["effect_rule_id"] == "E1"
