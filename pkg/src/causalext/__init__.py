"""Rule-based cause-effect relation extraction over dependency parses.

The pipeline turns dependency-parsed sentences (CoNLL-U) into
(cause phrase, trigger, effect phrase) triplets: a trigger lexicon
proposes candidate causal triggers, a hand-written decision list labels
(trigger, headword) pairs as CAUSE/EFFECT/OTHER from dependency-tree
features, labeled headwords expand to full phrases, and
negation/uncertainty markers on the trigger are attached as extra
arguments. An evaluation harness scores triplets against gold
predications by content-word overlap.
"""

from importlib import resources

from .conllu import Corpus, parse_conllu, load_file, serialize_corpus, serialize_sentence
from .evaluate import (
    CAUSAL_PREDICATES,
    EvalReport,
    GoldPredication,
    ScoreRecord,
    content_words,
    evaluate,
    kb_novel_triplets,
    strict_lenient_precision,
    triplet_matches_gold,
)
from .extract import (
    CETriplet,
    ExpansionConfig,
    Phrase,
    expand_phrase,
    extract_corpus,
    extract_negation,
    extract_sentence,
    extract_uncertainty,
    form_triplets,
    triplets_to_jsonl,
)
from .features import FeatureSet, candidate_headwords, generate_features, validate_feature
from .lexicon import LexiconEntry, TriggerMatch, find_triggers, load_lexicon, trigger_variants
from .rules import PairLabel, Rule, RuleSet, classify_pair, load_rules, rule_coverage_report, rule_matches
from .tree import ROOT, DepPath, ParsedSentence, Token, parse_path, serialize_path

__version__ = "0.1.0"


def default_lexicon_path():
    return resources.files("causalext").joinpath("data/lexicon.tsv")


def default_rules_path():
    return resources.files("causalext").joinpath("data/rules.txt")


def load_default_lexicon():
    with default_lexicon_path().open(encoding="utf-8") as f:
        return load_lexicon(f)


def load_default_rules():
    from .rules import load_rules as _load

    with default_rules_path().open(encoding="utf-8") as f:
        return _load(f)
