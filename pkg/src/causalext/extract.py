"""Phrase expansion, triplet formation and the per-sentence pipeline.

A labeled headword is expanded to the complete subtree below it, minus
configured dependency branches (punct/appos/advcl by default) and minus
anything at or beyond the trigger word when the trigger sits inside the
subtree. Cause and effect headword sets are combined by cross product,
one triplet per pair, and negation/uncertainty tokens hanging off the
trigger are attached to every triplet of that trigger.
"""

from __future__ import annotations

import dataclasses
import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .conllu import Corpus
from .features import candidate_headwords, generate_features
from .lexicon import TriggerMatch, find_triggers
from .rules import CAUSE, EFFECT, RuleSet
from .tree import ParsedSentence

log = logging.getLogger(__name__)

DEFAULT_EXCLUDED_DEPS = frozenset({"punct", "appos", "advcl"})
DEFAULT_UNCERTAINTY_WORDS = frozenset({"may", "might", "would", "could"})


@dataclass(frozen=True)
class ExpansionConfig:
    excluded_deps: frozenset[str] = DEFAULT_EXCLUDED_DEPS
    clamp_at_trigger: bool = True
    uncertainty_words: frozenset[str] = DEFAULT_UNCERTAINTY_WORDS


@dataclass(frozen=True)
class Phrase:
    head: int
    token_indices: tuple[int, ...]
    text: str


@dataclass(frozen=True)
class CETriplet:
    doc_id: str
    sent_id: str
    trigger: TriggerMatch
    trigger_text: str
    cause: Phrase
    effect: Phrase
    cause_rule_id: str
    effect_rule_id: str
    negation: tuple[int, str] | None = None
    uncertainty: tuple[int, str] | None = None

    def to_dict(self) -> dict:
        """JSON-ready form; field names are a stable output contract."""
        return {
            "doc_id": self.doc_id,
            "sent_id": self.sent_id,
            "trigger": {
                "text": self.trigger_text,
                "lemma": self.trigger.entry.canonical,
                "anchor_index": self.trigger.anchor,
                "span": [self.trigger.start, self.trigger.end],
            },
            "cause": {
                "head_index": self.cause.head,
                "indices": list(self.cause.token_indices),
                "text": self.cause.text,
            },
            "effect": {
                "head_index": self.effect.head,
                "indices": list(self.effect.token_indices),
                "text": self.effect.text,
            },
            "negation": None
            if self.negation is None
            else {"index": self.negation[0], "text": self.negation[1]},
            "uncertainty": None
            if self.uncertainty is None
            else {"index": self.uncertainty[0], "text": self.uncertainty[1]},
            "cause_rule_id": self.cause_rule_id,
            "effect_rule_id": self.effect_rule_id,
        }


def expand_phrase(sent: ParsedSentence, head: int, trigger: int, cfg: ExpansionConfig) -> Phrase:
    """Expand a headword into its phrase.

    Tokens come from the subtree under ``head`` with configured branches
    pruned. When the trigger itself descends from the headword, the
    phrase is clamped so it never includes the trigger or reaches past
    it: everything at or beyond the trigger index on the trigger's side
    of the head is dropped.
    """
    if head == trigger:
        raise ValueError("phrase head cannot be the trigger token")
    indices = sent.subtree(head, cfg.excluded_deps)
    if cfg.clamp_at_trigger and trigger in sent.subtree(head):
        if trigger > head:
            indices = {i for i in indices if i < trigger}
        else:
            indices = {i for i in indices if i > trigger}
    ordered = tuple(sorted(indices))
    text = " ".join(sent.tokens[i].text for i in ordered)
    return Phrase(head, ordered, text)


def extract_negation(sent: ParsedSentence, trigger: int) -> int | None:
    """Leftmost child of the trigger attached with dep neg, if any."""
    for child in sent.children(trigger):
        if sent.tokens[child].dep == "neg":
            return child
    return None


def extract_uncertainty(sent: ParsedSentence, trigger: int, cfg: ExpansionConfig) -> int | None:
    """Leftmost aux child of the trigger whose surface is an
    uncertainty-indicating word, if any."""
    for child in sent.children(trigger):
        tok = sent.tokens[child]
        if tok.dep == "aux" and tok.lower in cfg.uncertainty_words:
            return child
    return None


def form_triplets(trigger: TriggerMatch, causes, effects, sent: ParsedSentence, cfg: ExpansionConfig) -> list[CETriplet]:
    """Cross product of cause and effect headwords for one trigger.

    ``causes`` and ``effects`` are (head index, rule id) lists, already
    unique by head. Empty either side means no triplets; pairs sharing
    the same head are dropped.
    """
    trigger_text = " ".join(sent.tokens[i].text for i in trigger.span)
    out = []
    for c_head, c_rule in causes:
        for e_head, e_rule in effects:
            if c_head == e_head:
                continue
            out.append(
                CETriplet(
                    doc_id=sent.doc_id,
                    sent_id=sent.sent_id,
                    trigger=trigger,
                    trigger_text=trigger_text,
                    cause=expand_phrase(sent, c_head, trigger.anchor, cfg),
                    effect=expand_phrase(sent, e_head, trigger.anchor, cfg),
                    cause_rule_id=c_rule,
                    effect_rule_id=e_rule,
                )
            )
    return out


def extract_sentence(sent: ParsedSentence, lexicon, rules: RuleSet, cfg: ExpansionConfig = ExpansionConfig()) -> list[CETriplet]:
    """Run the full pipeline on one sentence.

    Triggers are located, every (trigger, candidate headword) pair is
    classified, cause/effect sets are crossed per trigger, and
    negation/uncertainty arguments are attached. Output order is fixed:
    trigger index, then cause head, then effect head.
    """
    triggers = find_triggers(sent, lexicon)
    if not triggers:
        return []
    candidates = sorted(candidate_headwords(sent))
    out = []
    for trig in triggers:
        causes = []
        effects = []
        for u in candidates:
            if u == trig.anchor:
                continue
            verdict = rules.classify(generate_features(sent, trig.anchor, u))
            if verdict.label == CAUSE:
                causes.append((u, verdict.rule_id))
            elif verdict.label == EFFECT:
                effects.append((u, verdict.rule_id))
        triplets = form_triplets(trig, causes, effects, sent, cfg)
        if not triplets:
            continue
        neg = extract_negation(sent, trig.anchor)
        unc = extract_uncertainty(sent, trig.anchor, cfg)
        neg_arg = (neg, sent.tokens[neg].text) if neg is not None else None
        unc_arg = (unc, sent.tokens[unc].text) if unc is not None else None
        for t in triplets:
            out.append(dataclasses.replace(t, negation=neg_arg, uncertainty=unc_arg))
    out.sort(key=lambda t: (t.trigger.anchor, t.cause.head, t.effect.head))
    return out


@dataclass
class ExtractionResult:
    triplets: list[CETriplet] = field(default_factory=list)
    sentences: int = 0
    triggers: int = 0
    counters: Counter = field(default_factory=Counter)


def _extract_chunk(args):
    sentences, lexicon, rules_list, cfg = args
    rules = RuleSet(rules_list)
    result = ExtractionResult()
    for sent in sentences:
        result.sentences += 1
        try:
            result.triggers += len(find_triggers(sent, lexicon))
            result.triplets.extend(extract_sentence(sent, lexicon, rules, cfg))
        except Exception:  # corpus runs survive one bad sentence
            log.exception("extraction failed on %s/%s; skipping", sent.doc_id, sent.sent_id)
    result.counters = rules.counters
    return result


def extract_corpus(corpus: Corpus, lexicon, rules: RuleSet, cfg: ExpansionConfig = ExpansionConfig(), jobs: int = 1) -> ExtractionResult:
    """Extract over a whole corpus, optionally fanning sentences out to
    worker processes. Output order and rule counters are independent of
    the parallelism degree: sentences keep corpus order and per-worker
    counters are merged."""
    sentences = list(corpus.sentences())
    if jobs <= 1 or len(sentences) < 2:
        result = _extract_chunk((sentences, lexicon, rules.rules, cfg))
        rules.merge_counters(result.counters)
        return result
    chunk_size = (len(sentences) + jobs - 1) // jobs
    chunks = [sentences[i : i + chunk_size] for i in range(0, len(sentences), chunk_size)]
    merged = ExtractionResult()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_extract_chunk, [(c, lexicon, rules.rules, cfg) for c in chunks]):
            merged.triplets.extend(part.triplets)
            merged.sentences += part.sentences
            merged.triggers += part.triggers
            merged.counters.update(part.counters)
    rules.merge_counters(merged.counters)
    return merged


def triplets_to_jsonl(triplets) -> str:
    lines = [json.dumps(t.to_dict(), ensure_ascii=False, separators=(",", ":")) for t in triplets]
    return "\n".join(lines) + ("\n" if lines else "")
