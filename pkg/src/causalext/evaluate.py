"""Scoring extracted triplets against gold-standard predications.

Matching is deliberately loose: a prediction matches a gold predication
when its cause phrase shares at least one content word with the gold
subject text and its effect phrase shares at least one with the gold
object text; trigger and predicate identity are ignored. A gold
predication with at least one matching prediction is a true positive
(counted once), otherwise a false negative; a prediction matching no
gold predication is a false positive.

Also here: aggregation of manual 0/1/2 correctness scores into strict
and lenient precision, and the knowledge-base novelty filter.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

# Closed-class words excluded from overlap tests: articles, prepositions,
# conjunctions, pronouns and copulas.
STOPWORDS = frozenset(
    """
    a an the
    of in on at by for with to from into during after before between under
    over through about against among within without upon toward towards per
    via off near
    and or but nor so yet because although though while whereas if than as
    whether since unless until
    i you he she it we they me him her us them my your his its our their
    this that these those which who whom whose what
    is are was were be been being am
    """.split()
)

# Relation names treated as causal when filtering gold predications.
CAUSAL_PREDICATES = frozenset(
    "AFFECTS CAUSES STIMULATES INHIBITS DISRUPTS PRODUCES PRECEDES COMPLICATES PREDISPOSES PREVENTS".split()
)

_WORD_RE = re.compile(r"[a-z0-9]+(?:[-'][a-z0-9]+)*")


def content_words(text: str) -> set[str]:
    """Lowercased alphanumeric words (hyphens kept inside words) minus
    stopwords."""
    return {w for w in _WORD_RE.findall(text.lower()) if w not in STOPWORDS}


@dataclass(frozen=True)
class GoldPredication:
    sent_id: str
    predicate: str
    subject_text: str
    object_text: str
    subject_cui: str | None = None
    object_cui: str | None = None

    def __post_init__(self):
        if not self.subject_text or not self.object_text:
            raise ValueError("gold predication needs non-empty subject and object texts")


@dataclass(frozen=True)
class EvalReport:
    tp: int
    fp: int
    fn: int
    precision: float
    recall: float
    f1: float
    degenerate: bool = False  # set when any ratio was 0/0

    def to_dict(self):
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }


@dataclass(frozen=True)
class ScoreRecord:
    triplet_line: int
    score: int

    def __post_init__(self):
        if self.score not in (0, 1, 2):
            raise ValueError(f"score must be 0, 1 or 2, got {self.score}")


def _pred_texts(pred):
    """Accepts CETriplet objects or their JSONL dict form."""
    if isinstance(pred, dict):
        return pred["sent_id"], pred["cause"]["text"], pred["effect"]["text"]
    return pred.sent_id, pred.cause.text, pred.effect.text


def triplet_matches_gold(pred, gold: GoldPredication) -> bool:
    """Content-word overlap on both argument slots; same sentence only."""
    sent_id, cause_text, effect_text = _pred_texts(pred)
    if sent_id != gold.sent_id:
        raise ValueError(f"sentence mismatch: {sent_id!r} vs {gold.sent_id!r}")
    return bool(
        content_words(cause_text) & content_words(gold.subject_text)
        and content_words(effect_text) & content_words(gold.object_text)
    )


def report_from_counts(tp: int, fp: int, fn: int) -> EvalReport:
    degenerate = False
    if tp + fp > 0:
        precision = tp / (tp + fp)
    else:
        precision, degenerate = 0.0, True
    if tp + fn > 0:
        recall = tp / (tp + fn)
    else:
        recall, degenerate = 0.0, True
    if precision + recall > 0:
        f1 = 2 * precision * recall / (precision + recall)
    else:
        f1, degenerate = 0.0, True
    return EvalReport(tp, fp, fn, precision, recall, f1, degenerate)


def evaluate(predicted, gold, causal_predicates=CAUSAL_PREDICATES) -> EvalReport:
    """Count TP/FN per gold predication and FP per prediction.

    ``gold`` is filtered to the causal predicate set first. One gold
    predication matched by several predictions still counts a single TP,
    and each of those predictions is non-FP.
    """
    gold = [g for g in gold if g.predicate.upper() in causal_predicates]
    by_sent = {}
    for g in gold:
        by_sent.setdefault(g.sent_id, []).append(g)

    tp = fn = 0
    matched_preds = set()
    for g in gold:
        hit = False
        for idx, pred in enumerate(predicted):
            if _pred_texts(pred)[0] != g.sent_id:
                continue
            if triplet_matches_gold(pred, g):
                hit = True
                matched_preds.add(idx)
        if hit:
            tp += 1
        else:
            fn += 1

    fp = 0
    for idx, pred in enumerate(predicted):
        if idx in matched_preds:
            continue
        sent_id = _pred_texts(pred)[0]
        if not any(triplet_matches_gold(pred, g) for g in by_sent.get(sent_id, [])):
            fp += 1
    return report_from_counts(tp, fp, fn)


def strict_lenient_precision(scores) -> tuple[float, float]:
    """strict = share scored fully correct; lenient = total score over
    the maximum possible (2 per triplet)."""
    records = list(scores)
    if not records:
        raise ValueError("cannot aggregate an empty score list")
    values = [r.score if isinstance(r, ScoreRecord) else int(r) for r in records]
    for v in values:
        if v not in (0, 1, 2):
            raise ValueError(f"score must be 0, 1 or 2, got {v}")
    n = len(values)
    strict = sum(1 for v in values if v == 2) / n
    lenient = sum(values) / (2 * n)
    return strict, lenient


def kb_novel_triplets(triplets, kb_causal_sentences) -> list:
    """Triplets from sentences the knowledge base has no causal
    predication for."""
    kb = set(kb_causal_sentences)
    return [t for t in triplets if _pred_texts(t)[0] not in kb]


# --- file formats -------------------------------------------------------


def load_gold_tsv(source) -> list[GoldPredication]:
    """Gold file: tab-separated sent_id, predicate, subject text, object
    text, and optional subject/object concept ids."""
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = list(source)
    out = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) < 4:
            raise ValueError(f"gold line {line_no}: expected at least 4 tab-separated fields")
        try:
            out.append(
                GoldPredication(
                    sent_id=cols[0].strip(),
                    predicate=cols[1].strip(),
                    subject_text=cols[2].strip(),
                    object_text=cols[3].strip(),
                    subject_cui=cols[4].strip() or None if len(cols) > 4 else None,
                    object_cui=cols[5].strip() or None if len(cols) > 5 else None,
                )
            )
        except ValueError as e:
            raise ValueError(f"gold line {line_no}: {e}") from None
    return out


def load_scores(source) -> list[ScoreRecord]:
    """Score file: tab-separated triplet line number and 0/1/2 score."""
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = list(source)
    out = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise ValueError(f"score line {line_no}: expected 2 tab-separated fields")
        try:
            out.append(ScoreRecord(int(cols[0]), int(cols[1])))
        except ValueError as e:
            raise ValueError(f"score line {line_no}: {e}") from None
    return out


def load_predictions_jsonl(source) -> list[dict]:
    """Read back the extractor's JSONL output."""
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = list(source)
    out = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as e:
            raise ValueError(f"predictions line {line_no}: {e}") from None
        for key in ("doc_id", "sent_id", "trigger", "cause", "effect"):
            if key not in rec:
                raise ValueError(f"predictions line {line_no}: missing field {key!r}")
        out.append(rec)
    return out
