"""Decision-list rules for labeling (trigger, headword) pairs.

Each rule carries three feature sets: AND (all must be present,
non-empty), OR (at least one must be present, when non-empty) and NEG
(none may be present). Rules are kept in a fixed priority order and the
first match wins; a pair matching no rule is labeled OTHER.

Rule file format: UTF-8, records separated by blank lines, '#' comments.

    RULE C1 CAUSE
    AND: dep.path.u<nsubj<v
    OR: u.POS_gen.NOUN, u.POS_gen.PROPN
    NEG: v.rootword.result
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .features import validate_feature

CAUSE = "CAUSE"
EFFECT = "EFFECT"
OTHER = "OTHER"


class RuleError(ValueError):
    pass


@dataclass(frozen=True)
class Rule:
    id: str
    label: str
    and_set: frozenset[str]
    or_set: frozenset[str] = frozenset()
    neg_set: frozenset[str] = frozenset()
    priority: int = 0

    def __post_init__(self):
        if not self.and_set:
            raise RuleError(f"rule {self.id}: AND set must be non-empty")
        if self.label not in (CAUSE, EFFECT):
            raise RuleError(f"rule {self.id}: unknown label {self.label!r}")
        if self.and_set & self.or_set or self.and_set & self.neg_set or self.or_set & self.neg_set:
            raise RuleError(f"rule {self.id}: AND/OR/NEG sets must be disjoint")


@dataclass(frozen=True)
class PairLabel:
    label: str
    rule_id: str | None = None


def rule_matches(rule: Rule, features) -> bool:
    """True iff all AND features, one OR feature (when any are given)
    and no NEG feature are present. ``features`` is anything supporting
    ``in`` over feature strings."""
    if not all(f in features for f in rule.and_set):
        return False
    if rule.or_set and not any(f in features for f in rule.or_set):
        return False
    if any(f in features for f in rule.neg_set):
        return False
    return True


class RuleSet:
    """Priority-ordered rules plus per-rule match counters."""

    def __init__(self, rules):
        self.rules = list(rules)
        ids = [r.id for r in self.rules]
        if len(set(ids)) != len(ids):
            raise RuleError("duplicate rule ids")
        for want, rule in enumerate(self.rules):
            if rule.priority != want:
                raise RuleError(f"rule {rule.id}: priority {rule.priority}, expected {want}")
        self.counters = Counter()

    def __len__(self):
        return len(self.rules)

    def by_label(self, label):
        return [r for r in self.rules if r.label == label]

    def classify(self, features) -> PairLabel:
        """First matching rule in priority order assigns the label and
        bumps its counter; no match means OTHER."""
        for rule in self.rules:
            if rule_matches(rule, features):
                self.counters[rule.id] += 1
                return PairLabel(rule.label, rule.id)
        return PairLabel(OTHER)

    def reset_counters(self):
        self.counters = Counter()

    def merge_counters(self, other_counts):
        for rule_id, n in other_counts.items():
            self.counters[rule_id] += n


def classify_pair(rules: RuleSet, features) -> PairLabel:
    return rules.classify(features)


def load_rules(source) -> RuleSet:
    """Parse a rule file (string or line iterable) into a RuleSet.

    File order defines priority. Every feature string is validated
    against the feature grammar; unknown families are load errors, not
    silently never-matching features.
    """
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = list(source)

    rules = []
    current = None

    def finish():
        nonlocal current
        if current is None:
            return
        rid, label, sets, line_no = current
        try:
            rules.append(
                Rule(
                    id=rid,
                    label=label,
                    and_set=frozenset(sets["AND"]),
                    or_set=frozenset(sets["OR"]),
                    neg_set=frozenset(sets["NEG"]),
                    priority=len(rules),
                )
            )
        except RuleError as e:
            raise RuleError(f"line {line_no}: {e}") from None
        current = None

    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            finish()
            continue
        if line.startswith("RULE"):
            finish()
            parts = line.split()
            if len(parts) != 3:
                raise RuleError(f"line {line_no}: expected 'RULE <id> <CAUSE|EFFECT>'")
            current = (parts[1], parts[2], {"AND": [], "OR": [], "NEG": []}, line_no)
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().upper()
        if not sep or key not in ("AND", "OR", "NEG"):
            raise RuleError(f"line {line_no}: expected AND:/OR:/NEG: line, got {line!r}")
        if current is None:
            raise RuleError(f"line {line_no}: feature line outside a RULE record")
        for feat in rest.split(","):
            feat = feat.strip()
            if not feat:
                continue
            try:
                current[2][key].append(validate_feature(feat))
            except ValueError as e:
                raise RuleError(f"line {line_no}: {e}") from None
    finish()
    return RuleSet(rules)


def load_rules_file(path) -> RuleSet:
    with open(path, encoding="utf-8") as f:
        return load_rules(f)


def serialize_rules(rules: RuleSet) -> str:
    out = []
    for rule in rules.rules:
        out.append(f"RULE {rule.id} {rule.label}")
        out.append("AND: " + ", ".join(sorted(rule.and_set)))
        if rule.or_set:
            out.append("OR: " + ", ".join(sorted(rule.or_set)))
        if rule.neg_set:
            out.append("NEG: " + ", ".join(sorted(rule.neg_set)))
        out.append("")
    return "\n".join(out)


@dataclass(frozen=True)
class CoverageRow:
    rule_id: str
    label: str
    count: int
    fraction: float


def rule_coverage_report(rules: RuleSet) -> list[CoverageRow]:
    """Per-rule match counts with each count's share of its label's
    total, sorted by descending count."""
    totals = Counter()
    for rule in rules.rules:
        totals[rule.label] += rules.counters.get(rule.id, 0)
    rows = []
    for rule in rules.rules:
        n = rules.counters.get(rule.id, 0)
        frac = n / totals[rule.label] if totals[rule.label] else 0.0
        rows.append(CoverageRow(rule.id, rule.label, n, frac))
    rows.sort(key=lambda r: (-r.count, r.rule_id))
    return rows
