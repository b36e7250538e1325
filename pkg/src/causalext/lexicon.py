"""Causal-trigger lexicon loading and in-sentence trigger matching.

The shipped lexicon mixes domain-agnostic cue phrases (because, due,
as a result, ...) with domain-specific causal verbs (induce, inhibit,
up-regulate, ...). Each entry carries an explicit variant list because
nominal forms (induce -> induction) are not recoverable by
lemmatization; inflected forms are listed too so matching does not
depend on the upstream lemmatizer's quality.

Lexicon file format: UTF-8, one entry per line, tab-separated:
canonical, trigger class ("agnostic" or "specific"), comma-separated
variants (possibly empty). '#' starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .tree import ParsedSentence

AGNOSTIC = "agnostic"
SPECIFIC = "specific"


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class LexiconEntry:
    canonical: str
    trigger_class: str
    variants: tuple[str, ...] = ()
    is_mwe: bool = field(default=False)

    def __post_init__(self):
        object.__setattr__(self, "is_mwe", len(self.canonical.split()) > 1)


@dataclass(frozen=True)
class TriggerMatch:
    """A lexicon hit: contiguous token span [start, end) and the anchor
    token used as v in all pair features."""

    start: int
    end: int
    anchor: int
    entry: LexiconEntry

    @property
    def span(self):
        return range(self.start, self.end)


def trigger_variants(entry: LexiconEntry) -> set[str]:
    """All lowercased forms this entry matches, canonical included."""
    out = {entry.canonical.lower()}
    out.update(v.lower() for v in entry.variants)
    return out


def load_lexicon(source) -> list[LexiconEntry]:
    """Parse a lexicon file (string or line iterable) into entries."""
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = list(source)
    entries = []
    seen = set()
    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].rstrip("\n").rstrip()
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) < 2:
            raise LexiconError(f"line {line_no}: expected at least 2 tab-separated fields")
        canonical = cols[0].strip().lower()
        trigger_class = cols[1].strip().lower()
        variants = ()
        if len(cols) >= 3 and cols[2].strip():
            variants = tuple(v.strip().lower() for v in cols[2].split(",") if v.strip())
        if not canonical:
            raise LexiconError(f"line {line_no}: empty canonical form")
        if trigger_class not in (AGNOSTIC, SPECIFIC):
            raise LexiconError(f"line {line_no}: unknown trigger class {trigger_class!r}")
        if canonical in seen:
            raise LexiconError(f"line {line_no}: duplicate entry {canonical!r}")
        seen.add(canonical)
        entries.append(LexiconEntry(canonical, trigger_class, variants))
    return entries


def load_lexicon_file(path) -> list[LexiconEntry]:
    with open(path, encoding="utf-8") as f:
        return load_lexicon(f)


def _word_matches(tok, word):
    return tok.lower == word or tok.lemma.lower() == word


def _span_head(sent: ParsedSentence, start: int, end: int) -> int:
    """The span token whose parent lies outside the span (or the root)."""
    inside = set(range(start, end))
    for i in range(start, end):
        if sent.tokens[i].head not in inside:
            return i
    return start


@lru_cache(maxsize=8)
def _phrase_index(entries):
    """Matchable phrases bucketed by first word, built once per lexicon."""
    index = {}
    for entry in entries:
        for phrase in sorted(trigger_variants(entry)):
            words = tuple(phrase.split())
            index.setdefault(words[0], []).append((words, entry))
    return index


def find_triggers(sent: ParsedSentence, lexicon) -> list[TriggerMatch]:
    """Locate candidate causal triggers in one sentence.

    Single-word forms match a token by lemma or lowercased surface;
    multi-word forms match contiguous token runs, each word by surface
    with lemma fallback. Overlaps are resolved longest-match-first, then
    leftmost. Returned matches are sorted by span start.
    """
    index = _phrase_index(tuple(lexicon))
    found = set()
    for start, tok in enumerate(sent.tokens):
        for key in {tok.lower, tok.lemma.lower()}:
            for words, entry in index.get(key, ()):
                n = len(words)
                if start + n > len(sent):
                    continue
                if all(_word_matches(sent.tokens[start + k], words[k]) for k in range(n)):
                    found.add((start, n, entry))
    # longest first, then leftmost, then stable by canonical form
    candidates = sorted(found, key=lambda c: (-c[1], c[0], c[2].canonical))
    taken = set()
    picked = []
    for start, n, entry in candidates:
        span = set(range(start, start + n))
        if span & taken:
            continue
        taken |= span
        picked.append(
            TriggerMatch(start, start + n, _span_head(sent, start, start + n), entry)
        )
    picked.sort(key=lambda m: m.start)
    return picked
