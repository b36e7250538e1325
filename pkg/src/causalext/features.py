"""Candidate headword selection and per-pair feature strings.

For a trigger anchor v and a candidate headword u, a finite set of
canonical feature strings describes how the two tokens relate in the
sentence: lexical identity, POS, parent edges, ancestry, LCA, the
serialized dependency path, direct edges, per-label path membership and
the words sitting on the path.

A second, smaller group of families exists purely for rule matching
(children of v, the one-hop parent shortcut, label-agnostic direct
edges, and a copular-predicate shape). FeatureSet keeps those apart in
``rule_only`` so that ``features`` stays exactly the canonical grammar;
membership tests cover both groups.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .tree import ROOT, ParsedSentence, parse_path, serialize_path

# ClearNLP-style dependency labels (the scheme the shipped rules use),
# plus the synthetic "root" and the generic "dep" fallback.
DEP_LABELS = frozenset(
    """
    acl acomp advcl advmod agent amod appos attr aux auxpass case cc ccomp
    compound conj csubj csubjpass dative dep det dobj expl intj mark meta neg
    nmod npadvmod nsubj nsubjpass nummod oprd parataxis pcomp pobj poss
    preconj predet prep prt punct quantmod relcl root xcomp
    """.split()
)

UPOS_TAGS = frozenset(
    "ADJ ADP ADV AUX CCONJ CONJ DET INTJ NOUN NUM PART PRON PROPN PUNCT SCONJ SYM VERB X SPACE".split()
)

# Candidate headwords: verbs that are not auxiliaries, nouns that head a
# base noun phrase, and anything in a noun-like grammatical slot.
NOUNLIKE_DEPS = frozenset({"nsubj", "nsubjpass", "dobj", "pobj"})


def candidate_headwords(sent: ParsedSentence) -> set[int]:
    out = set()
    for tok in sent.tokens:
        if tok.pos_gen == "VERB" and tok.dep != "aux":
            out.add(tok.index)
        elif tok.pos_gen in ("NOUN", "PROPN") and tok.dep != "compound":
            out.add(tok.index)
        elif tok.dep in NOUNLIKE_DEPS:
            out.add(tok.index)
    return out


@dataclass(frozen=True)
class FeatureSet:
    """Feature strings for one (v, u) pair.

    ``features`` holds the canonical families; ``rule_only`` the extra
    families consumed by rule files. ``in`` checks both.
    """

    features: frozenset[str]
    rule_only: frozenset[str] = frozenset()

    def __contains__(self, feature: str) -> bool:
        return feature in self.features or feature in self.rule_only

    def all_features(self) -> frozenset[str]:
        return self.features | self.rule_only


def _parent_feats(sent, x, name):
    tok = sent.tokens[x]
    if tok.head == ROOT:
        return {f"{name}.parent.text.root", f"{name}.parent.dep.root"}
    parent = sent.tokens[tok.head]
    return {f"{name}.parent.text.{parent.lower}", f"{name}.parent.dep.{tok.dep}"}


def generate_features(sent: ParsedSentence, v: int, u: int) -> FeatureSet:
    """Build the FeatureSet for trigger anchor v and candidate u (u != v)."""
    if u == v:
        raise ValueError("feature generation requires u != v")
    tv = sent.tokens[v]
    tu = sent.tokens[u]

    core = {
        f"v.text.{tv.lower}",
        f"u.text.{tu.lower}",
        f"v.rootword.{tv.lemma.lower()}",
        f"u.rootword.{tu.lemma.lower()}",
        f"v.POS.{tv.pos}",
        f"u.POS.{tu.pos}",
        f"v.POS_gen.{tv.pos_gen}",
        f"u.POS_gen.{tu.pos_gen}",
    }
    core |= _parent_feats(sent, v, "v")
    core |= _parent_feats(sent, u, "u")

    if sent.is_ancestor(v, u):
        core.add("ancestor.v.u")
    if sent.is_ancestor(u, v):
        core.add("ancestor.u.v")

    top = sent.lca(u, v)
    core.add(f"lca.rootword.{sent.tokens[top].lemma.lower()}")

    path = sent.dep_path(u, v)
    core.add(f"dep.path.{serialize_path(path)}")

    rule_only = set()
    if tu.head == v:
        core.add(f"edge.v.u.{tu.dep}")
        rule_only.add("edge.v.u")
    if tv.head == u:
        core.add(f"edge.u.v.{tv.dep}")
        rule_only.add("edge.u.v")

    for label in set(path.up_edges) | set(path.down_edges):
        core.add(f"path.v.u.{label}")
    for node in path.intermediate_nodes:
        core.add(f"path.{sent.tokens[node].lower}")

    for child in sent.children(v):
        ct = sent.tokens[child]
        rule_only.add(f"v.child.{ct.lower}")
        rule_only.add(f"v.child.{ct.dep}.{ct.lower}")

    if tu.head != ROOT:
        parent = sent.tokens[tu.head]
        rule_only.add(f"dep.path.len.1.{parent.lower}>{tu.dep}>u")

    if tu.dep in ("attr", "acomp") and tu.head != ROOT:
        if sent.tokens[tu.head].lemma.lower() == "be" and any(
            sent.tokens[c].dep == "dobj" for c in sent.children(u)
        ):
            rule_only.add("u.copula_verb_with_object")

    return FeatureSet(frozenset(core), frozenset(rule_only))


# --- feature-string validation (used by the rule loader) ---------------

_WORD = r"[^\s.]+"
_TOKEN = r"\S+"

_EXACT = {"ancestor.v.u", "ancestor.u.v", "edge.v.u", "edge.u.v", "u.copula_verb_with_object"}


def _need_label(label, feature):
    if label not in DEP_LABELS:
        raise ValueError(f"unknown dependency label {label!r} in {feature!r}")


def validate_feature(feature: str) -> str:
    """Check that a rule-file feature string is generable by the grammar.

    Returns the normalized spelling (aliases like LCA.root_word and
    upper-case dependency labels folded to canonical form); raises
    ValueError for strings no sentence could ever produce (typo safety
    for rule files).
    """
    f = feature.strip()
    if not f or any(ch.isspace() for ch in f):
        raise ValueError(f"bad feature string {feature!r}")
    f = re.sub(r"^(?i:lca)\.root_?word\.", "lca.rootword.", f)
    if f in _EXACT:
        return f

    m = re.match(rf"^(?i:dep\.path\.len\.1)\.({_WORD})>(\w+)>u$", f)
    if m:
        word, label = m.group(1).lower(), m.group(2).lower()
        _need_label(label, feature)
        return f"dep.path.len.1.{word}>{label}>u"

    if re.match(r"^(?i:dep\.path)\.", f):
        body = f.split(".", 2)[2]
        body = body.lower().replace("<lca>", "<LCA>")
        path = parse_path(body)  # raises on malformed path strings
        for label in path.up_edges + path.down_edges:
            _need_label(label, feature)
        return "dep.path." + body

    m = re.match(rf"^([uv])\.(text|rootword)\.({_TOKEN})$", f)
    if m:
        return f"{m.group(1)}.{m.group(2)}.{m.group(3).lower()}"
    m = re.match(rf"^([uv])\.parent\.text\.({_TOKEN})$", f)
    if m:
        return f"{m.group(1)}.parent.text.{m.group(2).lower()}"
    m = re.match(rf"^lca\.rootword\.({_TOKEN})$", f)
    if m:
        return f"lca.rootword.{m.group(1).lower()}"
    m = re.match(r"^([uv])\.POS\.([A-Z0-9$.,:()'`\-]+)$", f)
    if m:
        return f
    m = re.match(r"^([uv])\.POS_gen\.([A-Z]+)$", f)
    if m:
        if m.group(2) not in UPOS_TAGS:
            raise ValueError(f"unknown coarse POS tag {m.group(2)!r} in {feature!r}")
        return f
    m = re.match(r"^([uv])\.parent\.dep\.(\w+)$", f)
    if m:
        label = m.group(2).lower()
        if label != "root":
            _need_label(label, feature)
        return f"{m.group(1)}.parent.dep.{label}"
    m = re.match(r"^edge\.(v\.u|u\.v)\.(\w+)$", f)
    if m:
        label = m.group(2).lower()
        _need_label(label, feature)
        return f"edge.{m.group(1)}.{label}"
    m = re.match(r"^path\.v\.u\.(\w+)$", f)
    if m:
        label = m.group(1).lower()
        _need_label(label, feature)
        return f"path.v.u.{label}"
    m = re.match(rf"^path\.({_WORD})$", f)
    if m:
        return f"path.{m.group(1).lower()}"
    m = re.match(rf"^v\.child\.([a-z_:]+)\.({_WORD})$", f)
    if m:
        _need_label(m.group(1), feature)
        return f"v.child.{m.group(1)}.{m.group(2).lower()}"
    m = re.match(rf"^v\.child\.({_WORD})$", f)
    if m:
        return f"v.child.{m.group(1).lower()}"
    raise ValueError(f"unknown feature family in {feature!r}")
