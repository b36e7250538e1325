import itertools
import random
from pathlib import Path

import pytest

from causalext import load_file
from causalext.tree import ROOT, ParsedSentence, Token

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name, strict=True):
    return load_file(FIXTURES / name, strict=strict)


def fixture_sentence(name, idx=0):
    corpus = load_fixture(name)
    return list(corpus.sentences())[idx]


def make_sentence(rows, sent_id="t-s1", doc_id="t"):
    """Build a ParsedSentence from (text, lemma, pos, pos_gen, head, dep)
    rows; head is a 0-based parent index or None for the root."""
    toks = []
    for i, (text, lemma, pos, pos_gen, head, dep) in enumerate(rows):
        toks.append(
            Token(
                index=i,
                text=text,
                lemma=lemma,
                pos=pos,
                pos_gen=pos_gen,
                head=ROOT if head is None else head,
                dep=dep,
            )
        )
    return ParsedSentence(toks, sent_id=sent_id, doc_id=doc_id)


_DEPS = ["nsubj", "dobj", "prep", "pobj", "amod", "conj", "aux", "appos", "advcl", "punct"]
_WORDS = ["cells", "induce", "growth", "protein", "block", "tumor", "of", "the", "rate", "decrease"]


def tree_sentence(heads, deps=None, words=None):
    """ParsedSentence from a head vector (ROOT/-1 marks the root)."""
    n = len(heads)
    deps = deps or [_DEPS[i % len(_DEPS)] for i in range(n)]
    words = words or [_WORDS[i % len(_WORDS)] for i in range(n)]
    rows = []
    for i in range(n):
        head = None if heads[i] in (None, ROOT) else heads[i]
        dep = "root" if head is None else deps[i]
        rows.append((words[i], words[i], "NN", "NOUN", head, dep))
    return make_sentence(rows)


def all_head_vectors(n):
    """Every head vector forming a rooted tree on n labeled nodes."""
    out = []
    for root in range(n):
        slots = [range(-1, 0) if i == root else [h for h in range(n) if h != i] for i in range(n)]
        for combo in itertools.product(*slots):
            heads = [ROOT if h == -1 else h for h in combo]
            if _is_tree(heads, root):
                out.append(heads)
    return out


def _is_tree(heads, root):
    n = len(heads)
    seen = {root}
    stack = [root]
    kids = [[] for _ in range(n)]
    for i, h in enumerate(heads):
        if h != ROOT:
            kids[h].append(i)
    while stack:
        i = stack.pop()
        for j in kids[i]:
            if j in seen:
                return False
            seen.add(j)
            stack.append(j)
    return len(seen) == n


def random_head_vector(rng, n):
    """Random recursive tree: each node attaches to an earlier node of a
    random permutation."""
    order = list(range(n))
    rng.shuffle(order)
    heads = [None] * n
    heads[order[0]] = ROOT
    for pos in range(1, n):
        heads[order[pos]] = order[rng.randrange(pos)]
    return heads


# --- brute-force oracles -------------------------------------------------


def chain(sent, i):
    """Ancestor chain from i (inclusive) to the root."""
    out = [i]
    while sent.tokens[out[-1]].head != ROOT:
        out.append(sent.tokens[out[-1]].head)
    return out


def brute_is_ancestor(sent, a, d):
    return a in chain(sent, d)[1:]


def brute_lca(sent, a, b):
    bs = set(chain(sent, b))
    for node in chain(sent, a):
        if node in bs:
            return node
    raise AssertionError("disconnected tree")


def brute_path_edges(sent, u, v):
    top = brute_lca(sent, u, v)
    up = []
    i = u
    while i != top:
        up.append(sent.tokens[i].dep)
        i = sent.tokens[i].head
    down = []
    i = v
    while i != top:
        down.append(sent.tokens[i].dep)
        i = sent.tokens[i].head
    return up, list(reversed(down))


def brute_subtree(sent, i, excluded=frozenset()):
    out = {i}
    for j in range(len(sent)):
        if j == i:
            continue
        walk = [j]
        k = j
        while sent.tokens[k].head != ROOT and sent.tokens[k].head != i:
            k = sent.tokens[k].head
            walk.append(k)
        if sent.tokens[k].head == i:
            walk.append(i)
            if not any(sent.tokens[x].dep in excluded for x in walk[:-1]):
                out.add(j)
    return out


# --- synthetic corpus ----------------------------------------------------

_SYNTH_WORDS = [
    ("induce", "induce", "VB", "VERB"),
    ("causes", "cause", "VBZ", "VERB"),
    ("blocked", "block", "VBN", "VERB"),
    ("inhibits", "inhibit", "VBZ", "VERB"),
    ("reduced", "reduce", "VBD", "VERB"),
    ("due", "due", "JJ", "ADJ"),
    ("because", "because", "IN", "SCONJ"),
    ("result", "result", "NN", "NOUN"),
    ("role", "role", "NN", "NOUN"),
    ("tumor", "tumor", "NN", "NOUN"),
    ("cells", "cell", "NNS", "NOUN"),
    ("growth", "growth", "NN", "NOUN"),
    ("apoptosis", "apoptosis", "NN", "NOUN"),
    ("PEDV", "pedv", "NNP", "PROPN"),
    ("patients", "patient", "NNS", "NOUN"),
    ("expression", "expression", "NN", "NOUN"),
    ("it", "it", "PRP", "PRON"),
    ("which", "which", "WDT", "PRON"),
    ("rapidly", "rapidly", "RB", "ADV"),
    ("the", "the", "DT", "DET"),
    ("of", "of", "IN", "ADP"),
    ("by", "by", "IN", "ADP"),
    ("to", "to", "IN", "ADP"),
    ("in", "in", "IN", "ADP"),
    ("from", "from", "IN", "ADP"),
    ("not", "not", "RB", "PART"),
    ("may", "may", "MD", "VERB"),
    ("might", "might", "MD", "VERB"),
    (",", ",", ",", "PUNCT"),
    (".", ".", ".", "PUNCT"),
]

_SYNTH_DEPS = [
    "nsubj", "nsubj", "dobj", "dobj", "pobj", "pobj", "prep", "prep",
    "agent", "amod", "aux", "neg", "relcl", "npadvmod", "nsubjpass", "acl",
    "attr", "appos", "advcl", "punct", "conj", "compound", "mark", "xcomp",
    "pcomp", "acomp", "csubj", "det",
]


def synthetic_sentence(rng, sent_id, doc_id):
    n = rng.randrange(4, 15)
    heads = random_head_vector(rng, n)
    rows = []
    for i in range(n):
        text, lemma, pos, pos_gen = rng.choice(_SYNTH_WORDS)
        head = None if heads[i] == ROOT else heads[i]
        dep = "root" if head is None else rng.choice(_SYNTH_DEPS)
        rows.append((text, lemma, pos, pos_gen, head, dep))
    return make_sentence(rows, sent_id=sent_id, doc_id=doc_id)


def synthetic_corpus(n_sentences=1000, seed=20250809, doc_id="synth"):
    from causalext.conllu import Corpus

    rng = random.Random(seed)
    sents = [synthetic_sentence(rng, f"s{i + 1}", doc_id) for i in range(n_sentences)]
    return Corpus(documents=[(doc_id, sents)], source_path="<synthetic>")


# --- acceptance reporting -------------------------------------------------

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when in ("call", "setup"):
        name = report.nodeid.split("::")[-1]
        if report.when == "call" or report.skipped:
            _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    label = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}
    for name, outcome in _acceptance.items():
        terminalreporter.write_line(f"  {label.get(outcome, outcome.upper()):4s}  {name}")


@pytest.fixture
def pedv():
    return fixture_sentence("pedv.conllu")


@pytest.fixture
def stlv():
    return fixture_sentence("stlv_lines.conllu")


@pytest.fixture
def lexicon():
    from causalext import load_default_lexicon

    return load_default_lexicon()


@pytest.fixture
def ruleset():
    from causalext import load_default_rules

    return load_default_rules()
