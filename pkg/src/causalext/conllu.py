"""CoNLL-U reading and writing.

Standard 10-column, tab-separated format with blank-line sentence
separation. Column mapping into the internal model: ID -> index (made
0-based), FORM -> text, LEMMA -> lemma, UPOS -> pos_gen, XPOS -> pos,
HEAD -> head (0 becomes the ROOT sentinel), DEPREL -> dep. Multiword
token ranges ("3-4") and empty nodes ("5.1") are skipped.

By default, sentences that fail tree validation are dropped with a
logged diagnostic so large corpus runs survive parser failures; strict
mode turns every defect into a hard error.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .tree import ROOT, ParsedSentence, Token, TreeError

log = logging.getLogger(__name__)


class ConlluError(ValueError):
    """A malformed CoNLL-U input, reported with its line number."""

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


@dataclass
class Corpus:
    """Ordered documents of parsed sentences, keyed by (doc_id, sent_id)."""

    documents: list[tuple[str, list[ParsedSentence]]] = field(default_factory=list)
    source_path: str = ""

    def sentences(self):
        for _, sents in self.documents:
            yield from sents

    def __len__(self):
        return sum(len(sents) for _, sents in self.documents)


def _lines(source):
    if isinstance(source, str):
        return source.splitlines()
    return [line.rstrip("\n") for line in source]


def parse_conllu(source, source_path="<stream>", strict=False) -> Corpus:
    """Parse CoNLL-U text (a string or a line iterable) into a Corpus.

    ``# newdoc id =`` and ``# sent_id =`` comments populate identifiers;
    a ``# text =`` comment becomes the sentence's raw_text. Sentences
    without an explicit id are numbered s1, s2, ... within the document.
    """
    corpus = Corpus(source_path=source_path)
    doc_id = source_path
    doc_sents: list[ParsedSentence] = []
    started_doc = False
    seen_ids = set()
    auto = 0

    block: list[tuple[int, str]] = []
    meta: dict[str, str] = {}
    block_start = None

    def flush_doc():
        nonlocal doc_sents
        if doc_sents or started_doc:
            corpus.documents.append((doc_id, doc_sents))
        doc_sents = []

    def flush_block():
        nonlocal block, meta, auto
        if not block:
            meta = {}
            return
        sent_id = meta.get("sent_id")
        if sent_id is None:
            auto += 1
            sent_id = f"s{auto}"
        try:
            sent = _build_sentence(block, sent_id, doc_id, meta.get("text"))
            key = (doc_id, sent.sent_id)
            if key in seen_ids:
                raise ConlluError(f"duplicate sent_id {sent.sent_id!r}", block_start)
            seen_ids.add(key)
            doc_sents.append(sent)
        except ConlluError as err:
            if strict:
                raise
            log.warning("%s: skipping sentence %s: %s", source_path, sent_id, err)
        block = []
        meta = {}

    for line_no, raw in enumerate(_lines(source), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            flush_block()
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            key = key.strip()
            value = value.strip()
            if key == "newdoc id":
                flush_block()
                flush_doc()
                doc_id = value
                started_doc = True
                auto = 0
            elif key in ("sent_id", "text"):
                meta[key] = value
            continue
        if not block:
            block_start = line_no
        block.append((line_no, line))
    flush_block()
    flush_doc()
    return corpus


def _build_sentence(rows, sent_id, doc_id, raw_text):
    tokens = []
    id_map = {}
    for line_no, line in rows:
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluError(f"expected 10 columns, got {len(cols)}", line_no)
        tid, form, lemma, upos, xpos, _feats, head, deprel, _deps, _misc = cols
        if "-" in tid or "." in tid:
            continue
        try:
            tid_i = int(tid)
        except ValueError:
            raise ConlluError(f"bad token ID {tid!r}", line_no) from None
        if lemma == "_" or not lemma:
            lemma = form.lower()
        tokens.append((line_no, tid_i, form, lemma, upos, xpos, head, deprel))
        id_map[tid_i] = len(tokens) - 1

    built = []
    for line_no, tid_i, form, lemma, upos, xpos, head, deprel in tokens:
        try:
            head_i = int(head)
        except ValueError:
            raise ConlluError(f"bad HEAD {head!r}", line_no) from None
        if head_i == 0:
            mapped = ROOT
        elif head_i in id_map:
            mapped = id_map[head_i]
        else:
            raise ConlluError(f"HEAD {head_i} refers to no token", line_no)
        dep = deprel.lower() if deprel != "_" else "dep"
        built.append(
            Token(
                index=id_map[tid_i],
                text=form,
                lemma=lemma,
                pos=xpos,
                pos_gen=upos,
                head=mapped,
                dep=dep,
            )
        )
    try:
        return ParsedSentence(built, sent_id=sent_id, doc_id=doc_id, raw_text=raw_text)
    except TreeError as e:
        raise ConlluError(str(e), rows[0][0]) from None


def load_file(path, strict=False) -> Corpus:
    with open(path, encoding="utf-8") as f:
        return parse_conllu(f, source_path=str(path), strict=strict)


def serialize_sentence(sent: ParsedSentence) -> str:
    """Render one sentence back to CoNLL-U, including id comments."""
    out = []
    if sent.sent_id:
        out.append(f"# sent_id = {sent.sent_id}")
    if sent.raw_text:
        out.append(f"# text = {sent.raw_text}")
    for tok in sent.tokens:
        head = 0 if tok.head == ROOT else tok.head + 1
        out.append(
            "\t".join(
                [
                    str(tok.index + 1),
                    tok.text,
                    tok.lemma,
                    tok.pos_gen,
                    tok.pos,
                    "_",
                    str(head),
                    tok.dep,
                    "_",
                    "_",
                ]
            )
        )
    return "\n".join(out) + "\n"


def serialize_corpus(corpus: Corpus) -> str:
    chunks = []
    for doc_id, sents in corpus.documents:
        chunks.append(f"# newdoc id = {doc_id}\n")
        for sent in sents:
            chunks.append(serialize_sentence(sent))
            chunks.append("\n")
    return "".join(chunks)
