"""Dependency-tree data model and tree algebra.

A sentence is a flat list of tokens whose ``head`` pointers form a single
rooted tree. Everything downstream (trigger matching, feature generation,
phrase expansion) is expressed in terms of the small set of traversals
defined here: children, ancestry, lowest common ancestor, subtrees and
serialized dependency paths.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

# Head value of the root token. All other tokens point at a 0-based index.
ROOT = -1


class TreeError(ValueError):
    """Raised when token head pointers do not form a single valid tree."""


@dataclass(frozen=True)
class Token:
    """One token of a dependency-parsed sentence.

    ``pos`` is the fine-grained (PTB-style) tag, ``pos_gen`` the coarse
    universal tag. ``dep`` is the label of the edge to the parent, given
    lowercased; the root token carries dep "root" and head ROOT.
    """

    index: int
    text: str
    lemma: str
    pos: str
    pos_gen: str
    head: int
    dep: str
    lower: str = field(default="")

    def __post_init__(self):
        if not self.lower:
            object.__setattr__(self, "lower", self.text.lower())


class ParsedSentence:
    """An immutable dependency-parsed sentence.

    Tree validity (contiguous indices, exactly one root, in-range heads,
    no cycles) is enforced at construction; all traversal methods may
    therefore assume a well-formed tree.
    """

    def __init__(self, tokens, sent_id="", doc_id="", raw_text=None):
        self.tokens = tuple(tokens)
        self.sent_id = sent_id
        self.doc_id = doc_id
        self.raw_text = raw_text
        self._validate()
        kids = [[] for _ in self.tokens]
        root = None
        for tok in self.tokens:
            if tok.head == ROOT:
                root = tok.index
            else:
                kids[tok.head].append(tok.index)
        self._children = tuple(tuple(k) for k in kids)
        self.root = root
        # depth of every node, for LCA walks
        depth = [0] * len(self.tokens)
        order = [root]
        while order:
            i = order.pop()
            for j in self._children[i]:
                depth[j] = depth[i] + 1
                order.append(j)
        self._depth = tuple(depth)

    def _validate(self):
        n = len(self.tokens)
        if n == 0:
            raise TreeError("empty sentence")
        roots = []
        for pos, tok in enumerate(self.tokens):
            if tok.index != pos:
                raise TreeError(f"token indices not contiguous at {pos}")
            if tok.head == ROOT:
                roots.append(pos)
            elif not (0 <= tok.head < n):
                raise TreeError(f"token {pos} has out-of-range head {tok.head}")
            elif tok.head == pos:
                raise TreeError(f"token {pos} is its own head")
        if len(roots) != 1:
            raise TreeError(f"expected exactly one root, found {len(roots)}")
        # chase head chains; any cycle never reaches the root
        for pos in range(n):
            seen = set()
            i = pos
            while i != ROOT:
                if i in seen:
                    raise TreeError(f"cycle in head chain at token {pos}")
                seen.add(i)
                i = self.tokens[i].head

    def __len__(self):
        return len(self.tokens)

    def __getitem__(self, i) -> Token:
        return self.tokens[i]

    def _check(self, i):
        if not (0 <= i < len(self.tokens)):
            raise IndexError(f"token index {i} out of range")

    def children(self, i: int) -> list[int]:
        """Direct dependents of token i, in ascending index order."""
        self._check(i)
        return list(self._children[i])

    def is_ancestor(self, a: int, d: int) -> bool:
        """True iff a lies strictly on the head chain from d to the root."""
        self._check(a)
        self._check(d)
        i = self.tokens[d].head
        while i != ROOT:
            if i == a:
                return True
            i = self.tokens[i].head
        return False

    def lca(self, a: int, b: int) -> int:
        """Lowest common ancestor, inclusive: lca(x, x) = x and a node
        counts as its own ancestor."""
        self._check(a)
        self._check(b)
        while a != b:
            if self._depth[a] >= self._depth[b]:
                a = self.tokens[a].head
            else:
                b = self.tokens[b].head
        return a

    def subtree(self, i: int, excluded_deps=frozenset()) -> set[int]:
        """Token i plus all descendants, pruning every descendant branch
        whose top edge carries a dep in excluded_deps. i itself is never
        pruned, whatever its own dep."""
        self._check(i)
        out = {i}
        stack = [i]
        while stack:
            j = stack.pop()
            for k in self._children[j]:
                if self.tokens[k].dep in excluded_deps:
                    continue
                out.add(k)
                stack.append(k)
        return out

    def dep_path(self, u: int, v: int) -> "DepPath":
        """The unique tree path from u to v (u != v)."""
        self._check(u)
        self._check(v)
        if u == v:
            raise ValueError("dep_path requires two distinct tokens")
        top = self.lca(u, v)
        up_edges = []
        up_nodes = []
        i = u
        while i != top:
            up_edges.append(self.tokens[i].dep)
            i = self.tokens[i].head
            up_nodes.append(i)
        down_edges = []
        down_nodes = []
        i = v
        while i != top:
            down_edges.append(self.tokens[i].dep)
            i = self.tokens[i].head
            down_nodes.append(i)
        down_edges.reverse()
        down_nodes.reverse()
        # nodes strictly between u and v; the LCA is included unless it
        # is one of the endpoints (both walks touch it, so dedupe)
        inter = []
        for n in up_nodes + down_nodes:
            if n not in (u, v) and n not in inter:
                inter.append(n)
        return DepPath(tuple(up_edges), tuple(down_edges), tuple(inter))


@dataclass(frozen=True)
class DepPath:
    """Tree path between two tokens u and v.

    up_edges run from u toward the LCA (starting with u's own dep),
    down_edges from the LCA toward v (ending with v's own dep).
    intermediate_nodes are the token indices strictly between u and v,
    including the LCA when it is neither endpoint.
    """

    up_edges: tuple[str, ...]
    down_edges: tuple[str, ...]
    intermediate_nodes: tuple[int, ...] = ()


def serialize_path(path: DepPath) -> str:
    """Render a path as a direction-marked label string.

    "<d" marks an edge walked child-to-parent, ">d" parent-to-child; node
    names are elided except the endpoints (printed "u" and "v") and the
    LCA, printed literally when it is neither endpoint. Examples:
    "u<nsubj<v", "u>relcl>v", "u<nsubj<LCA>prep>pcomp>v".
    """
    parts = ["u"]
    for d in path.up_edges:
        parts.append("<" + d.lower())
    if path.up_edges and path.down_edges:
        parts.append("<LCA")
    for d in path.down_edges:
        parts.append(">" + d.lower())
    parts.append(">v" if path.down_edges else "<v")
    return "".join(parts)


_LABEL = r"[a-z_:]+"
_PATH_RE = re.compile(
    rf"^u(?:(?P<up>(?:<{_LABEL})+)<LCA(?P<down>(?:>{_LABEL})+)>v"
    rf"|(?P<uponly>(?:<{_LABEL})+)<v"
    rf"|(?P<downonly>(?:>{_LABEL})+)>v)$"
)


def parse_path(s: str) -> DepPath:
    """Inverse of serialize_path for the edge-label sequences.

    Intermediate node indices are not recoverable from the string and
    come back empty.
    """
    m = _PATH_RE.match(s)
    if not m:
        raise ValueError(f"not a valid serialized path: {s!r}")
    up_raw = m.group("up") or m.group("uponly") or ""
    down_raw = m.group("down") or m.group("downonly") or ""
    up = tuple(x for x in up_raw.split("<") if x)
    down = tuple(x for x in down_raw.split(">") if x)
    return DepPath(up, down)
