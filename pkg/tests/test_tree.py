"""Tree algebra against brute-force oracles and on exhaustive small trees."""

import random

import pytest

from causalext.tree import DepPath, ROOT, ParsedSentence, Token, TreeError, parse_path, serialize_path
from conftest import (
    all_head_vectors,
    brute_is_ancestor,
    brute_lca,
    brute_path_edges,
    brute_subtree,
    make_sentence,
    random_head_vector,
    tree_sentence,
)


def two_token():
    # "X verbs": X <-nsubj- verbs
    return make_sentence(
        [
            ("X", "x", "NN", "NOUN", 1, "nsubj"),
            ("verbs", "verb", "VBZ", "VERB", None, "root"),
        ]
    )


def test_children_leaf_and_root():
    s = two_token()
    assert s.children(0) == []
    assert s.children(1) == [0]


def test_children_out_of_range():
    s = two_token()
    with pytest.raises(IndexError):
        s.children(2)


def test_is_ancestor_basics():
    s = tree_sentence([ROOT, 0, 0, 1])  # 0 root; 1,2 children; 3 under 1
    assert not s.is_ancestor(1, 1)
    assert s.is_ancestor(0, 3)
    assert s.is_ancestor(1, 3)
    assert not s.is_ancestor(1, 2)  # siblings
    assert not s.is_ancestor(3, 1)


def test_lca_reflexive_and_simple():
    s = tree_sentence([ROOT, 0, 0, 1])
    assert s.lca(2, 2) == 2
    assert s.lca(3, 2) == 0
    assert s.lca(3, 1) == 1  # inclusive: an endpoint can be the LCA


def test_subtree_leaf_and_exclusions():
    # chain 0 <- 1 <- 2 with dep(1) = appos
    s = tree_sentence([ROOT, 0, 1], deps=["root", "appos", "amod"])
    assert s.subtree(2) == {2}
    assert s.subtree(0) == {0, 1, 2}
    assert s.subtree(0, {"appos"}) == {0}
    # the subtree root itself is never pruned by its own dep
    assert s.subtree(1, {"appos"}) == {1, 2}


def test_dep_path_requires_distinct():
    s = two_token()
    with pytest.raises(ValueError):
        s.dep_path(0, 0)


def test_serialize_direct_child():
    s = two_token()
    assert serialize_path(s.dep_path(0, 1)) == "u<nsubj<v"


def test_serialize_direct_parent():
    s = tree_sentence([ROOT, 0], deps=["root", "relcl"])
    assert serialize_path(s.dep_path(0, 1)) == "u>relcl>v"


def test_serialize_through_lca():
    # u <-nsubj- LCA -prep-> x -pcomp-> v
    s = tree_sentence(
        [1, ROOT, 1, 2],
        deps=["nsubj", "root", "prep", "pcomp"],
    )
    p = s.dep_path(0, 3)
    assert p.up_edges == ("nsubj",)
    assert p.down_edges == ("prep", "pcomp")
    assert p.intermediate_nodes == (1, 2)
    assert serialize_path(p) == "u<nsubj<LCA>prep>pcomp>v"


def test_serialize_two_up_edges():
    # u -pobj-> mid -agent-> v (u deepest)
    s = tree_sentence([1, 2, ROOT], deps=["pobj", "agent", "root"])
    assert serialize_path(s.dep_path(0, 2)) == "u<pobj<agent<v"


def test_serialize_two_down_edges():
    s = tree_sentence([ROOT, 0, 1], deps=["root", "advcl", "mark"])
    assert serialize_path(s.dep_path(0, 2)) == "u>advcl>mark>v"


def test_parse_path_round_trip_examples():
    for text in [
        "u<nsubj<v",
        "u>relcl>v",
        "u<nsubj<LCA>prep>pcomp>v",
        "u<pobj<agent<v",
        "u>advcl>mark>v",
        "u<pobj<prep<v",
    ]:
        p = parse_path(text)
        assert serialize_path(p) == text


def test_parse_path_rejects_garbage():
    for bad in ["u<nsubj", "nsubj<v", "u<LCA>x>v", "u<nsubj>v", "", "u<v"]:
        with pytest.raises(ValueError):
            parse_path(bad)


def test_tree_validation_rejects_cycles_and_multiroot():
    with pytest.raises(TreeError):
        tree_sentence([1, 0])  # 2-cycle, no root
    with pytest.raises(TreeError):
        tree_sentence([ROOT, ROOT])  # two roots
    with pytest.raises(TreeError):
        tree_sentence([ROOT, 2, 1])  # cycle off the root
    with pytest.raises(TreeError):
        ParsedSentence(
            [Token(index=0, text="x", lemma="x", pos="NN", pos_gen="NOUN", head=5, dep="dep")]
        )


def test_exhaustive_small_trees_match_oracles():
    """lca, ancestry, dep_path and subtree against brute force on every
    labeled tree of up to 5 nodes."""
    for n in range(1, 6):
        for heads in all_head_vectors(n):
            s = tree_sentence(heads)
            for a in range(n):
                for b in range(n):
                    assert s.lca(a, b) == brute_lca(s, a, b)
                    assert s.is_ancestor(a, b) == brute_is_ancestor(s, a, b)
                    if a != b:
                        p = s.dep_path(a, b)
                        up, down = brute_path_edges(s, a, b)
                        assert list(p.up_edges) == up
                        assert list(p.down_edges) == down
                assert s.subtree(a) == brute_subtree(s, a)


def test_random_larger_trees_match_oracles():
    rng = random.Random(20250809)
    for _ in range(150):
        n = rng.randrange(6, 13)
        s = tree_sentence(random_head_vector(rng, n))
        for _ in range(20):
            a, b = rng.randrange(n), rng.randrange(n)
            assert s.lca(a, b) == brute_lca(s, a, b)
            if a != b:
                up, down = brute_path_edges(s, a, b)
                p = s.dep_path(a, b)
                assert (list(p.up_edges), list(p.down_edges)) == (up, down)
        excl = {rng.choice(["nsubj", "dobj", "prep", "pobj", "amod"])}
        i = rng.randrange(n)
        assert s.subtree(i, excl) == brute_subtree(s, i, excl)


def test_path_length_meets_at_lca():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(2, 12)
        s = tree_sentence(random_head_vector(rng, n))
        a, b = rng.sample(range(n), 2)
        p = s.dep_path(a, b)
        top = s.lca(a, b)
        assert (len(p.up_edges) == 0) == (a == top)
        assert (len(p.down_edges) == 0) == (b == top)
        # |up| + |down| = path length in edges
        up, down = brute_path_edges(s, a, b)
        assert len(p.up_edges) + len(p.down_edges) == len(up) + len(down)


def test_subtree_exclusion_monotone():
    rng = random.Random(11)
    labels = ["nsubj", "dobj", "prep", "pobj", "amod", "punct"]
    for _ in range(60):
        n = rng.randrange(2, 12)
        s = tree_sentence(random_head_vector(rng, n))
        e1 = {rng.choice(labels)}
        e2 = {rng.choice(labels)}
        i = rng.randrange(n)
        assert s.subtree(i, e1 | e2) <= s.subtree(i, e1) <= s.subtree(i)


def test_serialize_injective_over_label_sequences():
    labels = ["nsubj", "dobj", "prep"]
    seen = {}
    import itertools

    for up_len in range(3):
        for down_len in range(3):
            if up_len == down_len == 0:
                continue
            for up in itertools.product(labels, repeat=up_len):
                for down in itertools.product(labels, repeat=down_len):
                    text = serialize_path(DepPath(up, down))
                    assert text not in seen or seen[text] == (up, down)
                    seen[text] = (up, down)
