import pytest

from isrecon import (Graph, InputError, build_maximal_cotree, chordality,
                     classify_leaves, is_cograph, realize)
from isrecon.cotree import JOIN, UNION

from helpers import c4, complete, edgeless, p3, p4, two_k2


def test_single_vertex():
    t = build_maximal_cotree(Graph.from_edges(1, []))
    assert t.nodes[t.root].is_trivial_leaf
    assert t.all_leaves_trivial()


def test_c4_decomposes_as_join_of_two_pairs():
    t = build_maximal_cotree(c4())
    root = t.nodes[t.root]
    assert root.kind == JOIN
    assert {frozenset(t.vertices(root.left)), frozenset(t.vertices(root.right))} \
        == {frozenset({0, 2}), frozenset({1, 3})}
    assert t.all_leaves_trivial()


def test_two_k2_decomposes_as_union_of_joins():
    t = build_maximal_cotree(two_k2())
    root = t.nodes[t.root]
    assert root.kind == UNION
    for child in (root.left, root.right):
        assert t.nodes[child].kind == JOIN


def test_p4_is_an_indecomposable_leaf():
    t = build_maximal_cotree(p4())
    assert t.nodes[t.root].is_leaf
    assert not t.all_leaves_trivial()
    assert not is_cograph(p4())


def test_multiway_union_folds_left_deep():
    g = edgeless(4)
    t = build_maximal_cotree(g)
    # 4 leaves, 3 union nodes, left-deep: right child of the root is a leaf
    kinds = [t.nodes[u].kind for u in t.preorder()]
    assert kinds.count(UNION) == 3
    assert t.nodes[t.nodes[t.root].right].is_leaf


def test_realize_round_trip():
    for g in (c4(), p3(), p4(), two_k2(), complete(5), edgeless(6)):
        t = build_maximal_cotree(g)
        assert realize(t) == g


def test_is_cograph_known_cases():
    assert is_cograph(c4())
    assert is_cograph(complete(4))
    assert is_cograph(edgeless(7))
    assert is_cograph(p3())
    assert not is_cograph(p4())
    assert not is_cograph(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]))


def test_classify_leaves_with_chordality_test():
    # C5 is not a cograph, and its single leaf (itself) is not chordal
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    t = build_maximal_cotree(c5)
    assert not classify_leaves(t, lambda h: chordality(h).is_perfect)
    # P4 is not a cograph but is chordal
    t2 = build_maximal_cotree(p4())
    assert classify_leaves(t2, lambda h: chordality(h).is_perfect)


def test_cotree_rejects_empty_graph():
    with pytest.raises(InputError):
        build_maximal_cotree(Graph(0, ()))


def test_vmasks_partition_at_every_internal_node():
    t = build_maximal_cotree(two_k2())
    for u in t.preorder():
        node = t.nodes[u]
        if not node.is_leaf:
            lm = t.nodes[node.left].vmask
            rm = t.nodes[node.right].vmask
            assert lm & rm == 0
            assert lm | rm == node.vmask


def test_preorder_postorder_cover_all_nodes():
    t = build_maximal_cotree(c4())
    assert sorted(t.preorder()) == sorted(t.postorder()) == sorted(range(len(t.nodes)))
