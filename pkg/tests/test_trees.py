import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treepoly.catalog import (
    TreeCatalog,
    catalog_upto,
    enumerate_trees,
    mary_trees,
    rooted_trees,
    trees_by_leaves_and_internals,
    unrooted_mary_trees,
    unrooted_trees,
)
from treepoly.counting import free_counts, mary_count, rooted_counts
from treepoly.trees import (
    TRIVIAL,
    DyckParseError,
    LabeledRootedTree,
    LabeledUnrootedTree,
    NewickParseError,
    RootedTree,
    TreeError,
    UnrootedTree,
    affix_tree,
    attach_root_leaf,
    branching_vertex,
    contract_leaf_edges,
    is_isomorphic,
    newick_leaf_names,
    parse_dyck,
    parse_newick,
    preorder,
    rooted_path,
    rooted_star,
    stem_length,
    to_dyck,
    to_newick,
    wedge,
)

from conftest import rooted_tree_st, shuffled_dyck


# -- independent counting recurrences ---------------------------------------

def test_counting_recurrences_known_values():
    # first terms of the rooted / free tree sequences, checked by hand on small n
    assert rooted_counts(6)[1:] == [1, 1, 2, 4, 9, 20]
    assert free_counts(6)[1:] == [1, 1, 1, 2, 3, 6]
    assert [mary_count(2, n) for n in range(1, 7)] == [1, 1, 1, 2, 3, 6]
    assert mary_count(3, 3) == 1


@pytest.mark.parametrize("n", range(1, 15))
def test_rooted_catalog_matches_recurrence(n):
    trees = list(rooted_trees(n))
    assert len(trees) == rooted_counts(n)[n]
    assert len({t.code for t in trees}) == len(trees)
    assert all(t.vertex_count == n for t in trees)


@pytest.mark.parametrize("n", range(1, 15))
def test_unrooted_catalog_matches_otter(n):
    if n == 1:
        # the single vertex has no leaf edge to contract and is rejected
        with pytest.raises(TreeError):
            list(unrooted_trees(1))
        return
    trees = list(unrooted_trees(n))
    assert len(trees) == free_counts(n)[n]
    assert len({t.code for t in trees}) == len(trees)


@pytest.mark.parametrize("leaves", range(1, 13))
def test_binary_catalog_matches_recurrence(leaves):
    trees = list(mary_trees(2, leaves))
    assert len(trees) == mary_count(2, leaves)
    for t in trees:
        assert t.leaf_count == leaves
        assert all(len(node.children) in (0, 2) for node, _ in preorder(t))


@pytest.mark.parametrize("leaves", range(1, 9))
def test_ternary_catalog_matches_recurrence(leaves):
    assert len(list(mary_trees(3, leaves))) == mary_count(3, leaves)


def test_unrooted_binary_catalog_against_filter():
    for n in range(2, 13):
        expect = {t.code for t in unrooted_trees(n) if set(t.degrees()) <= {1, 3}}
        assert {t.code for t in unrooted_mary_trees(2, n)} == expect


def test_root_degree_catalog():
    for t in catalog_upto("root-degree-gt1", 9):
        assert t.root_degree > 1
    expect = sum(1 for t in catalog_upto("rooted", 9) if t.root_degree > 1)
    assert len(list(catalog_upto("root-degree-gt1", 9))) == expect


def test_trees_by_leaves_and_internals_partitions_catalog():
    for n in range(1, 10):
        by_shape = Counter()
        for t in rooted_trees(n):
            by_shape[(t.leaf_count, t.internal_count)] += 1
        for (a, b), count in by_shape.items():
            assert len(trees_by_leaves_and_internals(a, b)) == count


def test_catalog_sharding_covers_everything():
    cat = TreeCatalog("rooted", 8)
    full = [t.code for t in enumerate_trees(cat)]
    parts = [t.code for i in range(3) for t in cat.shard(i, 3)]
    assert sorted(full) == sorted(parts)


def test_catalog_rejects_unknown_kind():
    with pytest.raises(ValueError):
        TreeCatalog("forest", 3)


# -- Dyck codes -------------------------------------------------------------

def test_dyck_canonicalizes_child_order():
    assert parse_dyck("(()(()))").code == parse_dyck("((())())").code
    assert to_dyck(parse_dyck(" ((())()) ")) == "((())())"


@pytest.mark.parametrize("word, pos", [("", 0), ("(", 1), ("())", 2), ("()()", 2), ("(a)", 1)])
def test_dyck_errors_report_position(word, pos):
    with pytest.raises(DyckParseError) as err:
        parse_dyck(word)
    assert err.value.pos == pos


def test_shuffled_codes_canonicalize(rooted_upto_10):
    rng = random.Random(7)
    for t in rooted_upto_10[::7]:
        assert parse_dyck(shuffled_dyck(t, rng)) == t


@given(rooted_tree_st)
def test_dyck_roundtrip(t):
    assert parse_dyck(to_dyck(t)) == t


@given(rooted_tree_st, st.randoms())
def test_isomorphism_is_code_equality(t, rnd):
    other = parse_dyck(shuffled_dyck(t, rnd))
    assert is_isomorphic(t, other)
    assert hash(t) == hash(other)


def test_rooted_and_unrooted_never_isomorphic():
    cherry = rooted_star(2)
    path3 = UnrootedTree.from_edges(3, [(0, 1), (1, 2)])
    assert cherry.code == path3.code
    assert not is_isomorphic(cherry, path3)
    assert not is_isomorphic(rooted_path(2), rooted_star(2))


# -- structure ------------------------------------------------------------

def test_constructors():
    assert rooted_star(3).code == "(()()())"
    assert rooted_path(0) is TRIVIAL or rooted_path(0) == TRIVIAL
    assert rooted_path(2).code == "((()))"
    assert wedge([TRIVIAL, TRIVIAL]) == rooted_star(2)
    with pytest.raises(TreeError):
        wedge([])


def test_stem_and_branching_vertex():
    t = parse_dyck("(((()())))")
    assert stem_length(t) == 2
    assert affix_tree(t, branching_vertex(t)) == rooted_star(2)
    assert stem_length(rooted_star(2)) == 0
    path = rooted_path(4)
    assert stem_length(path) == 4
    assert affix_tree(path, branching_vertex(path)) == TRIVIAL


def test_affix_tree_rejects_foreign_index():
    with pytest.raises(TreeError):
        affix_tree(rooted_star(2), 5)


def test_counts():
    t = parse_dyck("((()())())")
    assert (t.vertex_count, t.leaf_count, t.internal_count, t.root_degree) == (5, 3, 2, 2)


# -- unrooted trees ---------------------------------------------------------

def test_unrooted_from_edges_is_label_free():
    a = UnrootedTree.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    b = UnrootedTree.from_edges(5, [(4, 2), (2, 0), (0, 3), (3, 1)])
    assert a == b
    assert a.leaf_count == 2


def test_unrooted_rejects_single_vertex():
    with pytest.raises(TreeError):
        UnrootedTree.from_adjacency([[]])
    with pytest.raises(TreeError):
        UnrootedTree.from_rooted(TRIVIAL)


def test_rerooting_gives_same_unrooted_tree():
    for n in range(2, 9):
        for u in unrooted_trees(n):
            adj = u.adjacency()
            codes = set()
            perm = list(range(n))
            random.Random(n).shuffle(perm)
            edges = {(perm[a], perm[b]) for a in range(n) for b in adj[a] if a < b}
            codes.add(UnrootedTree.from_edges(n, edges).code)
            assert codes == {u.code}


def test_contract_three_star():
    star = UnrootedTree.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert [c.code for c in contract_leaf_edges(star)] == ["(()())"] * 3


def test_contract_path():
    # both ends of a path contract to the same rooted path
    path = UnrootedTree.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert [c.code for c in contract_leaf_edges(path)] == ["((()))", "((()))"]


def test_attach_root_leaf_inverts_contraction():
    for t in catalog_upto("rooted", 8):
        if t.is_trivial:
            continue
        u = attach_root_leaf(t)
        assert t in contract_leaf_edges(u)


def _contraction_multiset(u):
    return Counter(c.code for c in contract_leaf_edges(u))


def test_contraction_multiset_is_complete(unrooted_upto_10):
    # exhaustive: distinct unrooted trees give distinct contraction multisets
    seen = {}
    for u in unrooted_upto_10:
        key = tuple(sorted(_contraction_multiset(u).items()))
        assert key not in seen, (u, seen.get(key))
        seen[key] = u


# -- Newick ---------------------------------------------------------------

def test_newick_unlabeled():
    assert parse_newick("(,,);") == rooted_star(3)
    assert parse_newick("((A,B)x:0.1,[c]'C D');") == parse_dyck("((()())())")
    assert UnrootedTree.from_rooted(parse_newick("(,,);")).code == "(()()())"


@pytest.mark.parametrize("text", ["(a,b)", "((a,b);", "(a,b));", ""])
def test_newick_errors(text):
    with pytest.raises(NewickParseError):
        parse_newick(text)


def test_newick_labeled_shares_name_table():
    names = newick_leaf_names("((a,b),c);")
    assert names == ["a", "b", "c"]
    t = parse_newick("((a,b),c);", labeled=True)
    s = parse_newick("(c,(b,a));", labeled=True, names=names)
    assert t == s
    assert sorted(t.leaf_labels()) == [1, 2, 3]
    assert to_newick(t, names) == "((a,b),c);"


def test_newick_roundtrip(rooted_upto_10):
    for t in rooted_upto_10[::5]:
        assert parse_newick(to_newick(t)) == t


# -- labeled trees ----------------------------------------------------------

def test_labeled_from_shape_assigns_preorder():
    t = LabeledRootedTree.from_shape(parse_dyck("((()())())"), [3, 1, 2])
    assert t.shape() == parse_dyck("((()())())")
    assert sorted(t.leaf_labels()) == [1, 2, 3]
    assert t.max_label() == 3


def test_labeled_equality_respects_labels():
    shape = parse_dyck("((()())())")
    a = LabeledRootedTree.from_shape(shape, [1, 2, 3])
    b = LabeledRootedTree.from_shape(shape, [2, 1, 3])
    c = LabeledRootedTree.from_shape(shape, [1, 3, 2])
    assert a == b  # swapping siblings is an isomorphism
    assert a != c


def test_labeled_unrooted_from_adjacency():
    adj = [[1, 2, 3], [0], [0], [0]]
    a = LabeledUnrootedTree.from_adjacency(adj, [None, 1, 2, 2])
    b = LabeledUnrootedTree.from_adjacency([[3], [3], [3], [0, 1, 2]], [2, 1, 2, None])
    assert a == b
    assert a.max_label() == 2
    images = contract_leaf_edges(a)
    assert sorted(r.root_label for r in images) == [1, 2, 2]


@settings(max_examples=50)
@given(st.integers(2, 7), st.data())
def test_labeled_canonical_under_permuted_children(n, data):
    shape = data.draw(st.sampled_from(list(rooted_trees(n))))
    labels = data.draw(st.lists(st.integers(1, 3), min_size=shape.leaf_count,
                                max_size=shape.leaf_count))
    t = LabeledRootedTree.from_shape(shape, labels)
    assert LabeledRootedTree(reversed(t.children), t.label) == t


def test_all_permutations_of_small_shape():
    shape = rooted_star(3)
    codes = {LabeledRootedTree.from_shape(shape, p).code
             for p in itertools.permutations([1, 2, 3])}
    assert len(codes) == 1
