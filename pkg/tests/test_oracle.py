from functools import partial

import pytest
from hypothesis import given

from treepoly.catalog import catalog_upto
from treepoly.invariant import p_prime, p_rooted, p_tree
from treepoly.oracle import (
    PrimarySubtree,
    collision_search,
    count_primary_subtrees,
    default_workers,
    generating_function,
    primary_subtrees,
    q_monomial,
)
from treepoly.polyring import coefficient_sum
from treepoly.trees import TRIVIAL, parse_dyck, preorder, rooted_path, rooted_star

from conftest import rooted_tree_st


def brute_cuts(host):
    """Primary subtrees by filtering every vertex subset, a slow independent check."""
    nodes = preorder(host)
    n = len(nodes)
    parent = [p for _, p in nodes]
    out = set()
    for mask in range(1, 1 << n):
        cut = frozenset(v for v in range(n) if mask >> v & 1)
        try:
            PrimarySubtree(host, cut).validate()
        except ValueError:
            continue
        out.add(cut)
    assert parent[0] == -1
    return out


def test_cherry_by_hand():
    # the cherry has two primary subtrees: the root alone, and the whole tree
    subs = list(primary_subtrees(rooted_star(2)))
    assert sorted(q_monomial(s) for s in subs) == [(0, 1), (2, 0)]
    assert str(generating_function(rooted_star(2))) == "x^2 + y"


def test_trivial_host():
    assert [q_monomial(s) for s in primary_subtrees(TRIVIAL)] == [(1, 0)]


def test_enumeration_matches_brute_force(rooted_upto_10):
    for t in rooted_upto_10:
        if t.vertex_count > 8:
            break
        assert {s.cut for s in primary_subtrees(t)} == brute_cuts(t)


def test_no_duplicates():
    t = parse_dyck("(((()())())(()()))")
    cuts = [s.cut for s in primary_subtrees(t)]
    assert len(cuts) == len(set(cuts))
    for s in primary_subtrees(t):
        s.validate()
        assert 0 in s.vertices()


def test_validate_rejects_bad_cuts():
    t = parse_dyck("((()())())")  # preorder: 0 root, 1 cherry, 2, 3 its leaves, 4 leaf
    with pytest.raises(ValueError):
        PrimarySubtree(t, frozenset({1})).validate()  # leaf 4 uncovered
    with pytest.raises(ValueError):
        PrimarySubtree(t, frozenset({1, 2, 4})).validate()  # 2 below 1
    with pytest.raises(ValueError):
        PrimarySubtree(t, frozenset()).validate()
    PrimarySubtree(t, frozenset({1, 4})).validate()


@given(rooted_tree_st)
def test_generating_function_is_tree_polynomial(t):
    assert generating_function(t) == p_rooted(t)
    assert count_primary_subtrees(t) == coefficient_sum(p_rooted(t))


def test_path_count():
    # a path of length l has l+1 primary subtrees
    for length in range(6):
        assert count_primary_subtrees(rooted_path(length)) == length + 1


# -- collision search -------------------------------------------------------

def test_p0_binary_collision():
    trees = list(catalog_upto("rooted-m-ary", 4, 2))
    groups = collision_search([t for t in trees if t.leaf_count == 4], partial(p_prime, p=0))
    assert groups == [{"invariant": "x^4", "trees": sorted(t.code for t in trees if t.leaf_count == 4)}]


def test_full_polynomial_injective_small():
    assert collision_search(catalog_upto("rooted", 9), p_tree) == []


def test_report_is_deterministic_across_workers():
    trees = list(catalog_upto("rooted-m-ary", 9, 2))
    inv = partial(p_prime, p=0)
    serial = collision_search(trees, inv, workers=1)
    parallel = collision_search(trees, inv, workers=2, chunk=7)
    assert serial == parallel
    assert serial


def test_mixed_catalog_tags_sorts():
    trees = list(catalog_upto("rooted", 3)) + list(catalog_upto("unrooted", 3))
    groups = collision_search(trees, lambda t: 0)
    ids = groups[0]["trees"]
    assert all(i.startswith(("rooted:", "unrooted:")) for i in ids)
    assert "rooted:(()())" in ids and "unrooted:(()())" in ids


def test_default_workers_env(monkeypatch):
    monkeypatch.setenv("TREEPOLY_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.delenv("TREEPOLY_WORKERS")
    assert default_workers() >= 1
