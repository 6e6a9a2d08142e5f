"""Isomorph-free exhaustive enumeration of tree classes.

Every generator yields one representative per isomorphism class, in a
deterministic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from typing import Iterator

from .trees import RootedTree, TRIVIAL, TreeError, UnrootedTree

__all__ = [
    "TreeCatalog",
    "CLASSES",
    "rooted_trees",
    "unrooted_trees",
    "mary_trees",
    "unrooted_mary_trees",
    "root_degree_gt1_trees",
    "trees_by_leaves_and_internals",
    "enumerate_trees",
    "catalog_upto",
]

CLASSES = ("rooted", "unrooted", "rooted-m-ary", "root-degree-gt1", "unrooted-m-ary")


def _from_levels(levels: list[int]) -> RootedTree:
    # levels[0] is the root (level 0); children follow their parent in preorder
    stack: list[list[RootedTree]] = []
    depth_of: list[int] = []
    for lv in levels:
        while depth_of and depth_of[-1] >= lv:
            kids = stack.pop()
            depth_of.pop()
            stack[-1].append(RootedTree(kids))
        stack.append([])
        depth_of.append(lv)
    while len(stack) > 1:
        kids = stack.pop()
        stack[-1].append(RootedTree(kids))
    return RootedTree(stack[0])


def rooted_trees(n: int) -> Iterator[RootedTree]:
    """All rooted trees with ``n`` vertices.

    Canonical level sequences are stepped with the Beyer-Hedetniemi
    successor rule, from the path down to the star.
    """
    if n < 1:
        raise TreeError("rooted trees need at least one vertex")
    if n == 1:
        yield TRIVIAL
        return
    levels = list(range(n))
    while True:
        yield _from_levels(levels)
        p = n - 1
        while p > 0 and levels[p] == 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        shift = p - q
        for i in range(p, n):
            levels[i] = levels[i - shift]


def unrooted_trees(n: int) -> Iterator[UnrootedTree]:
    """All free trees with ``n >= 2`` vertices, filtered from rooted trees by center rooting."""
    if n < 2:
        raise TreeError("unrooted trees need at least 2 vertices")
    for t in rooted_trees(n):
        u = UnrootedTree.from_rooted(t)
        if u.rep == t:
            yield u


@lru_cache(maxsize=None)
def _mary(m: int, leaves: int) -> tuple[RootedTree, ...]:
    if leaves == 1:
        return (TRIVIAL,)
    out: list[RootedTree] = []

    def pick(remaining: int, slots: int, min_size: int, min_idx: int, chosen: list):
        if slots == 0:
            if remaining == 0:
                out.append(RootedTree(chosen))
            return
        for size in range(min_size, remaining - slots + 2):
            pool = _mary(m, size)
            start = min_idx if size == min_size else 0
            for i in range(start, len(pool)):
                chosen.append(pool[i])
                pick(remaining - size, slots - 1, size, i, chosen)
                chosen.pop()

    pick(leaves, m, 1, 0, [])
    return tuple(sorted(out))


def mary_trees(m: int, leaves: int) -> Iterator[RootedTree]:
    """Rooted trees with ``leaves`` leaves where every internal vertex has exactly ``m`` children."""
    if m < 2:
        raise TreeError("m-ary catalogs need m >= 2")
    if leaves < 1:
        raise TreeError("leaf count must be at least 1")
    yield from _mary(m, leaves)


def root_degree_gt1_trees(n: int) -> Iterator[RootedTree]:
    for t in rooted_trees(n):
        if t.root_degree > 1:
            yield t


def unrooted_mary_trees(m: int, n: int) -> Iterator[UnrootedTree]:
    """Free trees on ``n`` vertices whose non-leaf vertices all have degree ``m + 1``."""
    if m < 2:
        raise TreeError("m-ary catalogs need m >= 2")
    for u in unrooted_trees(n):
        if all(d == 1 or d == m + 1 for d in u.degrees()):
            yield u


@lru_cache(maxsize=None)
def trees_by_leaves_and_internals(leaves: int, internals: int) -> tuple[RootedTree, ...]:
    """Rooted trees with exactly the given numbers of leaves and internal vertices."""
    if leaves < 1 or internals < 0:
        return ()
    if internals == 0:
        return (TRIVIAL,) if leaves == 1 else ()
    # the root is internal; its children share the remaining budget
    out: list[RootedTree] = []
    budget = internals - 1
    # parts are ordered by (leaves, internals, index) to generate multisets
    parts = [
        (a, b)
        for a in range(1, leaves + 1)
        for b in range(0, budget + 1)
        if trees_by_leaves_and_internals(a, b)
    ]

    def pick(rem_a: int, rem_b: int, start: int, start_idx: int, chosen: list):
        if rem_a == 0:
            if rem_b == 0 and chosen:
                out.append(RootedTree(chosen))
            return
        for k in range(start, len(parts)):
            a, b = parts[k]
            if a > rem_a or b > rem_b:
                continue
            pool = trees_by_leaves_and_internals(a, b)
            for i in range(start_idx if k == start else 0, len(pool)):
                chosen.append(pool[i])
                pick(rem_a - a, rem_b - b, k, i, chosen)
                chosen.pop()

    pick(leaves, budget, 0, 0, [])
    return tuple(sorted(out))


@dataclass(frozen=True)
class TreeCatalog:
    """A finite tree class of one size.

    ``size`` is the vertex count, except for ``rooted-m-ary`` where it is
    the leaf count.
    """

    kind: str
    size: int
    arity: int = 2

    def __post_init__(self):
        if self.kind not in CLASSES:
            raise TreeError(f"unknown tree class {self.kind!r}; expected one of {CLASSES}")
        if self.size < 1:
            raise TreeError("catalog size must be at least 1")

    def __iter__(self):
        return enumerate_trees(self)

    def shard(self, index: int, count: int):
        """Every ``count``-th tree starting at ``index``; shards partition the stream."""
        return islice(iter(self), index, None, count)


def enumerate_trees(cat: TreeCatalog) -> Iterator:
    k = cat.kind
    if k == "rooted":
        return rooted_trees(cat.size)
    if k == "unrooted":
        return unrooted_trees(cat.size)
    if k == "rooted-m-ary":
        return mary_trees(cat.arity, cat.size)
    if k == "root-degree-gt1":
        return root_degree_gt1_trees(cat.size)
    return unrooted_mary_trees(cat.arity, cat.size)


def catalog_upto(kind: str, max_size: int, arity: int = 2) -> Iterator:
    """Chain the catalogs of every valid size from the smallest up to ``max_size``."""
    lo = 2 if kind in ("unrooted", "unrooted-m-ary") else 1
    for n in range(lo, max_size + 1):
        yield from TreeCatalog(kind, n, arity)
