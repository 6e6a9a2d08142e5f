"""Brute-force ground truth for the tree polynomial.

Primary subtrees are enumerated explicitly as cuts of the host tree; their
monomials summed give the generating function that the recursive
polynomial must equal. :func:`collision_search` looks for distinct trees
sharing an invariant value.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator

from .polyring import XY, Polynomial
from .trees import RootedTree, preorder

__all__ = [
    "PrimarySubtree",
    "primary_subtrees",
    "q_monomial",
    "generating_function",
    "count_primary_subtrees",
    "collision_search",
    "default_workers",
]


@dataclass(frozen=True)
class PrimarySubtree:
    """A primary subtree of ``host``, given by the host vertices that are its leaves.

    Vertices are canonical preorder indices of the host.
    """

    host: RootedTree
    cut: frozenset[int]

    def _structure(self):
        nodes = preorder(self.host)
        parent = [p for _, p in nodes]
        is_leaf = [n.is_trivial for n, _ in nodes]
        return parent, is_leaf

    @property
    def alpha(self) -> int:
        _, is_leaf = self._structure()
        return sum(1 for v in self.cut if is_leaf[v])

    @property
    def beta(self) -> int:
        return len(self.cut) - self.alpha

    def vertices(self) -> frozenset[int]:
        """Cut vertices together with all their ancestors."""
        parent, _ = self._structure()
        out = set()
        for v in self.cut:
            while v >= 0 and v not in out:
                out.add(v)
                v = parent[v]
        return frozenset(out)

    def validate(self) -> None:
        """Raise ``ValueError`` unless the cut defines a primary subtree.

        Checks root inclusion, that the cut is an antichain and that every
        host leaf lies below exactly one cut vertex.
        """
        parent, is_leaf = self._structure()
        n = len(parent)
        if not self.cut or any(not (0 <= v < n) for v in self.cut):
            raise ValueError("cut must be a non-empty set of host vertices")

        def ancestors(v):
            out = []
            while v >= 0:
                out.append(v)
                v = parent[v]
            return out

        for v in self.cut:
            if ancestors(v)[-1] != 0:
                raise ValueError("subtree does not contain the host root")
            if any(a in self.cut for a in ancestors(v)[1:]):
                raise ValueError(f"cut vertex {v} lies below another cut vertex")
        for leaf in (v for v in range(n) if is_leaf[v]):
            hits = sum(1 for a in ancestors(leaf) if a in self.cut)
            if hits != 1:
                raise ValueError(f"host leaf {leaf} is covered {hits} times")


def _cuts(host: RootedTree) -> list[frozenset[int]]:
    nodes = preorder(host)
    kids: list[list[int]] = [[] for _ in nodes]
    for i, (_, p) in enumerate(nodes):
        if p >= 0:
            kids[p].append(i)
    memo: dict[int, list[frozenset[int]]] = {}
    # children have larger preorder indices, so a reverse sweep is bottom-up
    for v in range(len(nodes) - 1, -1, -1):
        options = [frozenset((v,))]
        if kids[v]:
            for combo in product(*(memo[c] for c in kids[v])):
                options.append(frozenset().union(*combo))
        memo[v] = options
    return memo[0]


def primary_subtrees(host: RootedTree) -> Iterator[PrimarySubtree]:
    """Every primary subtree of ``host``, each exactly once.

    At each vertex the cut either stops there or continues into all of its
    children.
    """
    for cut in _cuts(host):
        yield PrimarySubtree(host, cut)


def q_monomial(s: PrimarySubtree) -> tuple[int, int]:
    """Exponents ``(alpha, beta)`` of ``x^alpha y^beta`` for a primary subtree."""
    a = s.alpha
    return (a, len(s.cut) - a)


def generating_function(host: RootedTree) -> Polynomial:
    """Sum of ``q(S)`` over all primary subtrees ``S`` of ``host``."""
    is_leaf = [n.is_trivial for n, _ in preorder(host)]
    counts: dict[tuple[int, int], int] = {}
    for cut in _cuts(host):
        a = sum(1 for v in cut if is_leaf[v])
        key = (a, len(cut) - a)
        counts[key] = counts.get(key, 0) + 1
    return Polynomial(XY, counts)


def count_primary_subtrees(host: RootedTree) -> int:
    return len(_cuts(host))


def default_workers() -> int:
    """Worker count from ``TREEPOLY_WORKERS``, defaulting to the available CPUs."""
    env = os.environ.get("TREEPOLY_WORKERS")
    if env:
        return max(1, int(env))
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


_SORT = {"RootedTree": "rooted", "UnrootedTree": "unrooted"}


def _key(value) -> str:
    return str(value)


def _group_chunk(inv: Callable, trees: list) -> dict[str, list[tuple[str, str]]]:
    groups: dict[str, list[tuple[str, str]]] = {}
    for t in trees:
        groups.setdefault(_key(inv(t)), []).append((type(t).__name__, t.code))
    return groups


def collision_search(trees: Iterable, inv: Callable, workers: int = 1,
                     chunk: int = 2000) -> list[dict]:
    """Group ``trees`` by invariant value and return the non-singleton groups.

    Each report is ``{"invariant": <canonical text>, "trees": [<dyck>, ...]}``
    with trees sorted by code and reports sorted by invariant text, so the
    output does not depend on ``workers``. ``inv`` must be picklable when
    ``workers > 1``. An empty list certifies injectivity over ``trees``.
    """
    groups: dict[str, list[str]] = {}

    def merge(part):
        for k, v in part.items():
            groups.setdefault(k, []).extend(v)

    if workers <= 1:
        merge(_group_chunk(inv, list(trees)))
    else:
        batch: list = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = []
            for t in trees:
                batch.append(t)
                if len(batch) >= chunk:
                    futures.append(pool.submit(_group_chunk, inv, batch))
                    batch = []
            if batch:
                futures.append(pool.submit(_group_chunk, inv, batch))
            for f in futures:
                merge(f.result())
    mixed = len({kind for ids in groups.values() for kind, _ in ids}) > 1
    out = []
    for k, ids in groups.items():
        distinct = sorted(set(ids))
        if len(distinct) > 1:
            # tag codes with their sort only when rooted and unrooted trees are mixed
            names = [f"{_SORT.get(kind, kind)}:{code}" if mixed else code for kind, code in distinct]
            out.append({"invariant": k, "trees": sorted(names)})
    out.sort(key=lambda r: (len(r["invariant"]), r["invariant"]))
    return out
