"""Exhaustive desk-scale sweeps over tree catalogs.

Each sweep returns a :class:`SweepResult` holding the number of trees
checked and the first counterexample found, if any.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .catalog import catalog_upto, rooted_trees, unrooted_trees
from .counting import free_counts, rooted_counts
from .invariant import eisenstein_check, p_rooted, p_tree, p_unrooted
from .oracle import collision_search, count_primary_subtrees, generating_function
from .polyring import coefficient_sum
from .reconstruct import NotATreePolynomial, reconstruct_general, reconstruct_rooted
from .trees import attach_root_leaf, contract_leaf_edges

__all__ = ["SweepResult", "SUITES", "LIMITS", "run_suite"]


@dataclass
class SweepResult:
    checked: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def __str__(self):
        if self.ok:
            return f"checked {self.checked} trees: OK"
        return f"checked {self.checked} trees: FAIL {self.counterexample}"


def _count_check(n_max: int, rooted: bool = True, unrooted: bool = False) -> str | None:
    r, f = rooted_counts(n_max), free_counts(n_max)
    for n in range(1, n_max + 1):
        if rooted:
            got = sum(1 for _ in rooted_trees(n))
            if got != r[n]:
                return f"enumerated {got} rooted trees on {n} vertices, recurrence says {r[n]}"
        if unrooted and n >= 2:
            got = sum(1 for _ in unrooted_trees(n))
            if got != f[n]:
                return f"enumerated {got} unrooted trees on {n} vertices, recurrence says {f[n]}"
    return None


def sweep_generating_function(n_max: int) -> SweepResult:
    """Generating function of primary subtrees equals the recursive polynomial."""
    bad = _count_check(n_max)
    if bad:
        return SweepResult(0, bad)
    k = 0
    for t in catalog_upto("rooted", n_max):
        k += 1
        p = p_rooted(t)
        if generating_function(t) != p:
            return SweepResult(k, f"{t.code}: generating function differs from {p}")
        if coefficient_sum(p) != count_primary_subtrees(t):
            return SweepResult(k, f"{t.code}: coefficient sum is not the primary-subtree count")
    return SweepResult(k)


def sweep_eisenstein(n_max: int) -> SweepResult:
    k = 0
    for t in catalog_upto("rooted", n_max):
        if t.is_trivial:
            continue
        k += 1
        rep = eisenstein_check(p_rooted(t))
        if not rep.passes:
            return SweepResult(k, f"rooted {t.code} fails {rep.failed_condition}")
    for u in catalog_upto("unrooted", n_max):
        k += 1
        rep = eisenstein_check(p_unrooted(u))
        if rep.passes or rep.failed_condition not in ("constant", "divisibility"):
            return SweepResult(k, f"unrooted {u.code} has Eisenstein report {rep}")
    return SweepResult(k)


def sweep_injectivity(n_max: int, workers: int = 1) -> SweepResult:
    """No two non-isomorphic trees (rooted or unrooted) share a polynomial."""
    bad = _count_check(n_max, rooted=True, unrooted=n_max >= 2)
    if bad:
        return SweepResult(0, bad)
    trees = list(catalog_upto("rooted", n_max))
    if n_max >= 2:
        trees += list(catalog_upto("unrooted", n_max))
    groups = collision_search(trees, p_tree, workers=workers)
    if groups:
        g = groups[0]
        return SweepResult(len(trees), f"{g['trees']} share {g['invariant']}")
    return SweepResult(len(trees))


def sweep_roundtrip(n_max: int) -> SweepResult:
    k = 0
    for t in catalog_upto("rooted", n_max):
        k += 1
        try:
            back = reconstruct_rooted(p_rooted(t))
        except NotATreePolynomial as exc:
            return SweepResult(k, f"rooted {t.code}: {exc}")
        if back != t:
            return SweepResult(k, f"rooted {t.code} came back as {back.code}")
    for u in catalog_upto("unrooted", n_max):
        k += 1
        try:
            back = reconstruct_general(p_unrooted(u))
        except NotATreePolynomial as exc:
            return SweepResult(k, f"unrooted {u.code}: {exc}")
        if back != u:
            return SweepResult(k, f"unrooted {u.code} came back as {back!r}")
    return SweepResult(k)


def sweep_contraction(n_max: int) -> SweepResult:
    """Contraction multisets separate unrooted trees and each contraction re-attaches to the original."""
    trees = list(catalog_upto("unrooted", n_max))
    sigs = []
    for u in trees:
        images = contract_leaf_edges(u)
        for r in images:
            if attach_root_leaf(r) != u:
                return SweepResult(len(sigs), f"re-attaching a leaf to {r.code} does not give {u.code}")
        sigs.append(tuple(sorted(r.code for r in images)))
    seen = Counter(sigs)
    for u, s in zip(trees, sigs):
        if seen[s] > 1:
            return SweepResult(len(trees), f"{u.code} shares its contraction multiset")
    return SweepResult(len(trees))


SUITES = {
    "lemma2": sweep_generating_function,
    "eisenstein": sweep_eisenstein,
    "injectivity": sweep_injectivity,
    "roundtrip": sweep_roundtrip,
    "contraction": sweep_contraction,
}

# largest --max-size accepted per suite; keeps every sweep at desk scale
LIMITS = {"lemma2": 12, "eisenstein": 14, "injectivity": 14, "roundtrip": 12, "contraction": 14}


def run_suite(name: str, n_max: int, workers: int = 1) -> SweepResult:
    if name not in SUITES:
        raise KeyError(name)
    if name == "injectivity":
        return sweep_injectivity(n_max, workers)
    return SUITES[name](n_max)
