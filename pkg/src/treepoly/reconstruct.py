"""Recover a tree from its polynomial.

A rooted tree polynomial is inverted by reading the stem length off the
``y`` coefficient, removing the stem and the branching ``y``, and splitting
the remaining product into tree polynomials. The splitting is trial
division against polynomials of enumerated trees: every irreducible factor
of a product of tree polynomials is itself a tree polynomial, so the first
candidate (in increasing size) that divides is always a true factor.
"""

from __future__ import annotations

from functools import lru_cache

from .catalog import trees_by_leaves_and_internals
from .invariant import X, Y, eisenstein_check, p_rooted, p_unrooted
from .polyring import XY, NotDivisible, Polynomial, coefficient_sum, try_div_exact
from .trees import TRIVIAL, RootedTree, UnrootedTree, attach_root_leaf, rooted_path, wedge

__all__ = [
    "NotATreePolynomial",
    "FactorizationFailure",
    "infer_stem",
    "factor_tree_product",
    "reconstruct_rooted",
    "reconstruct_general",
]

_Y_EXP = (0, 1)
# sample points for a cheap necessary divisibility test before long division
_PROBES = ((2, 3), (3, 1), (1, 5))


class NotATreePolynomial(ValueError):
    pass


class FactorizationFailure(NotATreePolynomial):
    """Trial division ran out of candidates; ``partial`` holds the factors found so far."""

    def __init__(self, msg: str, partial: list[Polynomial], rest: Polynomial):
        super().__init__(msg)
        self.partial = partial
        self.rest = rest


def _require_xy(p: Polynomial) -> None:
    if p.vars != XY:
        raise NotATreePolynomial(f"expected a polynomial over (x, y), got {p.vars}")
    if any(c < 0 for _, c in p.terms()):
        raise NotATreePolynomial("tree polynomials have no negative coefficients")


def infer_stem(p: Polynomial) -> tuple[int, Polynomial]:
    """Split ``p`` into the stem length and the polynomial of the affix tree at the branching vertex.

    >>> infer_stem(Polynomial.parse("x^2 + 2*y"))
    (1, Polynomial('x^2 + y', vars=('x', 'y')))
    """
    _require_xy(p)
    if p == X:
        return 0, X
    t = p.coefficient(_Y_EXP)
    if p.degree("x") == 1:
        if t < 1 or p != X + t * Y:
            raise NotATreePolynomial(f"{p} is not the polynomial of a rooted path")
        return t, X
    length = t - 1
    if length < 0:
        raise NotATreePolynomial(f"{p} has no y term")
    rest = p - length * Y
    report = eisenstein_check(rest)
    if not report.passes:
        raise NotATreePolynomial(f"{p} fails the {report.failed_condition} shape condition")
    return length, rest


@lru_cache(maxsize=None)
def _candidates(leaves: int, internals: int) -> tuple[tuple[RootedTree, Polynomial, int, tuple], ...]:
    out = []
    for t in trees_by_leaves_and_internals(leaves, internals):
        q = p_rooted(t)
        out.append((t, q, coefficient_sum(q), tuple(q.evaluate(pt) for pt in _PROBES)))
    return tuple(out)


def factor_tree_product(q: Polynomial, budget: int | None = None,
                        with_trees: bool = False) -> list:
    """Factor ``q`` into tree polynomials by trial division.

    Candidates are the polynomials of rooted trees taken in increasing
    vertex count, restricted to at most ``deg_x(q)`` leaves, at most
    ``coefficient_sum(q) - 1`` internal vertices and a coefficient sum that
    divides that of ``q`` (bounds recomputed as ``q`` shrinks). ``budget``
    caps the vertex count of candidates. Returns the factors sorted by
    the code of their trees, or the trees themselves when ``with_trees``.
    Raises :class:`FactorizationFailure` if ``q`` is not exhausted.
    """
    _require_xy(q)
    if q.is_zero():
        raise NotATreePolynomial("zero polynomial")
    found: list[tuple[RootedTree, Polynomial]] = []
    rest = q
    size = 1
    while not rest.is_one():
        deg = rest.degree("x")
        cs = coefficient_sum(rest)
        if deg == 0 or cs <= 0:
            break
        limit = deg + cs - 1
        if budget is not None:
            limit = min(limit, budget)
        if size > limit:
            break
        probes = tuple(rest.evaluate(pt) for pt in _PROBES)
        divided = False
        for leaves in range(1, min(deg, size) + 1):
            internals = size - leaves
            if internals > cs - 1:
                continue
            for t, cand, ccs, cprobe in _candidates(leaves, internals):
                if leaves > rest.degree("x"):
                    break
                while cs % ccs == 0 and all(v % c == 0 for v, c in zip(probes, cprobe)):
                    try:
                        quo = try_div_exact(rest, cand)
                    except NotDivisible:
                        break
                    found.append((t, cand))
                    rest = quo
                    divided = True
                    if rest.is_one():
                        break
                    cs = coefficient_sum(rest)
                    probes = tuple(rest.evaluate(pt) for pt in _PROBES)
                if rest.is_one():
                    break
            if rest.is_one():
                break
        if not divided:
            size += 1
    if not rest.is_one():
        partial = [c for _, c in sorted(found, key=lambda f: f[0].code)]
        raise FactorizationFailure(f"could not factor {rest} into tree polynomials", partial, rest)
    found.sort(key=lambda f: f[0].code)
    if with_trees:
        return [t for t, _ in found]
    return [c for _, c in found]


def reconstruct_rooted(p: Polynomial, budget: int | None = None) -> RootedTree:
    """The unique rooted tree whose polynomial is ``p``.

    >>> reconstruct_rooted(Polynomial.parse("x^2 + 2*y")).code
    '((()()))'
    """
    _require_xy(p)
    if p == X:
        return TRIVIAL
    if p.degree("x") >= 2:
        report = eisenstein_check(p)
        if not report.passes:
            raise NotATreePolynomial(f"{p} fails the {report.failed_condition} shape condition")
    length, rest = infer_stem(p)
    if rest == X:
        return rooted_path(length)
    parts = factor_tree_product(rest - Y, budget, with_trees=True)
    if len(parts) < 2:
        raise NotATreePolynomial(f"{p} does not branch into two or more subtrees")
    # each factor is matched to the catalog tree it came from, which is the
    # unique tree with that polynomial
    tree = wedge(parts)
    for _ in range(length):
        tree = wedge([tree])
    if p_rooted(tree) != p:
        raise NotATreePolynomial(f"reconstruction of {p} did not verify")
    return tree


def reconstruct_general(p: Polynomial, budget: int | None = None) -> RootedTree | UnrootedTree:
    """Rooted tree if ``p`` is a rooted tree polynomial, otherwise the unrooted tree whose contraction product is ``p``."""
    try:
        return reconstruct_rooted(p, budget)
    except NotATreePolynomial:
        pass
    _require_xy(p)
    if p.degree("x") < 2:
        raise NotATreePolynomial(f"{p} is neither a rooted nor an unrooted tree polynomial")
    branches = factor_tree_product(p, budget, with_trees=True)
    if len(branches) < 2:
        raise NotATreePolynomial(f"{p} is irreducible but not a rooted tree polynomial")
    candidate = attach_root_leaf(branches[0])
    if p_unrooted(candidate) != p:
        raise NotATreePolynomial(f"{p} is not the polynomial of an unrooted tree")
    return candidate
