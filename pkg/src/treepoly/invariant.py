"""The tree polynomial and its variants.

For a rooted tree, the trivial tree maps to ``x`` and a root with children
``T_1..T_k`` maps to ``y + P(T_1) * ... * P(T_k)``. Unrooted trees map to
the product over their leaf-edge contractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polyring import XY, Polynomial, leaf_vars
from .trees import (
    LabeledRootedTree,
    LabeledUnrootedTree,
    RootedTree,
    TreeError,
    UnrootedTree,
    _scan_dyck,
    contract_leaf_edges,
    preorder,
)

__all__ = [
    "X",
    "Y",
    "p_rooted",
    "p_from_dyck",
    "p_unrooted",
    "p_tree",
    "p_prime",
    "p_labeled",
    "vertex_labels",
    "EisensteinReport",
    "eisenstein_check",
]

X = Polynomial.var("x")
Y = Polynomial.var("y")
_ONE = Polynomial.one()


@lru_cache(maxsize=None)
def p_rooted(t: RootedTree) -> Polynomial:
    """Tree polynomial of a rooted tree, memoized on the canonical code.

    >>> from treepoly.trees import parse_dyck
    >>> str(p_rooted(parse_dyck("((()()))")))
    'x^2 + 2*y'
    """
    if t.is_trivial:
        return X
    prod = _ONE
    for c in t.children:
        prod = prod * p_rooted(c)
    return prod + Y


def p_from_dyck(word: str) -> Polynomial:
    """Evaluate the polynomial directly from a Dyck word.

    Each pair of parentheses opens a running product; a pair with nothing
    inside closes to ``x``, any other pair closes to ``product + y``.
    """
    word = word.strip()
    _scan_dyck(word)
    stack: list[list] = []  # [product, has_child]
    value = None
    for ch in word:
        if ch == "(":
            stack.append([_ONE, False])
        else:
            prod, has_child = stack.pop()
            value = prod + Y if has_child else X
            if stack:
                stack[-1][0] = stack[-1][0] * value
                stack[-1][1] = True
    return value


def p_unrooted(t: UnrootedTree) -> Polynomial:
    if not isinstance(t, UnrootedTree):
        raise TypeError(f"expected UnrootedTree, got {type(t).__name__}")
    prod = _ONE
    for r in contract_leaf_edges(t):
        prod = prod * p_rooted(r)
    return prod


def p_tree(t) -> Polynomial:
    """Polynomial of a rooted or unrooted tree."""
    if isinstance(t, RootedTree):
        return p_rooted(t)
    if isinstance(t, UnrootedTree):
        return p_unrooted(t)
    raise TypeError(f"expected a rooted or unrooted tree, got {type(t).__name__}")


def p_prime(t, p: int) -> Polynomial:
    """Univariate specialization with ``y`` replaced by the integer ``p``.

    Any integer is accepted; the completeness guarantees only hold for primes.
    """
    return p_tree(t).substitute("y", p)


def p_labeled(t, t_size: int | None = None) -> Polynomial:
    """Leaf-labeled polynomial over ``x_1..x_t, y``.

    A leaf labeled ``i`` maps to ``x_i``; internal vertices follow the same
    rule as :func:`p_rooted`. Root labels of contraction images are ignored.
    For unrooted trees the product over leaf-edge contractions is taken.
    """
    if not isinstance(t, (LabeledRootedTree, LabeledUnrootedTree)):
        raise TypeError(f"expected a labeled tree, got {type(t).__name__}")
    top = t.max_label()
    if t_size is None:
        t_size = top
    if top > t_size:
        raise TreeError(f"label {top} exceeds alphabet size {t_size}")
    vars = leaf_vars(t_size)
    if isinstance(t, LabeledUnrootedTree):
        prod = Polynomial.one(vars)
        for r in contract_leaf_edges(t):
            prod = prod * _p_labeled_rooted(r.without_root_label(), vars)
        return prod
    return _p_labeled_rooted(t.without_root_label(), vars)


@lru_cache(maxsize=65536)
def _p_labeled_rooted(t: LabeledRootedTree, vars: tuple[str, ...]) -> Polynomial:
    if t.is_trivial:
        return Polynomial.var(f"x_{t.label}", vars)
    prod = Polynomial.one(vars)
    for c in t.children:
        prod = prod * _p_labeled_rooted(c, vars)
    return prod + Polynomial.var("y", vars)


def vertex_labels(t: RootedTree) -> dict[int, Polynomial]:
    """Map each vertex (canonical preorder index) to the polynomial of its affix tree."""
    return {i: p_rooted(node) for i, (node, _) in enumerate(preorder(t))}


@dataclass(frozen=True)
class EisensteinReport:
    passes: bool
    failed_condition: str | None  # "leading", "divisibility", "constant" or None

    def __bool__(self):
        return self.passes


def eisenstein_check(p: Polynomial) -> EisensteinReport:
    """Check the Eisenstein conditions for ``p`` viewed in ``Z[y][x]`` with the prime ideal ``(y)``.

    ``leading``: the coefficient of the top power of ``x`` is exactly 1.
    ``divisibility``: every lower coefficient is divisible by ``y``.
    ``constant``: the ``x``-free coefficient is not divisible by ``y^2``.
    """
    if p.vars != XY:
        raise ValueError(f"expected a polynomial over (x, y), got {p.vars}")
    if p.is_zero():
        raise ValueError("zero polynomial")
    n = p.degree("x")
    coeffs: dict[int, dict[int, int]] = {}
    for (ex, ey), c in p.terms():
        coeffs.setdefault(ex, {})[ey] = c
    if coeffs.get(n) != {0: 1}:
        return EisensteinReport(False, "leading")
    for i, a in coeffs.items():
        if i < n and 0 in a:
            return EisensteinReport(False, "divisibility")
    a0 = coeffs.get(0, {})
    if n == 0 or 1 not in a0:
        return EisensteinReport(False, "constant")
    return EisensteinReport(True, None)
