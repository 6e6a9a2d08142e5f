import itertools

import pytest
import sympy
from hypothesis import given

from treepoly.catalog import catalog_upto
from treepoly.invariant import (
    X,
    Y,
    eisenstein_check,
    p_from_dyck,
    p_labeled,
    p_prime,
    p_rooted,
    p_tree,
    p_unrooted,
    vertex_labels,
)
from treepoly.polyring import Polynomial, leaf_vars
from treepoly.trees import (
    TRIVIAL,
    LabeledRootedTree,
    LabeledUnrootedTree,
    TreeError,
    UnrootedTree,
    contract_leaf_edges,
    parse_dyck,
    preorder,
    rooted_path,
    rooted_star,
    stem_length,
)

from conftest import rooted_tree_st

SX, SY = sympy.symbols("x y")


def sympy_p(t):
    """Same recursion evaluated by sympy, used as an independent arithmetic check."""
    if t.is_trivial:
        return SX
    return SY + sympy.Mul(*(sympy_p(c) for c in t.children))


def to_sympy(p):
    return sum((c * SX**e[0] * SY**e[1] for e, c in p.terms()), sympy.Integer(0))


def test_small_examples():
    assert str(p_rooted(parse_dyck("((()()))"))) == "x^2 + 2*y"
    assert p_rooted(TRIVIAL) == X
    assert p_rooted(rooted_star(2)) == X**2 + Y
    assert str(p_rooted(parse_dyck("((()())())"))) == "x^3 + x*y + y"


@pytest.mark.parametrize("k", range(2, 7))
def test_star(k):
    assert p_rooted(rooted_star(k)) == X**k + Y


@pytest.mark.parametrize("length", range(0, 11))
def test_path(length):
    assert p_rooted(rooted_path(length)) == X + length * Y


def test_unrooted_three_star():
    star = UnrootedTree.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert p_unrooted(star) == (X**2 + Y) ** 3
    assert str(p_unrooted(star)) == "x^6 + 3*x^4*y + 3*x^2*y^2 + y^3"


def test_two_vertex_unrooted_tree():
    # contracting either leaf edge leaves a single vertex
    edge = UnrootedTree.from_edges(2, [(0, 1)])
    assert p_unrooted(edge) == X**2


def test_p_tree_dispatch():
    t = rooted_star(2)
    assert p_tree(t) == p_rooted(t)
    assert p_tree(UnrootedTree.from_rooted(t)) == p_unrooted(UnrootedTree.from_rooted(t))
    with pytest.raises(TypeError):
        p_tree("(()())")
    with pytest.raises(TypeError):
        p_unrooted(t)


def test_matches_sympy_recursion(rooted_upto_10):
    for t in rooted_upto_10[::11]:
        assert sympy.expand(sympy_p(t) - to_sympy(p_rooted(t))) == 0


@given(rooted_tree_st)
def test_dyck_stack_evaluation_agrees(t):
    assert p_from_dyck(t.code) == p_rooted(t)


@given(rooted_tree_st)
def test_degree_and_leading_coefficient(t):
    p = p_rooted(t)
    assert p.degree("x") == t.leaf_count
    assert p.leading_term() == ((t.leaf_count, 0), 1)


@given(rooted_tree_st)
def test_y_coefficient_is_stem_plus_one(t):
    p = p_rooted(t)
    coef = p.coefficient((0, 1))
    if t.leaf_count == 1:
        assert coef == stem_length(t)
    else:
        assert coef == stem_length(t) + 1


def test_unrooted_is_product_of_contractions(unrooted_upto_10):
    for u in unrooted_upto_10[::13]:
        prod = Polynomial.one()
        for r in contract_leaf_edges(u):
            prod = prod * p_rooted(r)
        assert p_unrooted(u) == prod


def test_p_prime_substitutes():
    t = parse_dyck("((()()))")
    assert str(p_prime(t, 2)) == "x^2 + 4"
    assert p_prime(t, 2).vars == ("x",)
    assert p_prime(t, 0) == Polynomial.var("x", ("x",)) ** 2
    assert str(p_prime(t, -1)) == "x^2 - 2"


def test_vertex_labels():
    t = parse_dyck("((()())())")
    labels = vertex_labels(t)
    assert len(labels) == t.vertex_count
    assert labels[0] == p_rooted(t)
    for i, (node, _) in enumerate(preorder(t)):
        assert labels[i] == p_rooted(node)


# -- labeled variant --------------------------------------------------------

def test_labeled_basic():
    t = LabeledRootedTree.from_shape(rooted_star(2), [1, 2])
    x1, x2, y = (Polynomial.var(v, leaf_vars(2)) for v in ("x_1", "x_2", "y"))
    assert p_labeled(t) == x1 * x2 + y
    assert str(p_labeled(t)) == "x_1*x_2 + y"


def test_labeled_alphabet_size():
    t = LabeledRootedTree.from_shape(rooted_star(2), [1, 1])
    assert p_labeled(t, 3).vars == leaf_vars(3)
    with pytest.raises(TreeError):
        p_labeled(LabeledRootedTree.from_shape(rooted_star(2), [1, 4]), 3)
    with pytest.raises(TypeError):
        p_labeled(rooted_star(2))


def test_labeled_specializes_to_unlabeled(rooted_upto_10):
    # sending every x_i to x recovers the plain polynomial
    for t in rooted_upto_10[::17]:
        labels = [(i % 3) + 1 for i in range(t.leaf_count)]
        lt = LabeledRootedTree.from_shape(t, labels)
        p = p_labeled(lt, 3)
        flat = Polynomial(("x", "y"), [((sum(e[:-1]), e[-1]), c) for e, c in p.terms()])
        assert flat == p_rooted(t)


def test_labeled_unrooted_product():
    adj = [[1, 2, 3], [0], [0], [0]]
    t = LabeledUnrootedTree.from_adjacency(adj, [None, 1, 2, 3])
    vs = leaf_vars(3)
    x1, x2, x3, y = (Polynomial.var(v, vs) for v in vs)
    assert p_labeled(t) == (x2 * x3 + y) * (x1 * x3 + y) * (x1 * x2 + y)


def test_labeled_separates_label_placements():
    shape = parse_dyck("((()())())")
    polys = {}
    for perm in itertools.permutations([1, 2, 3]):
        lt = LabeledRootedTree.from_shape(shape, perm)
        polys.setdefault(p_labeled(lt), set()).add(lt.code)
    assert all(len(codes) == 1 for codes in polys.values())
    assert len(polys) == 3


# -- Eisenstein shape -------------------------------------------------------

def test_eisenstein_passes_on_rooted(rooted_upto_10):
    for t in rooted_upto_10:
        if t.leaf_count >= 2:
            assert eisenstein_check(p_rooted(t)).passes, t


def test_eisenstein_reports_condition():
    assert eisenstein_check(X**2 + 2 * Y).passes
    assert eisenstein_check(2 * X**2 + Y).failed_condition == "leading"
    assert eisenstein_check(X**2 + X + Y).failed_condition == "divisibility"
    assert eisenstein_check(X**2 + Y**2).failed_condition == "constant"
    assert eisenstein_check(X**2 + X * Y).failed_condition == "constant"
    assert eisenstein_check((X**2 + Y) ** 2).failed_condition == "constant"
    assert not eisenstein_check((X + Y) ** 2)


def test_eisenstein_rejects_other_rings():
    with pytest.raises(ValueError):
        eisenstein_check(Polynomial.var("x", ("x",)))
    with pytest.raises(ValueError):
        eisenstein_check(Polynomial.zero())
