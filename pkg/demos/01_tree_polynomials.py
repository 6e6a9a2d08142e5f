"""
Computing tree polynomials
==========================

A walk through the basic invariant: build a few rooted trees, look at their
polynomials, then move on to unrooted trees.
"""

# %%
# Rooted trees are written as Dyck words: each vertex is a pair of
# parentheses around its children. Child order does not matter.
from treepoly import parse_dyck, p_rooted, rooted_path, rooted_star

cherry_on_stick = parse_dyck("((()()))")
print(cherry_on_stick.code, "->", p_rooted(cherry_on_stick))

# a leaf is x, and every internal vertex adds y to the product of its children
for k in range(2, 5):
    print(f"star with {k} leaves:", p_rooted(rooted_star(k)))
for length in range(4):
    print(f"path of length {length}:", p_rooted(rooted_path(length)))

# %%
# Two drawings of the same tree give the same canonical code and polynomial.
a = parse_dyck("((())(()()))")
b = parse_dyck("((()())(()))")
print(a == b, p_rooted(a) == p_rooted(b), p_rooted(a))

# %%
# The number of leaves is the x-degree, and the coefficients add up to the
# number of primary subtrees (see demo 05 for the brute-force count).
from treepoly import coefficient_sum

p = p_rooted(a)
print("leaves:", a.leaf_count, "degree in x:", p.degree("x"))
print("coefficient sum:", coefficient_sum(p))

# %%
# Unrooted trees use the product over the trees left after contracting each
# leaf edge. The 3-star contracts to three cherries.
from treepoly import UnrootedTree, contract_leaf_edges, p_unrooted

star3 = UnrootedTree.from_edges(4, [(0, 1), (0, 2), (0, 3)])
print([t.code for t in contract_leaf_edges(star3)])
print(p_unrooted(star3))

# %%
# Polynomials serialize to canonical text or JSON, and parse back.
from treepoly import Polynomial

q = p_unrooted(star3)
print(q.to_json())
assert Polynomial.parse(str(q)) == q
assert Polynomial.from_json(q.to_json()) == q
