"""
Recovering a tree from its polynomial
=====================================

The polynomial determines the tree, and the tree can be found again by
peeling off the stem and trial-dividing by polynomials of smaller trees.
"""

# %%
from treepoly import (
    Polynomial,
    factor_tree_product,
    infer_stem,
    p_rooted,
    p_unrooted,
    parse_dyck,
    reconstruct_general,
    reconstruct_rooted,
)

p = Polynomial.parse("x^2 + 2*y")
print(reconstruct_rooted(p).code)

# %%
# Step by step for a larger tree: the y-coefficient gives the stem length,
# and what remains after removing y factors into subtree polynomials.
tree = parse_dyck("((((()())(()))))")
p = p_rooted(tree)
length, rest = infer_stem(p)
print("polynomial:", p)
print("stem length:", length)
print("branches:", [str(f) for f in factor_tree_product(rest - Polynomial.var("y"))])
print("rebuilt:", reconstruct_rooted(p).code, "original:", tree.code)

# %%
# reconstruct_general also accepts products coming from unrooted trees.
q = Polynomial.parse("x^6 + 3*x^4*y + 3*x^2*y^2 + y^3")
print(type(reconstruct_general(q)).__name__, reconstruct_general(q).code)

# %%
# Polynomials that are not tree polynomials are rejected.
from treepoly import NotATreePolynomial

for text in ["x^2 + x*y", "x^2 + 3", "2*x^2 + y"]:
    try:
        reconstruct_general(Polynomial.parse(text))
    except NotATreePolynomial as exc:
        print(f"{text!r}: {exc}")
