"""
Integer specializations and where they break
============================================

Substituting an integer for y gives a polynomial in x alone. This script
searches small catalogs for pairs of trees that the substituted polynomial
can no longer tell apart.
"""

# %%
from functools import partial

from treepoly import catalog_upto, collision_search, p_prime, parse_dyck

# y = 0 forgets every internal vertex: all binary trees with 4 leaves give x^4
binary4 = [t for t in catalog_upto("rooted-m-ary", 4, 2) if t.leaf_count == 4]
for t in binary4:
    print(t.code, "->", p_prime(t, 0))

# %%
# y = 1 and y = -1 also collide on binary trees, but only further out.
binary = list(catalog_upto("rooted-m-ary", 12, 2))
for p in (1, -1):
    groups = collision_search(binary, partial(p_prime, p=p))
    print(f"y = {p}: {len(groups)} colliding groups among {len(binary)} binary trees")
    print("   first:", groups[0]["trees"], "->", groups[0]["invariant"])

# %%
# For a prime such as 2, binary trees stay apart in this range.
groups = collision_search(binary, partial(p_prime, p=2))
print("y = 2 on binary trees:", len(groups), "collisions")

# %%
# Over all rooted trees, y = 2 collides already at 7 vertices, with one tree
# whose root has a single child.
groups = collision_search(catalog_upto("rooted", 7), partial(p_prime, p=2))
for g in groups:
    degrees = [parse_dyck(c).root_degree for c in g["trees"]]
    print(g["trees"], "root degrees", degrees, "->", g["invariant"])

# %%
# Requiring root degree at least 2 is not enough at y = 2. The two trees
# below both have two or more root children and still agree, because the
# y-coefficient 2 of a path-like subtree is swallowed by the prime.
a, b = parse_dyck("(((((()))()))())"), parse_dyck("((())(())())")
print(a.root_degree, b.root_degree, p_prime(a, 2), "|", p_prime(b, 2))
