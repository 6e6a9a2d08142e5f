"""
Leaf-labeled trees
==================

With one variable per leaf label, the polynomial also records where each
label sits. Newick input names the leaves; names are numbered in order of
first appearance.
"""

# %%
from treepoly import LabeledRootedTree, p_labeled, parse_dyck, parse_newick
from treepoly.trees import newick_leaf_names

text = "((human,chimp),gorilla);"
tree = parse_newick(text, labeled=True)
print(newick_leaf_names(text), "->", tree.code)
print(p_labeled(tree))

# %%
# The same shape with the labels moved around gives a different polynomial,
# unless the move is just a swap of siblings.
shape = parse_dyck("((()())())")
for labels in ([1, 2, 3], [2, 1, 3], [1, 3, 2], [3, 2, 1]):
    t = LabeledRootedTree.from_shape(shape, labels)
    print(labels, t.code, p_labeled(t, 3))

# %%
# Unrooted labeled trees work the same way as unlabeled ones.
from treepoly import LabeledUnrootedTree

quartet = LabeledUnrootedTree.from_rooted(parse_newick("((a,b),(c,d));", labeled=True))
q = p_labeled(quartet)
print(quartet.code)
print(len(q), "terms over", q.vars, "; leading term", q.leading_term())
