import random

import pytest
from hypothesis import strategies as st

from treepoly.catalog import catalog_upto
from treepoly.trees import TRIVIAL, RootedTree

rooted_tree_st = st.recursive(
    st.just(TRIVIAL),
    lambda kids: st.lists(kids, min_size=1, max_size=3).map(RootedTree),
    max_leaves=8,
)


def shuffled_dyck(t: RootedTree, rng: random.Random) -> str:
    """A Dyck word for ``t`` with children emitted in random order."""
    kids = list(t.children)
    rng.shuffle(kids)
    return "(" + "".join(shuffled_dyck(c, rng) for c in kids) + ")"


@pytest.fixture(scope="session")
def rooted_upto_10():
    return list(catalog_upto("rooted", 10))


@pytest.fixture(scope="session")
def unrooted_upto_10():
    return list(catalog_upto("unrooted", 10))
