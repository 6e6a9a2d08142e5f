"""Rooted, unrooted and leaf-labeled trees.

Trees are immutable values. A :class:`RootedTree` keeps its children sorted
by canonical code, so two rooted trees compare equal exactly when they are
isomorphic. The canonical code is the Dyck word obtained by emitting the
children in that order.

Vertices are addressed by their preorder index in the canonical Dyck word;
the root is vertex 0.
"""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "TreeError",
    "DyckParseError",
    "NewickParseError",
    "RootedTree",
    "UnrootedTree",
    "LabeledRootedTree",
    "LabeledUnrootedTree",
    "TRIVIAL",
    "trivial",
    "wedge",
    "rooted_star",
    "rooted_path",
    "parse_dyck",
    "to_dyck",
    "parse_newick",
    "to_newick",
    "newick_leaf_names",
    "canonical_code",
    "is_isomorphic",
    "branching_vertex",
    "stem_length",
    "affix_tree",
    "preorder",
    "contract_leaf_edges",
    "attach_root_leaf",
]


class TreeError(ValueError):
    pass


class DyckParseError(TreeError):
    def __init__(self, msg: str, pos: int):
        self.pos = pos
        super().__init__(f"{msg} at position {pos}")


class NewickParseError(TreeError):
    def __init__(self, msg: str, pos: int):
        self.pos = pos
        super().__init__(f"{msg} at position {pos}")


class RootedTree:
    """Unlabeled rooted tree with canonically ordered children.

    >>> parse_dyck("(()(()))") == wedge([rooted_path(1), trivial()])
    True
    """

    __slots__ = ("children", "code", "leaf_count", "vertex_count")

    def __init__(self, children: Iterable["RootedTree"] = ()):
        kids = tuple(sorted(children, key=lambda c: c.code))
        for c in kids:
            if not isinstance(c, RootedTree):
                raise TypeError(f"children must be RootedTree, got {type(c).__name__}")
        self.children = kids
        self.code = "(" + "".join(c.code for c in kids) + ")"
        if kids:
            self.leaf_count = sum(c.leaf_count for c in kids)
            self.vertex_count = 1 + sum(c.vertex_count for c in kids)
        else:
            self.leaf_count = 1
            self.vertex_count = 1

    @property
    def internal_count(self) -> int:
        return self.vertex_count - self.leaf_count

    @property
    def is_trivial(self) -> bool:
        return not self.children

    @property
    def root_degree(self) -> int:
        return len(self.children)

    def __eq__(self, other):
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self.code == other.code

    def __hash__(self):
        return hash(("rooted", self.code))

    def __lt__(self, other: "RootedTree"):
        return self.code < other.code

    def __repr__(self):
        return f"RootedTree({self.code!r})"

    def __str__(self):
        return self.code


TRIVIAL = RootedTree()


def trivial() -> RootedTree:
    return TRIVIAL


def wedge(parts: Sequence[RootedTree]) -> RootedTree:
    """Join the given trees under a new common root."""
    parts = list(parts)
    if not parts:
        raise TreeError("wedge needs at least one tree")
    return RootedTree(parts)


def rooted_star(k: int) -> RootedTree:
    if k < 1:
        raise TreeError("a rooted star needs k >= 1")
    return RootedTree([TRIVIAL] * k)


def rooted_path(length: int) -> RootedTree:
    if length < 0:
        raise TreeError("path length must be non-negative")
    t = TRIVIAL
    for _ in range(length):
        t = RootedTree([t])
    return t


# ---------------------------------------------------------------------------
# Dyck words


def _scan_dyck(word: str):
    """Raise DyckParseError unless ``word`` is a single balanced outermost pair."""
    if not word:
        raise DyckParseError("empty Dyck word", 0)
    depth = 0
    for i, ch in enumerate(word):
        if ch == "(":
            if depth == 0 and i > 0:
                raise DyckParseError("more than one outermost pair", i)
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise DyckParseError("unbalanced ')'", i)
        else:
            raise DyckParseError(f"unexpected character {ch!r}", i)
    if depth:
        raise DyckParseError("unclosed '('", len(word))


def parse_dyck(word: str) -> RootedTree:
    """Parse a balanced-parentheses word whose outermost pair is the root."""
    word = word.strip()
    _scan_dyck(word)
    stack: list[list[RootedTree]] = []
    result = None
    for ch in word:
        if ch == "(":
            stack.append([])
        else:
            node = RootedTree(stack.pop())
            if stack:
                stack[-1].append(node)
            else:
                result = node
    return result


def to_dyck(t: RootedTree) -> str:
    return t.code


# ---------------------------------------------------------------------------
# structural queries


def preorder(t: RootedTree) -> list[tuple[RootedTree, int]]:
    """``(subtree, parent index)`` for every vertex in canonical preorder."""
    out: list[tuple[RootedTree, int]] = []
    stack = [(t, -1)]
    while stack:
        node, parent = stack.pop()
        idx = len(out)
        out.append((node, parent))
        for c in reversed(node.children):
            stack.append((c, idx))
    return out


def branching_vertex(t: RootedTree) -> int:
    """Preorder index of the branching vertex.

    The root if it has more than one child; otherwise the first vertex below
    the root with at least two children. A rooted path has no such vertex and
    its far leaf is returned instead, so that :func:`stem_length` is the path
    length.
    """
    if t.is_trivial:
        raise TreeError("the trivial tree has no branching vertex")
    idx = 0
    node = t
    # along a chain of single children the preorder index equals the depth
    while len(node.children) == 1:
        node = node.children[0]
        idx += 1
    return idx


def stem_length(t: RootedTree) -> int:
    if t.is_trivial:
        return 0
    return branching_vertex(t)


def affix_tree(t: RootedTree, v: int) -> RootedTree:
    """The subtree induced by vertex ``v`` (a preorder index) and its descendants."""
    if not isinstance(v, int) or v < 0 or v >= t.vertex_count:
        raise TreeError(f"vertex {v!r} is not in a tree with {t.vertex_count} vertices")
    return preorder(t)[v][0]


def canonical_code(t) -> str:
    return t.code


def is_isomorphic(a, b) -> bool:
    """Isomorphism test by canonical codes; rooted and unrooted never match."""
    if type(a) is not type(b):
        return False
    return a.code == b.code


# ---------------------------------------------------------------------------
# adjacency helpers shared by unrooted and labeled trees


def _adjacency(t) -> tuple[list[list[int]], list]:
    """Adjacency lists and per-vertex leaf labels (None for unlabeled)."""
    adj: list[list[int]] = []
    labels: list = []
    stack = [(t, -1)]
    while stack:
        node, parent = stack.pop()
        idx = len(adj)
        adj.append([])
        labels.append(getattr(node, "label", None))
        if parent >= 0:
            adj[parent].append(idx)
            adj[idx].append(parent)
        for c in node.children:
            stack.append((c, idx))
    return adj, labels


def _root_at(adj: Sequence[Sequence[int]], root: int, labels=None, skip: int = -1):
    """Rooted tree of ``adj`` hanging from ``root``, ignoring vertex ``skip``.

    With ``labels`` a :class:`LabeledRootedTree` is built; a labeled vertex
    that ends up with children keeps its label as ``root_label`` (only the
    root can be in that position).
    """
    order = []
    parent = {root: -1}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if w != parent[v] and w != skip:
                parent[w] = v
                stack.append(w)
    built: dict[int, list] = {v: [] for v in order}
    node = None
    for v in reversed(order):
        kids = built.pop(v)
        if labels is None:
            node = RootedTree(kids)
        elif kids:
            node = LabeledRootedTree(kids, root_label=labels[v] if v == root else None)
        else:
            node = LabeledRootedTree(label=labels[v])
        if parent[v] >= 0:
            built[parent[v]].append(node)
    return node


def _centers(adj: Sequence[Sequence[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def _canonical_rep(adj, labels=None):
    reps = [_root_at(adj, c, labels) for c in _centers(adj)]
    return min(reps, key=lambda r: r.code)


def _edges_to_adj(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    count = 0
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n) or a == b:
            raise TreeError(f"bad edge ({a}, {b}) for {n} vertices")
        adj[a].append(b)
        adj[b].append(a)
        count += 1
    if count != n - 1:
        raise TreeError(f"a tree on {n} vertices has {n - 1} edges, got {count}")
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise TreeError("edges do not form a connected tree")
    return adj


# ---------------------------------------------------------------------------
# unrooted trees


class UnrootedTree:
    """Free tree, stored as its canonical rooted representative.

    The representative is rooted at the center, or for bicentral trees at
    the endpoint of the central edge giving the smaller rooted code.
    Single-vertex trees are rejected.
    """

    __slots__ = ("rep",)

    def __init__(self, rep: RootedTree):
        # callers should go through the constructors below
        self.rep = rep

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]]) -> "UnrootedTree":
        if len(adj) < 2:
            raise TreeError("unrooted trees need at least 2 vertices")
        return cls(_canonical_rep(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "UnrootedTree":
        return cls.from_adjacency(_edges_to_adj(n, edges))

    @classmethod
    def from_rooted(cls, t: RootedTree) -> "UnrootedTree":
        """Forget the root of ``t``."""
        adj, _ = _adjacency(t)
        return cls.from_adjacency(adj)

    @classmethod
    def from_dyck(cls, word: str) -> "UnrootedTree":
        return cls.from_rooted(parse_dyck(word))

    @property
    def code(self) -> str:
        return self.rep.code

    @property
    def vertex_count(self) -> int:
        return self.rep.vertex_count

    def adjacency(self) -> list[list[int]]:
        return _adjacency(self.rep)[0]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    @property
    def leaf_count(self) -> int:
        return sum(1 for d in self.degrees() if d == 1)

    def __eq__(self, other):
        if not isinstance(other, UnrootedTree):
            return NotImplemented
        return self.rep.code == other.rep.code

    def __hash__(self):
        return hash(("unrooted", self.rep.code))

    def __repr__(self):
        return f"UnrootedTree({self.rep.code!r})"


# ---------------------------------------------------------------------------
# leaf-labeled trees


class LabeledRootedTree:
    """Rooted tree whose leaves carry label indices ``1..t``.

    ``root_label`` is only used for trees obtained by contracting a labeled
    leaf edge; it takes part in the canonical code but not in the leaf
    polynomial.
    """

    __slots__ = ("children", "label", "root_label", "code", "leaf_count", "vertex_count")

    def __init__(self, children: Iterable["LabeledRootedTree"] = (), label: int | None = None,
                 root_label: int | None = None):
        kids = tuple(sorted(children, key=lambda c: c.code))
        if kids and label is not None:
            raise TreeError("only leaves carry a label")
        if not kids:
            if not isinstance(label, int) or label < 1:
                raise TreeError(f"leaf label must be a positive integer, got {label!r}")
        if root_label is not None and (not isinstance(root_label, int) or root_label < 1):
            raise TreeError(f"root label must be a positive integer, got {root_label!r}")
        for c in kids:
            if c.root_label is not None:
                raise TreeError("root labels are only allowed on the whole tree")
        self.children = kids
        self.label = label
        self.root_label = root_label
        body = f"({label})" if not kids else "(" + "".join(c.code for c in kids) + ")"
        self.code = body if root_label is None else f"{root_label}:{body}"
        self.leaf_count = sum(c.leaf_count for c in kids) if kids else 1
        self.vertex_count = 1 + sum(c.vertex_count for c in kids)

    @property
    def is_trivial(self) -> bool:
        return not self.children

    def leaf_labels(self) -> list[int]:
        out = []
        stack = [self]
        while stack:
            node = stack.pop()
            if node.children:
                stack.extend(reversed(node.children))
            else:
                out.append(node.label)
        return out

    def max_label(self) -> int:
        return max(self.leaf_labels())

    def shape(self) -> RootedTree:
        return RootedTree([c.shape() for c in self.children])

    def without_root_label(self) -> "LabeledRootedTree":
        if self.root_label is None:
            return self
        if self.children:
            return LabeledRootedTree(self.children)
        return LabeledRootedTree(label=self.label)

    @classmethod
    def from_shape(cls, shape: RootedTree, labels: Sequence[int]) -> "LabeledRootedTree":
        """Label the leaves of ``shape`` in canonical preorder with ``labels``."""
        labels = list(labels)
        if len(labels) != shape.leaf_count:
            raise TreeError(f"need {shape.leaf_count} labels, got {len(labels)}")
        it = iter(labels)

        def build(node):
            if node.is_trivial:
                return cls(label=next(it))
            return cls([build(c) for c in node.children])

        return build(shape)

    def __eq__(self, other):
        if not isinstance(other, LabeledRootedTree):
            return NotImplemented
        return self.code == other.code

    def __hash__(self):
        return hash(("labeled", self.code))

    def __repr__(self):
        return f"LabeledRootedTree({self.code!r})"


class LabeledUnrootedTree:
    """Free tree with labeled leaves (vertices of degree one)."""

    __slots__ = ("rep",)

    def __init__(self, rep: LabeledRootedTree):
        self.rep = rep

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]], labels: Sequence[int | None]):
        if len(adj) < 2:
            raise TreeError("unrooted trees need at least 2 vertices")
        labels = list(labels)
        for v, nbrs in enumerate(adj):
            if len(nbrs) == 1 and labels[v] is None:
                raise TreeError(f"leaf vertex {v} has no label")
            if len(nbrs) != 1:
                labels[v] = None
        return cls(_canonical_rep(adj, labels))

    @classmethod
    def from_rooted(cls, t: LabeledRootedTree) -> "LabeledUnrootedTree":
        """Forget the root; a root of degree one becomes a leaf and needs ``root_label``."""
        adj, labels = _adjacency(t)
        if len(adj[0]) == 1:
            if t.root_label is None:
                raise TreeError("forgetting a degree-one root needs a root label")
            labels[0] = t.root_label
        return cls.from_adjacency(adj, labels)

    @property
    def code(self) -> str:
        return self.rep.code

    def adjacency_and_labels(self):
        adj, labels = _adjacency(self.rep)
        if self.rep.root_label is not None:
            labels[0] = self.rep.root_label
        return adj, labels

    def max_label(self) -> int:
        return max(l for l in self.adjacency_and_labels()[1] if l is not None)

    def __eq__(self, other):
        if not isinstance(other, LabeledUnrootedTree):
            return NotImplemented
        return self.code == other.code

    def __hash__(self):
        return hash(("labeled-unrooted", self.code))

    def __repr__(self):
        return f"LabeledUnrootedTree({self.code!r})"


# ---------------------------------------------------------------------------
# leaf-edge contraction


def contract_leaf_edges(t):
    """Rooted trees obtained by contracting each leaf edge, sorted by code.

    Accepts :class:`UnrootedTree` (giving :class:`RootedTree` values) or
    :class:`LabeledUnrootedTree` (giving :class:`LabeledRootedTree` values
    whose ``root_label`` is the label of the contracted leaf).
    """
    if isinstance(t, UnrootedTree):
        adj, _ = _adjacency(t.rep)
        labels = None
    elif isinstance(t, LabeledUnrootedTree):
        adj, labels = t.adjacency_and_labels()
    else:
        raise TypeError(f"expected an unrooted tree, got {type(t).__name__}")
    out = []
    for leaf, nbrs in enumerate(adj):
        if len(nbrs) != 1:
            continue
        u = nbrs[0]
        if labels is None:
            out.append(_root_at(adj, u, skip=leaf))
            continue
        img = _root_at(adj, u, labels, skip=leaf)
        # the merged vertex inherits the contracted leaf's label as its root label
        if img.children:
            img = LabeledRootedTree(img.children, root_label=labels[leaf])
        else:
            img = LabeledRootedTree(label=img.label, root_label=labels[leaf])
        out.append(img)
    out.sort(key=lambda r: r.code)
    return out


def attach_root_leaf(t):
    """Undo a contraction: hang a new leaf on the root and forget the root."""
    if isinstance(t, RootedTree):
        adj, _ = _adjacency(t)
        adj.append([0])
        adj[0].append(len(adj) - 1)
        return UnrootedTree.from_adjacency(adj)
    if isinstance(t, LabeledRootedTree):
        if t.root_label is None:
            raise TreeError("re-attaching a labeled leaf needs the root label")
        adj, labels = _adjacency(t)
        adj.append([0])
        adj[0].append(len(adj) - 1)
        labels.append(t.root_label)
        return LabeledUnrootedTree.from_adjacency(adj, labels)
    raise TypeError(f"expected a rooted tree, got {type(t).__name__}")


# ---------------------------------------------------------------------------
# Newick

_NEWICK_SPECIAL = set("(),:;[]'")


class _NNode:
    __slots__ = ("children", "name")

    def __init__(self, name=None):
        self.children: list[_NNode] = []
        self.name = name


def _newick_skip(s: str, i: int) -> int:
    while i < len(s):
        if s[i].isspace():
            i += 1
        elif s[i] == "[":
            j = s.find("]", i)
            if j < 0:
                raise NewickParseError("unterminated comment", i)
            i = j + 1
        else:
            break
    return i


def _newick_name(s: str, i: int) -> tuple[str, int]:
    if s[i] == "'":
        j = i + 1
        buf = []
        while True:
            if j >= len(s):
                raise NewickParseError("unterminated quoted name", i)
            if s[j] == "'":
                if j + 1 < len(s) and s[j + 1] == "'":
                    buf.append("'")
                    j += 2
                    continue
                return "".join(buf), j + 1
            buf.append(s[j])
            j += 1
    j = i
    while j < len(s) and s[j] not in _NEWICK_SPECIAL and not s[j].isspace():
        j += 1
    return s[i:j].replace("_", " "), j


def _newick_tokens(s: str) -> _NNode:
    stack: list[_NNode] = []
    root: _NNode | None = None
    need_child = True  # an empty slot may hold an unnamed leaf
    last: _NNode | None = None  # node that may still receive a name or length
    i = _newick_skip(s, 0)

    def fresh_leaf():
        leaf = _NNode()
        if stack:
            stack[-1].children.append(leaf)
        return leaf

    while True:
        i = _newick_skip(s, i)
        if i >= len(s):
            raise NewickParseError("missing ';'", i)
        ch = s[i]
        if ch == "(":
            if not need_child:
                raise NewickParseError("unexpected '('", i)
            node = _NNode()
            if stack:
                stack[-1].children.append(node)
            elif root is None:
                root = node
            else:
                raise NewickParseError("unexpected '('", i)
            stack.append(node)
            need_child, last = True, None
            i += 1
        elif ch in ",)":
            if not stack:
                raise NewickParseError(f"unbalanced {ch!r}", i)
            if need_child:
                fresh_leaf()
            if ch == ",":
                need_child, last = True, None
            else:
                last = stack.pop()
                need_child = False
            i += 1
        elif ch == ":":
            if need_child:
                last = fresh_leaf()
                if root is None:
                    root = last
                need_child = False
            if last is None:
                raise NewickParseError("unexpected ':'", i)
            j = _newick_skip(s, i + 1)
            k = j
            while k < len(s) and (s[k].isdigit() or s[k] in ".eE+-"):
                k += 1
            if k == j:
                raise NewickParseError("expected branch length", j)
            try:
                float(s[j:k])
            except ValueError:
                raise NewickParseError("bad branch length", j) from None
            i = k
        elif ch == ";":
            if stack:
                raise NewickParseError("unbalanced '(': missing ')'", i)
            if root is None:
                root = _NNode()
            rest = _newick_skip(s, i + 1)
            if rest != len(s):
                raise NewickParseError("trailing characters after ';'", rest)
            return root
        elif ch == "]":
            raise NewickParseError(f"unexpected {ch!r}", i)
        else:
            name, j = _newick_name(s, i)
            if need_child:
                leaf = fresh_leaf()
                leaf.name = name
                if root is None:
                    root = leaf
                last, need_child = leaf, False
            elif last is not None and last.children and last.name is None:
                last.name = name  # internal names are ignored later
            else:
                raise NewickParseError(f"unexpected name {name!r}", i)
            i = j


def newick_leaf_names(s: str) -> list[str]:
    """Distinct leaf names of a Newick string in first-appearance order."""
    seen: dict[str, None] = {}
    stack = [_newick_tokens(s)]
    while stack:
        node = stack.pop()
        if not node.children and node.name:
            seen.setdefault(node.name)
        stack.extend(reversed(node.children))
    return list(seen)


def parse_newick(s: str, labeled: bool = False, names: Sequence[str] | None = None):
    """Parse a ``;``-terminated Newick string.

    Unlabeled mode discards every name and branch length. Labeled mode
    requires every leaf to be named and maps names to label indices in
    first-appearance order, after the entries of ``names`` if given (so
    ``names[i]`` becomes label ``i + 1``).

    >>> parse_newick("(,);") == rooted_star(2)
    True
    """
    root = _newick_tokens(s)
    index: dict[str, int] = {}
    for nm in names or ():
        index.setdefault(nm, len(index) + 1)

    # iterative post-order build
    order = []
    stack = [root]
    while stack:
        node = stack.pop()
        order.append(node)
        stack.extend(node.children)
    if labeled:
        # first appearance in left-to-right reading order
        seq = []
        stack = [root]
        while stack:
            node = stack.pop()
            if not node.children:
                if not node.name:
                    raise NewickParseError("unnamed leaf in labeled mode", 0)
                seq.append(node.name)
            stack.extend(reversed(node.children))
        for nm in seq:
            index.setdefault(nm, len(index) + 1)
    built: dict[int, object] = {}
    for node in reversed(order):
        kids = [built.pop(id(c)) for c in node.children]
        if not labeled:
            built[id(node)] = RootedTree(kids)
        elif kids:
            built[id(node)] = LabeledRootedTree(kids)
        else:
            built[id(node)] = LabeledRootedTree(label=index[node.name])
    return built[id(root)]


def _quote(name: str) -> str:
    if any(c in _NEWICK_SPECIAL or c.isspace() or c == "_" for c in name):
        return "'" + name.replace("'", "''") + "'"
    return name


def to_newick(t, names: Sequence[str] | None = None) -> str:
    """Newick text for a rooted tree, children in canonical order.

    Labeled leaves are written as ``names[label - 1]`` or the label number.
    """
    out: list[str] = []
    stack: list = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        if item.children:
            stack.append(")")
            for k, c in enumerate(reversed(item.children)):
                stack.append(c)
                if k < len(item.children) - 1:
                    stack.append(",")
            stack.append("(")
        elif isinstance(item, LabeledRootedTree):
            out.append(_quote(names[item.label - 1]) if names else str(item.label))
    return "".join(out) + ";"
