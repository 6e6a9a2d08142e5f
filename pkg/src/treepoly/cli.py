"""Command-line interface.

Exit codes: 0 success, 1 negative verdict (distinct trees, failed sweep,
unmet collision expectation, not a tree polynomial), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import partial

from .catalog import catalog_upto
from .invariant import p_labeled, p_prime, p_tree
from .oracle import collision_search, default_workers
from .polyring import Polynomial, PolynomialParseError
from .reconstruct import NotATreePolynomial, reconstruct_general
from .trees import (
    LabeledRootedTree,
    LabeledUnrootedTree,
    TreeError,
    UnrootedTree,
    newick_leaf_names,
    parse_dyck,
    parse_newick,
)
from .verify import LIMITS, SUITES, run_suite

COLLIDE_CLASSES = {
    "rooted": ("rooted", 2),
    "unrooted": ("unrooted", 2),
    "binary": ("rooted-m-ary", 2),
    "root-degree-gt1": ("root-degree-gt1", 2),
    "unrooted-binary": ("unrooted-m-ary", 2),
}


class UsageError(Exception):
    pass


def _variant(text: str):
    """Parse ``p``, ``p-prime:<n>`` or ``p-labeled`` into ``(kind, n)``."""
    if text in ("p", "p-labeled"):
        return text, None
    if text.startswith("p-prime:"):
        try:
            return "p-prime", int(text.split(":", 1)[1])
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(f"bad variant {text!r}; use p, p-prime:<n> or p-labeled")


def _read_tree(text: str, sort: str, fmt: str, labeled: bool = False):
    if fmt == "dyck":
        if labeled:
            raise UsageError("labeled trees need --format newick")
        t = parse_dyck(text)
        names = None
    else:
        t = parse_newick(text, labeled=labeled)
        names = newick_leaf_names(text) if labeled else None
    if sort == "unrooted":
        if labeled:
            t = LabeledUnrootedTree.from_rooted(t)
        else:
            t = UnrootedTree.from_rooted(t)
    return t, names


def _evaluate(t, variant) -> Polynomial:
    kind, n = variant
    if kind == "p":
        if isinstance(t, (LabeledRootedTree, LabeledUnrootedTree)):
            raise UsageError("use --variant p-labeled for labeled input")
        return p_tree(t)
    if kind == "p-prime":
        return p_prime(t, n)
    return p_labeled(t)


def _emit(p: Polynomial, out: str) -> str:
    return p.to_json() if out == "json" else str(p)


def cmd_compute(args) -> int:
    labeled = args.variant[0] == "p-labeled"
    t, names = _read_tree(args.tree, args.sort, args.format, labeled)
    p = _evaluate(t, args.variant)
    print(_emit(p, args.out))
    if labeled and names:
        legend = ", ".join(f"x_{i}={nm}" for i, nm in enumerate(names, 1))
        print(legend, file=sys.stderr)
    return 0


def cmd_compare(args) -> int:
    sort_b = args.sort_b or args.sort
    if sort_b != args.sort:
        raise UsageError(f"cannot compare a {args.sort} tree with a {sort_b} tree")
    labeled = args.variant[0] == "p-labeled"
    if labeled and args.format != "newick":
        raise UsageError("labeled trees need --format newick")
    if labeled:
        # both inputs share one name-to-label table
        ta = parse_newick(args.a, labeled=True)
        names = newick_leaf_names(args.a)
        tb = parse_newick(args.b, labeled=True, names=names)
        if args.sort == "unrooted":
            ta, tb = LabeledUnrootedTree.from_rooted(ta), LabeledUnrootedTree.from_rooted(tb)
        top = max(ta.max_label(), tb.max_label())
        pa, pb = p_labeled(ta, top), p_labeled(tb, top)
    else:
        ta, _ = _read_tree(args.a, args.sort, args.format)
        tb, _ = _read_tree(args.b, sort_b, args.format)
        pa, pb = _evaluate(ta, args.variant), _evaluate(tb, args.variant)
    same = pa == pb
    print("isomorphic" if same else "distinct")
    print(_emit(pa, args.out))
    print(_emit(pb, args.out))
    return 0 if same else 1


def cmd_verify(args) -> int:
    limit = LIMITS[args.suite]
    if args.max_size < 1 or args.max_size > limit:
        raise UsageError(f"--max-size for {args.suite} must be between 1 and {limit}")
    res = run_suite(args.suite, args.max_size, workers=default_workers())
    print(res)
    return 0 if res.ok else 1


def cmd_collide(args) -> int:
    kind, arity = COLLIDE_CLASSES[args.cls]
    vkind, n = args.variant
    if vkind == "p-labeled":
        raise UsageError("collide supports --variant p or p-prime:<n>")
    inv = p_tree if vkind == "p" else partial(p_prime, p=n)
    workers = default_workers()
    groups = collision_search(catalog_upto(kind, args.max_size, arity), inv, workers=workers)
    for g in groups:
        print(json.dumps(g, separators=(",", ":")))
    if args.expect_collision:
        return 0 if groups else 1
    if args.expect_injective:
        return 0 if not groups else 1
    return 0


def cmd_reconstruct(args) -> int:
    text = args.poly.strip()
    if text.startswith("{"):
        p = Polynomial.from_json(text)
    else:
        p = Polynomial.parse(text)
    try:
        t = reconstruct_general(p, budget=args.budget)
    except NotATreePolynomial as exc:
        print(f"NotATreePolynomial: {exc}", file=sys.stderr)
        return 1
    sort = "unrooted" if isinstance(t, UnrootedTree) else "rooted"
    print(f"{sort} {t.code}")
    return 0


def cmd_enumerate(args) -> int:
    kind, arity = COLLIDE_CLASSES[args.cls]
    for t in catalog_upto(kind, args.max_size, arity):
        print(t.code)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="treepoly", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def tree_flags(p, sort_required=True):
        p.add_argument("--sort", choices=("rooted", "unrooted"), required=sort_required)
        p.add_argument("--format", choices=("dyck", "newick"), default="dyck")
        p.add_argument("--variant", type=_variant, default=("p", None),
                       help="p, p-prime:<n> or p-labeled (default p)")
        p.add_argument("--out", choices=("text", "json"), default="text")

    p = sub.add_parser("compute", help="print the polynomial of a tree")
    p.add_argument("tree")
    tree_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="decide isomorphism by polynomial equality")
    p.add_argument("a")
    p.add_argument("b")
    tree_flags(p)
    p.add_argument("--sort-b", choices=("rooted", "unrooted"),
                   help="sort of the second tree; must equal --sort")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run an exhaustive sweep")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-size", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("collide", help="search a catalog for invariant collisions")
    p.add_argument("--class", dest="cls", choices=sorted(COLLIDE_CLASSES), required=True)
    p.add_argument("--max-size", type=int, required=True,
                   help="vertex count, or leaf count for --class binary")
    p.add_argument("--variant", type=_variant, default=("p", None))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--expect-collision", action="store_true")
    g.add_argument("--expect-injective", action="store_true")
    p.set_defaults(func=cmd_collide)

    p = sub.add_parser("reconstruct", help="recover a tree from its polynomial")
    p.add_argument("poly", help="polynomial text, e.g. 'x^2 + 2*y', or JSON")
    p.add_argument("--budget", type=int, default=None,
                   help="largest candidate tree (vertices) tried during factoring")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("enumerate", help="stream canonical Dyck words of a catalog")
    p.add_argument("--class", dest="cls", choices=sorted(COLLIDE_CLASSES), required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, TreeError, PolynomialParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
