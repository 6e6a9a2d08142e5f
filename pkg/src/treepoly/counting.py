"""Closed counting recurrences for tree classes.

These are deliberately independent of :mod:`treepoly.catalog`; they serve
as the oracle that the enumerators produce the right number of classes.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


def rooted_counts(n_max: int) -> list[int]:
    """Number of unlabeled rooted trees with ``n`` vertices, for ``n = 0..n_max``.

    Uses ``n a(n+1) = sum_{k=1}^{n} (sum_{d | k} d a(d)) a(n-k+1)``.
    """
    a = [0] * (n_max + 1)
    if n_max >= 1:
        a[1] = 1
    s = [0] * (n_max + 1)  # s[k] = sum_{d|k} d a(d)
    for n in range(1, n_max):
        s[n] = sum(d * a[d] for d in range(1, n + 1) if n % d == 0)
        total = sum(s[k] * a[n - k + 1] for k in range(1, n + 1))
        a[n + 1] = total // n
    return a


def free_counts(n_max: int) -> list[int]:
    """Number of unlabeled free trees with ``n`` vertices (Otter's formula)."""
    r = rooted_counts(n_max)
    f = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        pairs = sum(r[i] * r[n - i] for i in range(n + 1))
        if n % 2 == 0:
            pairs -= r[n // 2]
        f[n] = r[n] - pairs // 2
    return f


@lru_cache(maxsize=None)
def mary_count(m: int, leaves: int) -> int:
    """Rooted trees with ``leaves`` leaves whose internal vertices all have ``m`` children."""
    if m < 2:
        raise ValueError("arity must be at least 2")
    if leaves == 1:
        return 1
    return _multisets(m, leaves, 1, m)


@lru_cache(maxsize=None)
def _multisets(m: int, leaves: int, min_size: int, slots: int) -> int:
    # multisets of ``slots`` subtrees, each with >= min_size leaves, totalling ``leaves``;
    # grouped by the smallest size used and its multiplicity j
    if slots == 0:
        return int(leaves == 0)
    total = 0
    for size in range(min_size, leaves + 1):
        if size * slots > leaves:
            break
        kinds = mary_count(m, size)
        for j in range(1, slots + 1):
            if size * j > leaves:
                break
            total += comb(kinds + j - 1, j) * _multisets(m, leaves - size * j, size + 1, slots - j)
    return total
