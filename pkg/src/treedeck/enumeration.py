"""The universe of unlabelled free trees, plus a brute-force Prüfer oracle.

Free trees are generated as canonical level sequences with the algorithm of
Wright, Richmond, Odlyzko and McKay (constant amortised time per tree). The
oracle decodes every labelled tree and deduplicates by free code, which is
slow but shares nothing with the generator.
"""

from __future__ import annotations

from functools import partial
from typing import Iterator

from . import kernels
from .core import Tree
from .parallel import shard_map

DEFAULT_CAP = 20
ORACLE_MAX_N = 10


def _next_rooted_tree(levels: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_tree(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split at the root's second child: the first principal subtree and the rest."""
    m = len(levels)
    seen_one = False
    for i, d in enumerate(levels):
        if d == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [d - 1 for d in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_tree(candidate: list[int]) -> list[int] | None:
    left, rest = _split_tree(candidate)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return candidate
    p = len(left)
    nxt = _next_rooted_tree(candidate, p)
    if nxt is not None and candidate[p] > 2:
        new_left, _ = _split_tree(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[-len(suffix):] = suffix
    return nxt


def level_sequence_to_tree(levels: list[int]) -> Tree:
    """Vertex ``i`` gets depth ``levels[i]``; its parent is the last shallower vertex."""
    parents = []
    stack: list[int] = []
    for i, d in enumerate(levels):
        del stack[d:]
        if stack:
            parents.append(stack[-1])
        stack.append(i)
    return Tree.from_parents(parents)


def free_tree_level_sequences(n: int) -> Iterator[list[int]]:
    if n == 1:
        yield [0]
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_tree(levels)
        if levels is not None:
            yield levels
            levels = _next_rooted_tree(levels)


def enumerate_free_trees(n: int, cap: int = DEFAULT_CAP) -> Iterator[Tree]:
    """One tree per isomorphism class on ``n`` vertices, in a fixed order."""
    if not 1 <= n <= cap:
        raise ValueError(f"n must be in 1..{cap}, got {n}")
    for levels in free_tree_level_sequences(n):
        yield level_sequence_to_tree(levels)


def count_free_trees(n: int, cap: int = DEFAULT_CAP) -> int:
    if not 1 <= n <= cap:
        raise ValueError(f"n must be in 1..{cap}, got {n}")
    return sum(1 for _ in free_tree_level_sequences(n))


def prufer_oracle_codes(n: int, jobs: int | None = None) -> set[str]:
    """Free codes of all labelled trees on ``n`` vertices, by exhaustive Prüfer decoding."""
    if not 2 <= n <= ORACLE_MAX_N:
        raise ValueError(f"the Prüfer oracle needs 2 <= n <= {ORACLE_MAX_N}, got {n}")
    if n == 2:
        return kernels.prufer_class_codes(2)
    # shard on the first sequence entry
    parts = shard_map(partial(_prufer_shard, n), range(n), jobs)
    return set().union(*parts)


def _prufer_shard(n: int, first: int) -> set[str]:
    return kernels.prufer_class_codes(n, first, first + 1)


def prufer_oracle_count(n: int, jobs: int | None = None) -> int:
    return len(prufer_oracle_codes(n, jobs))
