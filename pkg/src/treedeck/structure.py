"""Brushes, starlike trees and radial brush leaves."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Tree, distances_from


@dataclass(frozen=True)
class Brush:
    """A star ``K_{1,k}`` hanging off the rest of the tree by its root.

    ``leaves`` are all the leaf neighbours of ``root``; the root has exactly
    one further neighbour, ``anchor``, which is not a leaf.
    """

    root: int
    leaves: tuple[int, ...]
    anchor: int

    @property
    def k(self) -> int:
        return len(self.leaves)


def find_brushes(t: Tree) -> list[Brush]:
    """All brushes of ``t``, sorted by root."""
    if t.n < 3:
        raise ValueError("brushes are defined for trees on at least 3 vertices")
    out = []
    for r in range(t.n):
        nbrs = t.adj[r]
        if len(nbrs) < 2:
            continue
        leaf_nbrs = tuple(w for w in nbrs if len(t.adj[w]) == 1)
        others = [w for w in nbrs if len(t.adj[w]) != 1]
        if leaf_nbrs and len(others) == 1:
            out.append(Brush(r, leaf_nbrs, others[0]))
    return out


def brush_pairs(t: Tree) -> list[tuple[int, int]]:
    """Every ``(brush leaf, brush root)`` pair, sorted."""
    return sorted((u, b.root) for b in find_brushes(t) for u in b.leaves)


def brush_root_of(t: Tree, u: int) -> int | None:
    """Root of the brush containing leaf ``u``, or None if ``u`` is not a brush leaf."""
    if len(t.adj[u]) != 1 or t.n < 3:
        return None
    r = t.adj[u][0]
    others = [w for w in t.adj[r] if len(t.adj[w]) != 1]
    return r if len(others) == 1 else None


def is_starlike(t: Tree) -> bool:
    """Whether deleting some vertex leaves only components with at most two vertices."""
    if t.n < 2:
        raise ValueError("needs at least two vertices")
    for u in range(t.n):
        # every component of t - u is K1 or K2 iff every neighbour of u has
        # at most one other neighbour, and that one is a leaf
        if all(
            len(t.adj[w]) == 1 or (len(t.adj[w]) == 2 and all(len(t.adj[x]) == 1 for x in t.adj[w] if x != u))
            for w in t.adj[u]
        ):
            return True
    return False


def _path(t: Tree, a: int, b: int) -> list[int]:
    dist = distances_from(t, b)
    path = [a]
    while path[-1] != b:
        x = path[-1]
        path.append(next(y for y in t.adj[x] if dist[y] == dist[x] - 1))
    return path


def longest_path(t: Tree) -> list[int]:
    """The lexicographically smallest vertex sequence among all longest paths."""
    dist = [distances_from(t, s) for s in range(t.n)]
    diam = max(max(row) for row in dist)
    return min(
        _path(t, a, b) for a in range(t.n) for b in range(t.n) if dist[a][b] == diam
    )


def radial_brush_leaf(t: Tree) -> tuple[int, int] | None:
    """``(end, next)`` on the smallest longest path; ``next`` roots a brush holding ``end``.

    None for stars and trees on fewer than 4 vertices.
    """
    if t.n < 4 or max(len(a) for a in t.adj) == t.n - 1:
        return None
    path = longest_path(t)
    u, v = path[0], path[1]
    if brush_root_of(t, u) != v:
        raise AssertionError(f"second vertex {v} of a longest path roots no brush")
    return u, v
