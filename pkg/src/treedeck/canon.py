"""Canonical codes, isomorphism, and vertex orbits for trees and forests.

A code is a balanced-parenthesis ASCII string. A vertex with no children is
``()``; otherwise ``(`` + its children's codes + ``)``, children in shortlex
order (shorter first, then byte-wise). Free trees use the smaller of the two
center rootings; forests join component codes with ``;``.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Literal

from . import kernels
from .core import Forest, Tree, centers, leaves, near_leaves

code_key = kernels.code_key

SEPARATOR = ";"


class NotIsomorphicError(ValueError):
    pass


def rooted_code(t: Forest, root: int) -> str:
    """Code of the component of ``root``, rooted there."""
    if not 0 <= root < t.n:
        raise IndexError(f"vertex {root} out of range for n={t.n}")
    return kernels.rooted_code(t.adj, root)


def free_code(t: Tree) -> str:
    return kernels.component_free_codes(t.adj)[0]


def forest_code(f: Forest) -> str:
    return SEPARATOR.join(kernels.component_free_codes(f.adj))


def code(g: Forest) -> str:
    """Free code for a ``Tree``, forest code for anything else."""
    if isinstance(g, Tree):
        return free_code(g)
    return forest_code(g)


def isomorphic(a: Forest, b: Forest) -> bool:
    # A connected Forest and the equal Tree share a code, so compare as forests.
    return a.n == b.n and len(a.edges) == len(b.edges) and forest_code(a) == forest_code(b)


def orbits(t: Tree) -> list[list[int]]:
    """Orbit partition, classes sorted by smallest member.

    Two vertices of a tree are similar exactly when the tree rooted at one is
    isomorphic to the tree rooted at the other.
    """
    classes: dict[str, list[int]] = defaultdict(list)
    for v, c in enumerate(kernels.vertex_codes(t.adj)):
        classes[c].append(v)
    return sorted(classes.values())


def orbit_representatives(t: Tree) -> list[int]:
    """Smallest vertex of each orbit, ordered by the rooted code of the orbit."""
    reps: dict[str, int] = {}
    for v, c in enumerate(kernels.vertex_codes(t.adj)):
        reps.setdefault(c, v)
    return [reps[c] for c in sorted(reps, key=code_key)]


def _subtree_codes(t: Tree, root: int) -> tuple[dict[int, str], dict[int, list[int]]]:
    parent = {root: -1}
    order = [root]
    for x in order:
        for y in t.adj[x]:
            if y != parent[x]:
                parent[y] = x
                order.append(y)
    codes: dict[int, str] = {}
    children: dict[int, list[int]] = {}
    for x in reversed(order):
        kids = sorted((y for y in t.adj[x] if y != parent[x]), key=lambda y: code_key(codes[y]))
        children[x] = kids
        codes[x] = "(" + "".join(codes[y] for y in kids) + ")"
    return codes, children


def find_isomorphism(a: Tree, b: Tree) -> dict[int, int]:
    """An adjacency-preserving bijection from the vertices of ``a`` onto ``b``.

    Both trees are rooted at a center, then children with equal codes are
    paired off level by level.
    """
    if a.n != b.n:
        raise NotIsomorphicError("trees have different orders")
    ra = centers(a)[0]
    codes_a, kids_a = _subtree_codes(a, ra)
    for rb in centers(b):
        codes_b, kids_b = _subtree_codes(b, rb)
        if codes_b[rb] == codes_a[ra]:
            break
    else:
        raise NotIsomorphicError("trees are not isomorphic")

    mapping = {ra: rb}
    stack = [(ra, rb)]
    while stack:
        x, y = stack.pop()
        # equal codes => equal child code sequences, so a positional zip pairs them
        for cx, cy in zip(kids_a[x], kids_b[y]):
            mapping[cx] = cy
            stack.append((cx, cy))
    return mapping


def is_isomorphism(a: Forest, b: Forest, mapping: dict[int, int]) -> bool:
    """Whether ``mapping`` is a bijection carrying the edge set of ``a`` onto that of ``b``."""
    if a.n != b.n or sorted(mapping) != list(range(a.n)) or sorted(mapping.values()) != list(range(b.n)):
        return False
    image = {tuple(sorted((mapping[x], mapping[y]))) for x, y in a.edges}
    return image == set(b.edges)


def similar_after_deletion_check(
    t: Tree, kind: Literal["leaf", "near-leaf"]
) -> list[tuple[int, int]]:
    """Pairs ``(a, b)`` of the given kind with isomorphic cards but different orbits.

    Leaves (and near-leaves) with isomorphic cards are always similar in a
    tree, so this is expected to come back empty.
    """
    if t.n < 3:
        raise ValueError("needs at least 3 vertices")
    if kind == "leaf":
        verts = leaves(t)
    elif kind == "near-leaf":
        verts = near_leaves(t)
    else:
        raise ValueError(f"unknown vertex kind {kind!r}")
    cards = kernels.card_codes(t.adj)
    vcodes = kernels.vertex_codes(t.adj)
    out = []
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            if cards[x] == cards[y] and vcodes[x] != vcodes[y]:
                out.append((x, y))
    return out

