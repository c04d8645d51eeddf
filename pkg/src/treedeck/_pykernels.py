"""Pure-Python implementations of the hot canonical-code kernels.

Every function takes an adjacency tuple ``adj`` (``adj[v]`` = neighbours of v)
and optionally a vertex ``skip`` that is treated as deleted. The compiled
module ``_ckernels`` exposes the same functions with identical results.
"""

from __future__ import annotations

from itertools import product


def code_key(code: str) -> tuple[int, str]:
    """Shortlex order: shorter codes first, ties broken byte-wise."""
    return (len(code), code)


def rooted_code(adj, root: int, skip: int = -1) -> str:
    parent = {root: -1}
    order = [root]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in adj[x]:
            if y != skip and y != parent[x]:
                parent[y] = x
                order.append(y)
    kids: dict[int, list[str]] = {}
    code = ""
    for x in reversed(order):
        ch = kids.pop(x, None)
        if ch:
            ch.sort()
            ch.sort(key=len)
            code = "(" + "".join(ch) + ")"
        else:
            code = "()"
        p = parent[x]
        if p >= 0:
            kids.setdefault(p, []).append(code)
    return code


def _component(adj, s: int, skip: int, seen: list[bool]) -> list[int]:
    seen[s] = True
    comp = [s]
    i = 0
    while i < len(comp):
        for y in adj[comp[i]]:
            if y != skip and not seen[y]:
                seen[y] = True
                comp.append(y)
        i += 1
    return comp


def _component_centers(adj, comp: list[int], skip: int) -> list[int]:
    if len(comp) <= 2:
        return comp
    deg = {v: sum(1 for w in adj[v] if w != skip) for v in comp}
    layer = [v for v in comp if deg[v] == 1]
    remaining = len(comp)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                if w != skip:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return layer


def component_free_codes(adj, skip: int = -1) -> list[str]:
    """Free codes of the components of ``adj - skip``, in shortlex order."""
    n = len(adj)
    seen = [False] * n
    if skip >= 0:
        seen[skip] = True
    out = []
    for s in range(n):
        if not seen[s]:
            comp = _component(adj, s, skip, seen)
            out.append(
                min((rooted_code(adj, c, skip) for c in _component_centers(adj, comp, skip)),
                    key=code_key)
            )
    out.sort(key=code_key)
    return out


def card_codes(adj) -> list[str]:
    """Forest code of ``adj - v`` for every vertex ``v``."""
    return [";".join(component_free_codes(adj, v)) for v in range(len(adj))]


def vertex_codes(adj) -> list[str]:
    """Code of the whole tree rooted at each vertex."""
    return [rooted_code(adj, v) for v in range(len(adj))]


def prufer_decode(seq, n: int) -> list[tuple[int, int]]:
    """Linear-time decoding of a Prüfer sequence over labels ``0..n-1``."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for x in seq:
        edges.append((leaf, x))
        deg[x] -= 1
        if x < ptr and deg[x] == 1:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def prufer_class_codes(n: int, first_lo: int = 0, first_hi: int = -1) -> set[str]:
    """Free codes of every labelled tree whose Prüfer sequence starts in ``[first_lo, first_hi)``."""
    if first_hi < 0:
        first_hi = n
    if n < 2:
        raise ValueError("Prüfer sequences need n >= 2")
    if n == 2:
        return {"(())"} if first_lo == 0 else set()
    found = set()
    for first in range(first_lo, first_hi):
        for rest in product(range(n), repeat=n - 3):
            edges = prufer_decode((first,) + rest, n)
            nbrs: list[list[int]] = [[] for _ in range(n)]
            for a, b in edges:
                nbrs[a].append(b)
                nbrs[b].append(a)
            found.add(component_free_codes(nbrs)[0])
    return found
