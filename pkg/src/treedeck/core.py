"""Tree and forest value types, structural queries, and the plain-text format.

Vertices are the integers ``0..n-1``. Both types are immutable; every
operation returns a new value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


def _normalise_edges(n: int, edges: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    out = set()
    for e in edges:
        a, b = int(e[0]), int(e[1])
        if a == b:
            raise ValueError(f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
        if a > b:
            a, b = b, a
        if (a, b) in out:
            raise ValueError(f"duplicate edge ({a}, {b})")
        out.add((a, b))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Forest:
    """An acyclic graph; isolated vertices are kept and counted in ``n``."""

    n: int
    edges: tuple[Edge, ...] = ()
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = _normalise_edges(self.n, self.edges)
        object.__setattr__(self, "edges", edges)
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        object.__setattr__(self, "adj", tuple(tuple(sorted(x)) for x in nbrs))
        self._validate()

    def _validate(self) -> None:
        if len(self.components()) != self.n - len(self.edges):
            raise ValueError("edge set contains a cycle")

    def components(self) -> list[list[int]]:
        """Vertex lists of the connected components, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def component_trees(self) -> list[Tree]:
        out = []
        for comp in self.components():
            pos = {v: i for i, v in enumerate(comp)}
            out.append(
                Tree(len(comp), tuple((pos[a], pos[b]) for a, b in self.edges if a in pos))
            )
        return out


@dataclass(frozen=True)
class Tree(Forest):
    """A connected forest with at least one vertex."""

    def _validate(self) -> None:
        if self.n < 1:
            raise ValueError("a tree needs at least one vertex")
        if len(self.edges) != self.n - 1:
            raise ValueError(f"a tree on {self.n} vertices needs {self.n - 1} edges")
        if len(self.components()) != 1:
            raise ValueError("edge set is not connected")

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> Tree:
        """Build from ``parents[i]`` = parent of vertex ``i + 1``."""
        return cls(len(parents) + 1, tuple((p, i + 1) for i, p in enumerate(parents)))

    def relabel(self, perm: Sequence[int]) -> Tree:
        """Image of the tree under the vertex map ``v -> perm[v]``."""
        return Tree(self.n, tuple((perm[a], perm[b]) for a, b in self.edges))


def _check_vertex(g: Forest, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")


def degree(g: Forest, v: int) -> int:
    _check_vertex(g, v)
    return len(g.adj[v])


def leaves(g: Forest) -> list[int]:
    """Vertices of degree at most one; an isolated vertex is a leaf of its component."""
    return [v for v in range(g.n) if len(g.adj[v]) <= 1]


def near_leaves(t: Forest) -> list[int]:
    """Leaves of the forest left after deleting every leaf of ``t``."""
    leaf = set(leaves(t))
    return [
        v for v in range(t.n)
        if v not in leaf and sum(1 for w in t.adj[v] if w not in leaf) <= 1
    ]


def centers(t: Tree) -> list[int]:
    deg = [len(a) for a in t.adj]
    layer = [v for v in range(t.n) if deg[v] <= 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def delete_vertex(g: Forest, v: int) -> Forest:
    """The card ``g - v``; vertices above ``v`` shift down by one."""
    _check_vertex(g, v)
    if g.n < 2:
        raise ValueError("cannot delete the only vertex")
    return Forest(
        g.n - 1,
        tuple(
            (a - (a > v), b - (b > v)) for a, b in g.edges if a != v and b != v
        ),
    )


def attach_leaf(t: Tree, w: int) -> Tree:
    """Add vertex ``t.n`` as a new leaf hanging from ``w``."""
    _check_vertex(t, w)
    return Tree(t.n + 1, t.edges + ((w, t.n),))


def distances_from(g: Forest, s: int) -> list[int]:
    """BFS distances from ``s``; -1 for vertices in other components."""
    dist = [-1] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        x = q.popleft()
        for y in g.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def as_tree(g: Forest) -> Tree:
    """Reinterpret a connected forest as a ``Tree``."""
    return g if isinstance(g, Tree) else Tree(g.n, g.edges)


# -- text format -------------------------------------------------------------

def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _parse_edges(lines: list[str]) -> list[Edge]:
    edges = []
    for ln in lines:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return edges


def parse_tree(text: str) -> Tree:
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty tree text")
    head = lines[0].split()
    if len(head) != 1:
        raise ValueError(f"tree header must be a single count, got {lines[0]!r}")
    n = int(head[0])
    edges = _parse_edges(lines[1:])
    if len(edges) != n - 1:
        raise ValueError(f"expected {n - 1} edge lines, got {len(edges)}")
    return Tree(n, edges)


def parse_forest(text: str) -> Forest:
    """Read the ``n m`` forest format; a bare ``n`` header is read as a tree."""
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty forest text")
    head = lines[0].split()
    if len(head) == 1:
        return parse_tree(text)
    if len(head) != 2:
        raise ValueError(f"bad forest header {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    edges = _parse_edges(lines[1:])
    if len(edges) != m:
        raise ValueError(f"expected {m} edge lines, got {len(edges)}")
    return Forest(n, edges)


def format_tree(t: Tree) -> str:
    return "".join([f"{t.n}\n"] + [f"{a} {b}\n" for a, b in t.edges])


def format_forest(f: Forest) -> str:
    return "".join([f"{f.n} {len(f.edges)}\n"] + [f"{a} {b}\n" for a, b in f.edges])


def iter_tree_blocks(text: str) -> Iterator[Tree]:
    """Trees from a stream of tree blocks separated by blank lines."""
    block: list[str] = []
    for ln in text.splitlines() + [""]:
        if ln.strip():
            block.append(ln)
        elif block:
            yield parse_tree("\n".join(block))
            block = []
