import random

import pytest

from treedeck import _pykernels, kernels
from treedeck.core import Forest, Tree


def path(n: int) -> Tree:
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Tree:
    """K_{1,k} with center 0."""
    return Tree(k + 1, [(0, i) for i in range(1, k + 1)])


def spider(legs: int, length: int) -> Tree:
    """Center 0 with ``legs`` paths of ``length`` edges."""
    edges, nxt = [], 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Tree(nxt, edges)


# b=0, l1=1, l2=2, c=3, d=4
BROOM = Tree(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


def random_tree(n: int, rng: random.Random) -> Tree:
    parents = [rng.randrange(i) for i in range(1, n)]
    t = Tree.from_parents(parents)
    perm = list(range(n))
    rng.shuffle(perm)
    return t.relabel(perm)


@pytest.fixture
def rng():
    return random.Random(20261017)


@pytest.fixture(params=["python", "cython"])
def backend(request, monkeypatch):
    """Run a test once per kernel backend, patching the selector module."""
    if request.param == "python":
        impl = _pykernels
    else:
        try:
            from treedeck import _ckernels as impl
        except ImportError:
            pytest.skip("compiled kernels not built")
    for name in ("rooted_code", "component_free_codes", "card_codes", "vertex_codes",
                 "prufer_decode", "prufer_class_codes"):
        monkeypatch.setattr(kernels, name, getattr(impl, name))
    return impl
