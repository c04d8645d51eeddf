"""The compiled and pure-Python kernels must agree exactly."""

import pytest

from conftest import random_tree
from oracles import prufer_to_edges
from treedeck import _pykernels as py
from treedeck.core import Forest

ck = pytest.importorskip("treedeck._ckernels")


def test_backend_selected():
    from treedeck import kernels

    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 13, 21, 40])
def test_tree_kernels_agree(n, rng):
    for _ in range(20):
        adj = random_tree(n, rng).adj
        assert ck.vertex_codes(adj) == py.vertex_codes(adj)
        assert ck.component_free_codes(adj) == py.component_free_codes(adj)
        if n > 1:
            assert ck.card_codes(adj) == py.card_codes(adj)
        for root in range(n):
            assert ck.rooted_code(adj, root) == py.rooted_code(adj, root)


def test_forest_kernels_agree(rng):
    for _ in range(50):
        t = random_tree(12, rng)
        keep = [e for e in t.edges if rng.random() < 0.6]
        adj = Forest(12, keep).adj
        for skip in range(-1, 12):
            assert ck.component_free_codes(adj, skip) == py.component_free_codes(adj, skip)


def test_prufer_decoders_agree(rng):
    for n in range(2, 12):
        for _ in range(30):
            seq = [rng.randrange(n) for _ in range(n - 2)]
            expect = sorted(tuple(sorted(e)) for e in prufer_to_edges(seq, n))
            assert sorted(tuple(sorted(e)) for e in py.prufer_decode(seq, n)) == expect
            assert sorted(tuple(sorted(e)) for e in ck.prufer_decode(seq, n)) == expect


@pytest.mark.parametrize("n", range(2, 8))
def test_prufer_sweeps_agree(n):
    assert ck.prufer_class_codes(n) == py.prufer_class_codes(n)


def test_prufer_sweep_prefix_ranges():
    n = 6
    parts = [ck.prufer_class_codes(n, f, f + 1) for f in range(n)]
    assert set().union(*parts) == ck.prufer_class_codes(n)
    assert parts == [py.prufer_class_codes(n, f, f + 1) for f in range(n)]


def test_prufer_sweep_limits():
    with pytest.raises(ValueError):
        ck.prufer_class_codes(1)
    with pytest.raises(ValueError):
        ck.prufer_class_codes(17)
