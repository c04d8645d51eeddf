import pytest

from oracles import all_labelled_trees, brute_canonical
from treedeck.canon import free_code
from treedeck.core import Tree
from treedeck.enumeration import (
    count_free_trees,
    enumerate_free_trees,
    free_tree_level_sequences,
    level_sequence_to_tree,
    prufer_oracle_codes,
    prufer_oracle_count,
)


def test_small_counts():
    assert count_free_trees(1) == 1
    assert count_free_trees(4) == 2
    assert [free_code(t) for t in enumerate_free_trees(4)] == ["(()(()))", "(()()())"]


def test_n7_against_prufer_oracle():
    assert count_free_trees(7) == prufer_oracle_count(7) == 11


def test_oracle_small_values():
    assert prufer_oracle_count(3) == 1
    assert prufer_oracle_count(4) == 2


def test_oracle_limits():
    with pytest.raises(ValueError):
        prufer_oracle_count(1)
    with pytest.raises(ValueError):
        prufer_oracle_count(11)


@pytest.mark.parametrize("n", range(2, 9))
def test_code_sets_match_oracle(n):
    assert {free_code(t) for t in enumerate_free_trees(n)} == prufer_oracle_codes(n)


@pytest.mark.parametrize("n", range(2, 7))
def test_counts_match_permutation_classes(n):
    # fully independent of the package's codes
    classes = {brute_canonical(n, e) for e in all_labelled_trees(n)}
    assert count_free_trees(n) == len(classes)


@pytest.mark.parametrize("n", range(1, 15))
def test_no_duplicates(n):
    codes = [free_code(t) for t in enumerate_free_trees(n)]
    assert len(codes) == len(set(codes))


def test_deterministic_order():
    a = [t.edges for t in enumerate_free_trees(9)]
    b = [t.edges for t in enumerate_free_trees(9)]
    assert a == b


def test_range_checks():
    with pytest.raises(ValueError):
        list(enumerate_free_trees(0))
    with pytest.raises(ValueError):
        list(enumerate_free_trees(21))
    assert len(list(enumerate_free_trees(12, cap=12))) == 551
    with pytest.raises(ValueError):
        list(enumerate_free_trees(13, cap=12))


def test_level_sequence_decoding():
    assert level_sequence_to_tree([0, 1, 2, 1]) == Tree(4, [(0, 1), (1, 2), (0, 3)])
    assert next(free_tree_level_sequences(1)) == [0]


def test_oracle_is_jobs_independent():
    assert prufer_oracle_codes(6, jobs=1) == prufer_oracle_codes(6, jobs=2)
