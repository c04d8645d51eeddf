from collections import Counter
from itertools import combinations

import pytest

from conftest import path, spider, star
from oracles import brute_canonical
from treedeck.canon import free_code, isomorphic
from treedeck.core import Forest, Tree, delete_vertex
from treedeck.deck import build_card_index
from treedeck.enumeration import enumerate_free_trees
from treedeck.reconstruct import (
    BrushCardPair,
    CrnResult,
    NoCandidateError,
    brush_card_pair,
    crn,
    crn_bruteforce,
    reconstruct_from_brush_cards,
    reconstruction_candidates,
)
from treedeck.structure import brush_pairs, is_starlike


def brute_crn(n):
    """crn for every tree on n vertices, decks built from permutation-canonical cards."""
    trees = list(enumerate_free_trees(n))
    decks = [
        Counter(brute_canonical(n - 1, delete_vertex(t, v).edges) for v in range(n)) for t in trees
    ]
    out = {}
    for i, t in enumerate(trees):
        others = [d for j, d in enumerate(decks) if j != i]
        cards = sorted(decks[i].elements())
        for k in (1, 2, 3):
            if any(
                not any(all(d[c] >= m for c, m in Counter(sub).items()) for d in others)
                for sub in set(combinations(cards, k))
            ):
                out[free_code(t)] = k
                break
    return out


class TestReconstruct:
    def test_p3_and_k1p2_give_p4(self):
        pair = BrushCardPair(path(3), Forest(3, [(1, 2)]))
        t = reconstruct_from_brush_cards(pair, checked=True)
        # oracle: of the two 4-vertex trees, only P4 has these two cards at a brush pair
        matches = [
            s for s in enumerate_free_trees(4)
            for u, v in brush_pairs(s)
            if isomorphic(delete_vertex(s, u), path(3)) and isomorphic(delete_vertex(s, v), pair.card_v)
        ]
        assert len({free_code(s) for s in matches}) == 1
        assert isomorphic(t, matches[0])
        assert isomorphic(t, path(4))

    def test_star_origin_has_no_candidate(self):
        pair = BrushCardPair(star(3), Forest(4))
        with pytest.raises(NoCandidateError):
            reconstruct_from_brush_cards(pair)

    def test_plausible_shape_but_no_match(self):
        # right shape, but a leaf at the star's center is no brush leaf and a
        # leaf elsewhere leaves K1 + P3 behind
        pair = BrushCardPair(star(3), Forest(4, [(2, 3)]))
        assert pair.plausible()
        with pytest.raises(NoCandidateError):
            reconstruct_from_brush_cards(pair, checked=True)

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            BrushCardPair(path(3), Forest(4))

    def test_disconnected_card_u(self):
        with pytest.raises(ValueError):
            BrushCardPair(Forest(3, [(0, 1)]), Forest(3, [(0, 1)]))

    @pytest.mark.parametrize("n", range(4, 11))
    def test_roundtrip(self, n):
        for t in enumerate_free_trees(n):
            for u, v in brush_pairs(t):
                got = reconstruct_from_brush_cards(brush_card_pair(t, u, v), checked=True)
                assert isomorphic(got, t)

    def test_candidates_single_class(self):
        for n in range(4, 10):
            for t in enumerate_free_trees(n):
                for u, v in brush_pairs(t):
                    cands = reconstruction_candidates(brush_card_pair(t, u, v))
                    assert {free_code(c) for c in cands} == {free_code(t)}

    def test_deterministic(self):
        t = spider(3, 2)
        u, v = brush_pairs(t)[0]
        a = reconstruct_from_brush_cards(brush_card_pair(t, u, v))
        b = reconstruct_from_brush_cards(brush_card_pair(t, u, v))
        assert a == b


class TestCrn:
    def test_star(self):
        assert crn(star(3), build_card_index(4)).value == 1

    def test_spider(self):
        t = spider(3, 2)
        assert crn(t, build_card_index(t.n)).value == 1

    def test_p6(self):
        assert brute_crn(6)[free_code(path(6))] == 2
        res = crn(path(6), build_card_index(6))
        assert res == CrnResult(2, res.witness)
        assert res.label == "2"

    @pytest.mark.parametrize("n", range(3, 9))
    def test_matches_brute_force(self, n):
        idx = build_card_index(n)
        expect = brute_crn(n)
        for t in enumerate_free_trees(n):
            assert crn(t, idx).value == expect[free_code(t)]

    @pytest.mark.parametrize("n", range(3, 10))
    def test_witness_is_unique_to_the_tree(self, n):
        idx = build_card_index(n)
        universe = list(enumerate_free_trees(n))
        for t in universe:
            res = crn(t, idx)
            assert len(res.witness) == res.value
            assert idx.holders(res.witness) == [free_code(t)]
            assert crn_bruteforce(t, universe) == res.value

    def test_remark_small(self):
        for n in range(3, 10):
            idx = build_card_index(n)
            for t in enumerate_free_trees(n):
                assert (crn(t, idx).value == 1) == is_starlike(t)

    def test_errors(self):
        with pytest.raises(ValueError):
            crn(path(2), build_card_index(2))
        with pytest.raises(ValueError):
            crn(path(5), build_card_index(4))

    def test_exceeds_label(self):
        assert CrnResult(None, ()).label == "exceeds-3"
