"""Rebuilding a tree from a leaf card and a brush-root card; class reconstruction numbers."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .canon import code_key, forest_code, free_code, orbit_representatives
from .core import Forest, Tree, as_tree, attach_leaf, delete_vertex
from .deck import CardIndex, card, card_codes, subdeck_contained
from .structure import brush_root_of


class NoCandidateError(ValueError):
    """No tree has this card pair with the brush relation between the deleted vertices."""


class TheoremViolation(AssertionError):
    """Two non-isomorphic trees explain the same brush card pair."""


@dataclass(frozen=True)
class BrushCardPair:
    """``card_u`` is ``T - u`` for a brush leaf ``u``; ``card_v`` is ``T - v`` for its root.

    Nothing in the cards themselves certifies that ``u`` and ``v`` had this
    relation, so only the shape constraints are checked here.
    """

    card_u: Tree
    card_v: Forest

    def __post_init__(self) -> None:
        if not isinstance(self.card_u, Tree):
            object.__setattr__(self, "card_u", as_tree(self.card_u))
        if self.card_u.n != self.card_v.n:
            raise ValueError(
                f"cards differ in order ({self.card_u.n} vs {self.card_v.n} vertices)"
            )

    def plausible(self) -> bool:
        """Whether ``card_v`` has the shape a brush root deletion produces."""
        sizes = [len(c) for c in self.card_v.components()]
        return min(sizes, default=0) == 1 and sum(1 for s in sizes if s >= 2) == 1


def brush_card_pair(t: Tree, u: int, v: int) -> BrushCardPair:
    return BrushCardPair(as_tree(delete_vertex(t, u)), delete_vertex(t, v))


def reconstruction_candidates(pair: BrushCardPair) -> list[Tree]:
    """Every ``card_u + leaf`` whose new leaf is a brush leaf with a matching root card.

    One attachment per orbit of ``card_u``, in rooted-code order of the orbits.
    """
    target = forest_code(pair.card_v)
    base = pair.card_u
    found = []
    for w in orbit_representatives(base):
        cand = attach_leaf(base, w)
        root = brush_root_of(cand, cand.n - 1)
        if root is not None and card(cand, root) == target:
            found.append(cand)
    return found


def reconstruct_from_brush_cards(pair: BrushCardPair, checked: bool = False) -> Tree:
    """The tree with leaf card ``card_u`` and brush-root card ``card_v``.

    With ``checked`` every accepted candidate is built and they must all be
    isomorphic; otherwise the first one is returned.
    """
    if not pair.plausible():
        raise NoCandidateError("card_v is not the card of a brush root")
    cands = reconstruction_candidates(pair)
    if not cands:
        raise NoCandidateError("no attachment reproduces card_v")
    if checked:
        codes = sorted({free_code(c) for c in cands}, key=code_key)
        if len(codes) > 1:
            raise TheoremViolation(f"non-isomorphic reconstructions: {codes}")
    return cands[0]


@dataclass(frozen=True)
class CrnResult:
    """Smallest number of cards that no other tree's deck contains, with a witness.

    ``value`` is None when no sub-multiset of at most three cards works.
    """

    value: int | None
    witness: tuple[str, ...]

    @property
    def label(self) -> str:
        return "exceeds-3" if self.value is None else str(self.value)


MAX_CRN_SEARCH = 3


def _sub_multisets(counts, k: int):
    support = sorted(counts, key=code_key)
    for combo in combinations_with_replacement(support, k):
        if all(combo.count(c) <= counts[c] for c in set(combo)):
            yield combo


def crn(t: Tree, index: CardIndex) -> CrnResult:
    """Class reconstruction number of ``t`` among the trees of ``index``.

    The witness is the first qualifying sub-multiset in code order.
    """
    if t.n <= 2:
        raise ValueError("class reconstruction numbers need n >= 3")
    if index.n != t.n:
        raise ValueError(f"index is for n={index.n}, tree has n={t.n}")
    me = free_code(t)
    counts = index.decks.get(me)
    if counts is None:
        raise ValueError("tree is not in the indexed universe")
    for k in range(1, MAX_CRN_SEARCH + 1):
        for sub in _sub_multisets(counts, k):
            if k == 1:
                holders = index.single[sub[0]]
            elif k == 2:
                holders = index.pair[sub]
            else:
                holders = index.holders(sub)
            if holders == [me]:
                return CrnResult(k, sub)
    return CrnResult(None, ())


def crn_bruteforce(t: Tree, universe: list[Tree]) -> int | None:
    """crn by direct deck comparison against every other tree; for cross-checks."""
    counts = Counter(card_codes(t))
    me = free_code(t)
    others = [Counter(card_codes(o)) for o in universe if free_code(o) != me]
    for k in range(1, MAX_CRN_SEARCH + 1):
        for sub in _sub_multisets(counts, k):
            if not any(subdeck_contained(sub, d) for d in others):
                return k
    return None
