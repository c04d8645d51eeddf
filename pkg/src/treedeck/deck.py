"""Cards, decks, sub-deck containment and card indexes over a tree universe."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable

from . import kernels
from .canon import code_key, free_code
from .core import Forest, Tree
from .enumeration import DEFAULT_CAP, enumerate_free_trees
from .parallel import shard_map


def card(t: Forest, v: int) -> str:
    """Forest code of ``t - v``."""
    if t.n < 2:
        raise ValueError("a card needs at least two vertices")
    if not 0 <= v < t.n:
        raise IndexError(f"vertex {v} out of range for n={t.n}")
    return ";".join(kernels.component_free_codes(t.adj, v))


def card_codes(t: Forest) -> list[str]:
    """``card(t, v)`` for every vertex, indexed by vertex."""
    if t.n < 2:
        raise ValueError("a card needs at least two vertices")
    return kernels.card_codes(t.adj)


@dataclass(frozen=True)
class Deck:
    """Multiset of card codes; ``cards`` is sorted in code order."""

    cards: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.cards)

    @property
    def counts(self) -> Counter[str]:
        return Counter(self.cards)

    def support(self) -> list[str]:
        return sorted(set(self.cards), key=code_key)

    def __contains__(self, code: object) -> bool:
        return code in self.cards


def deck_of(t: Tree) -> Deck:
    return Deck(tuple(sorted(card_codes(t), key=code_key)))


def subdeck_contained(s: Iterable[str], d: Deck | Counter[str]) -> bool:
    """Multiset containment: every code of ``s`` occurs in ``d`` at least as often."""
    have = d.counts if isinstance(d, Deck) else d
    need = Counter(s)
    return all(have[c] >= k for c, k in need.items())


CardPair = tuple[str, str]


@dataclass
class CardIndex:
    """Which trees of order ``n`` have a given card, or a given pair of cards.

    ``single`` maps a card code to the free codes of the trees holding it at
    least once. ``pair`` is keyed by code-ordered pairs ``(a, b)``; a pair
    ``(c, c)`` lists only trees holding ``c`` at least twice. Value lists are
    sorted in code order.
    """

    n: int
    trees: list[str] = field(default_factory=list)
    decks: dict[str, Counter[str]] = field(default_factory=dict)
    single: dict[str, list[str]] = field(default_factory=dict)
    pair: dict[CardPair, list[str]] = field(default_factory=dict)

    def holders(self, cards: Iterable[str]) -> list[str]:
        """Trees whose deck contains the multiset ``cards``."""
        cards = list(cards)
        if not cards:
            return list(self.trees)
        distinct = sorted(set(cards), key=lambda c: len(self.single.get(c, ())))
        pool = self.single.get(distinct[0], [])
        need = Counter(cards)
        return [t for t in pool if subdeck_contained(need, self.decks[t])]


def ordered_pair(a: str, b: str) -> CardPair:
    return (a, b) if code_key(a) <= code_key(b) else (b, a)


def _deck_entry(t: Tree) -> tuple[str, Counter[str]]:
    return free_code(t), Counter(card_codes(t))


def build_card_index(
    n: int, jobs: int | None = None, cap: int = DEFAULT_CAP, trees: Iterable[Tree] | None = None
) -> CardIndex:
    """Index every tree on ``n`` vertices by its cards and card pairs.

    Trees are sharded across ``jobs`` workers; merging runs in code order, so
    the result does not depend on the worker count.
    """
    if n < 2:
        raise ValueError("card indexes need n >= 2")
    universe = list(trees) if trees is not None else list(enumerate_free_trees(n, cap))
    entries = shard_map(_deck_entry, universe, jobs)
    entries.sort(key=lambda e: code_key(e[0]))

    index = CardIndex(n)
    for tcode, counts in entries:
        if tcode in index.decks:
            raise ValueError(f"tree {tcode} occurs twice in the universe")
        index.trees.append(tcode)
        index.decks[tcode] = counts
        support = sorted(counts, key=code_key)
        for c in support:
            index.single.setdefault(c, []).append(tcode)
        for a, b in combinations_with_replacement(support, 2):
            if a != b or counts[a] >= 2:
                index.pair.setdefault((a, b), []).append(tcode)
    index.single = dict(sorted(index.single.items(), key=lambda kv: code_key(kv[0])))
    index.pair = dict(
        sorted(index.pair.items(), key=lambda kv: (code_key(kv[0][0]), code_key(kv[0][1])))
    )
    return index

