"""Exhaustive checks over all trees of a given order, and searches for witnesses.

Every suite shards the tree universe over worker processes and merges the
partial results in code order, so reports are identical for any ``jobs``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations

from .canon import code_key, forest_code, free_code, similar_after_deletion_check
from .core import Tree, delete_vertex, leaves, near_leaves
from .deck import CardIndex, build_card_index, card_codes, subdeck_contained
from .enumeration import DEFAULT_CAP, enumerate_free_trees
from .parallel import shard_map
from .reconstruct import CrnResult, crn
from .structure import brush_pairs, brush_root_of, find_brushes, is_starlike


@dataclass
class ViolationReport:
    suite: str
    n: int
    trees: int = 0
    violations: list[str] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.violations)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        head = f"suite={self.suite} n={self.n} trees={self.trees}"
        head += "".join(f" {k}={v}" for k, v in self.stats.items())
        head += f" violations={self.count}"
        return [head] + [f"violation {d}" for d in self.violations]


def _universe(n: int, cap: int) -> list[Tree]:
    return list(enumerate_free_trees(n, cap))


def _check_range(n: int, lo: int, cap: int) -> None:
    if not lo <= n <= cap:
        raise ValueError(f"n must be in {lo}..{cap}, got {n}")


# -- leaf-card / brush-card uniqueness ---------------------------------------

def _brush_keys(t: Tree) -> tuple[str, list[tuple[str, str, int, int]]]:
    cards = card_codes(t)
    return free_code(t), [(cards[u], cards[v], u, v) for u, v in brush_pairs(t)]


def verify_theorem_main(n: int, jobs: int | None = None, cap: int = DEFAULT_CAP) -> ViolationReport:
    """Check that each (leaf card, brush-root card) pair comes from one tree only."""
    _check_range(n, 4, cap)
    universe = _universe(n, cap)
    owners: dict[tuple[str, str], set[str]] = defaultdict(set)
    pairs = 0
    for tcode, keys in shard_map(_brush_keys, universe, jobs):
        for cu, cv, _, _ in keys:
            owners[(cu, cv)].add(tcode)
            pairs += 1
    report = ViolationReport("thm1", n, len(universe), stats={"brush_pairs": pairs, "keys": len(owners)})
    for (cu, cv), codes in sorted(owners.items(), key=lambda kv: (code_key(kv[0][0]), code_key(kv[0][1]))):
        if len(codes) > 1:
            trees = ",".join(sorted(codes, key=code_key))
            report.violations.append(f"card_u={cu} card_v={cv} trees={trees}")
    return report


# -- similar leaves and near-leaves ------------------------------------------

HP0_KINDS = ("leaf", "near-leaf")


def _hp0_one(kinds: tuple[str, ...], t: Tree) -> tuple[str, list[tuple[str, int, int]], dict[str, int]]:
    cards = card_codes(t)
    bad = []
    tested: dict[str, int] = {}
    for kind in kinds:
        verts = leaves(t) if kind == "leaf" else near_leaves(t)
        tested[kind] = sum(1 for a, b in combinations(verts, 2) if cards[a] == cards[b])
        bad.extend((kind, a, b) for a, b in similar_after_deletion_check(t, kind))
    return free_code(t), bad, tested


def verify_hp0(
    n: int, kind: str | None = None, jobs: int | None = None, cap: int = DEFAULT_CAP
) -> ViolationReport:
    """Leaves (or near-leaves) with isomorphic cards must lie in one orbit."""
    _check_range(n, 3, cap)
    kinds = HP0_KINDS if kind is None else (kind,)
    for k in kinds:
        if k not in HP0_KINDS:
            raise ValueError(f"unknown vertex kind {k!r}")
    universe = _universe(n, cap)
    results = shard_map(partial(_hp0_one, kinds), universe, jobs)
    report = ViolationReport("hp0", n, len(universe))
    totals: Counter[str] = Counter()
    for tcode, bad, tested in sorted(results, key=lambda r: code_key(r[0])):
        totals.update(tested)
        for k, a, b in bad:
            report.violations.append(f"tree={tcode} kind={k} a={a} b={b}")
    for k in kinds:
        report.stats[f"{k}_pairs"] = totals[k]
    return report


# -- class reconstruction numbers ----------------------------------------------

def _crn_one(index: CardIndex, t: Tree) -> tuple[str, CrnResult, bool]:
    return free_code(t), crn(t, index), is_starlike(t)


def crn_table(
    n: int, jobs: int | None = None, cap: int = DEFAULT_CAP
) -> list[tuple[str, CrnResult, bool]]:
    """``(tree code, crn result, starlike)`` for every tree on ``n`` vertices, in code order."""
    _check_range(n, 3, cap)
    universe = _universe(n, cap)
    index = build_card_index(n, jobs=jobs, cap=cap, trees=universe)
    rows = shard_map(partial(_crn_one, index), universe, jobs)
    return sorted(rows, key=lambda r: code_key(r[0]))


def verify_remark(n: int, jobs: int | None = None, cap: int = DEFAULT_CAP) -> ViolationReport:
    """crn = 1 exactly for the starlike trees."""
    rows = crn_table(n, jobs, cap)
    report = ViolationReport("remark", n, len(rows))
    report.stats["starlike"] = sum(1 for _, _, s in rows if s)
    for tcode, res, starlike in rows:
        if (res.value == 1) != starlike:
            report.violations.append(f"tree={tcode} crn={res.label} starlike={int(starlike)}")
    return report


def check_conjecture(
    n: int, jobs: int | None = None, cap: int = DEFAULT_CAP
) -> tuple[ViolationReport, dict[str, int]]:
    """Histogram of crn over all trees; any tree needing 3 or more cards is reported."""
    rows = crn_table(n, jobs, cap)
    hist = Counter(res.label for _, res, _ in rows)
    report = ViolationReport("conjecture", n, len(rows))
    values = [res.value if res.value is not None else 4 for _, res, _ in rows]
    report.stats["max_crn"] = max(values)
    for tcode, res, _ in rows:
        if res.value is None or res.value >= 3:
            report.violations.append(f"tree={tcode} crn={res.label} witness={','.join(res.witness)}")
    ordered = dict(sorted(hist.items(), key=lambda kv: (kv[0] == "exceeds-3", kv[0])))
    return report, ordered


# -- phenomenon searches -------------------------------------------------------

@dataclass(frozen=True)
class AmbiguousFamily:
    """A card multiset held by every tree in ``trees`` (at least two classes)."""

    cards: tuple[str, ...]
    trees: tuple[str, ...]

    def line(self) -> str:
        return f"family cards={','.join(self.cards)} trees={','.join(self.trees)}"


def search_ambiguous_pairs(
    n: int, k: int = 2, jobs: int | None = None, cap: int = DEFAULT_CAP
) -> list[AmbiguousFamily]:
    """Card multisets of size ``k`` (1 or 2) shared by two or more trees."""
    _check_range(n, 4, cap)
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    index = build_card_index(n, jobs=jobs, cap=cap)
    out = []
    if k == 1:
        for c, holders in index.single.items():
            if len(holders) > 1:
                out.append(AmbiguousFamily((c,), tuple(holders)))
    else:
        for pair, holders in index.pair.items():
            if len(holders) > 1:
                out.append(AmbiguousFamily(pair, tuple(holders)))
    return out


def recheck_family(family: AmbiguousFamily, n: int, cap: int = DEFAULT_CAP) -> bool:
    """Re-derive every deck of ``family`` from raw trees, without any index."""
    by_code = {free_code(t): t for t in enumerate_free_trees(n, cap)}
    if len(set(family.trees)) < 2:
        return False
    for tcode in family.trees:
        t = by_code.get(tcode)
        if t is None:
            return False
        cards = Counter(forest_code(delete_vertex(t, v)) for v in range(t.n))
        if not subdeck_contained(family.cards, cards):
            return False
    return True


@dataclass(frozen=True)
class Witness:
    """``(u, v)`` is a brush pair of ``p``; ``u2`` is a brush leaf of ``q`` and ``v2`` is not its root.

    ``p - u`` matches ``q - u2`` and ``p - v`` matches ``q - v2``, yet ``p`` and ``q``
    are not isomorphic.
    """

    p: Tree
    q: Tree
    u: int
    v: int
    u2: int
    v2: int

    def line(self) -> str:
        return (
            f"witness P={free_code(self.p)} Q={free_code(self.q)} "
            f"u={self.u} v={self.v} u'={self.u2} v'={self.v2}"
        )

    def sort_key(self):
        return (code_key(free_code(self.p)), code_key(free_code(self.q)), self.u, self.v, self.u2, self.v2)


def _leaf_pairs(t: Tree) -> tuple[str, list[tuple[str, str, int, int]]]:
    """Card keys for every brush leaf ``u`` and every ``v`` other than ``u`` and its root."""
    cards = card_codes(t)
    out = []
    for b in find_brushes(t):
        for u in b.leaves:
            for v in range(t.n):
                if v != u and v != b.root:
                    out.append((cards[u], cards[v], u, v))
    return free_code(t), out


def search_nonrecognizable(
    n: int, jobs: int | None = None, cap: int = DEFAULT_CAP
) -> list[Witness]:
    """All ``(P, Q, u, v, u', v')`` where the brush relation of ``u'``, ``v'`` fails but the cards agree."""
    _check_range(n, 4, cap)
    universe = _universe(n, cap)
    by_code = {free_code(t): t for t in universe}
    brush = shard_map(_brush_keys, universe, jobs)
    targets: dict[tuple[str, str], list[tuple[str, int, int]]] = defaultdict(list)
    for pcode, keys in brush:
        for cu, cv, u, v in keys:
            targets[(cu, cv)].append((pcode, u, v))
    out = []
    for qcode, keys in shard_map(_leaf_pairs, universe, jobs):
        for cu, cv, u2, v2 in keys:
            for pcode, u, v in targets.get((cu, cv), ()):
                if pcode != qcode:
                    out.append(Witness(by_code[pcode], by_code[qcode], u, v, u2, v2))
    out.sort(key=Witness.sort_key)
    return out


def recheck_witness(w: Witness) -> bool:
    """Re-derive a witness from its two trees alone."""
    return (
        brush_root_of(w.p, w.u) == w.v
        and brush_root_of(w.q, w.u2) not in (None, w.v2)
        and w.u2 != w.v2
        and forest_code(delete_vertex(w.p, w.u)) == forest_code(delete_vertex(w.q, w.u2))
        and forest_code(delete_vertex(w.p, w.v)) == forest_code(delete_vertex(w.q, w.v2))
        and free_code(w.p) != free_code(w.q)
    )


def smallest_order(search, lo: int = 4, hi: int = 14, **kw):
    """First ``n`` in ``lo..hi`` where ``search(n)`` is non-empty, with its result."""
    for n in range(lo, hi + 1):
        found = search(n, **kw)
        if found:
            return n, found
    return None, []

