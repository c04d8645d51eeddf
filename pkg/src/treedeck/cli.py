"""Command-line front end.

Exit codes: 0 clean, 1 violation found, 2 usage or input error (including a
card pair that no tree explains).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .canon import code_key, free_code
from .core import format_tree, parse_forest, parse_tree
from .deck import build_card_index, deck_of
from .enumeration import DEFAULT_CAP, count_free_trees, enumerate_free_trees
from .parallel import default_jobs
from .reconstruct import BrushCardPair, NoCandidateError, TheoremViolation, crn, reconstruct_from_brush_cards
from .structure import find_brushes
from .verify import (
    check_conjecture,
    recheck_family,
    recheck_witness,
    search_ambiguous_pairs,
    search_nonrecognizable,
    verify_hp0,
    verify_remark,
    verify_theorem_main,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    cap: int = DEFAULT_CAP
    jobs: int = 1
    checked: bool = False
    out: Path | None = None

    def __post_init__(self) -> None:
        if self.cap < 1:
            raise UsageError("--cap must be >= 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(lines, out: Path | None = None) -> None:
    text = "".join(f"{ln}\n" for ln in lines)
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_enumerate(args, cfg: Config) -> int:
    if args.count_only:
        _emit([str(count_free_trees(args.n, cfg.cap))], cfg.out)
        return EXIT_OK
    blocks = [format_tree(t) for t in enumerate_free_trees(args.n, cfg.cap)]
    text = "\n".join(blocks)
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        cfg.out.write_text(text)
    return EXIT_OK


def cmd_deck(args, cfg: Config) -> int:
    t = parse_tree(_read(args.tree))
    if t.n < 2:
        raise UsageError("a deck needs a tree with at least two vertices")
    d = deck_of(t)
    counts = d.counts
    _emit([f"{counts[c]}× {c}" for c in d.support()])
    return EXIT_OK


def cmd_brushes(args, cfg: Config) -> int:
    t = parse_tree(_read(args.tree))
    if t.n < 3:
        raise UsageError("brushes need a tree with at least three vertices")
    _emit(
        f"root={b.root} k={b.k} leaves={','.join(map(str, b.leaves))}" for b in find_brushes(t)
    )
    return EXIT_OK


def cmd_reconstruct(args, cfg: Config) -> int:
    card_u = parse_forest(_read(args.card_u))
    card_v = parse_forest(_read(args.card_v))
    if len(card_u.components()) != 1:
        raise UsageError("card_u must be connected")
    try:
        pair = BrushCardPair(card_u, card_v)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        t = reconstruct_from_brush_cards(pair, checked=cfg.checked)
    except NoCandidateError as exc:
        print(f"no candidate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    sys.stdout.write(format_tree(t))
    return EXIT_OK


def cmd_crn(args, cfg: Config) -> int:
    if args.tree:
        t = parse_tree(_read(args.tree))
        if args.n is not None and args.n != t.n:
            raise UsageError(f"--n {args.n} does not match the tree order {t.n}")
        trees = [t]
        n = t.n
    elif args.n is not None:
        n = args.n
        trees = list(enumerate_free_trees(n, cfg.cap))
    else:
        raise UsageError("crn needs --n or --tree")
    if n < 3:
        raise UsageError("crn needs n >= 3")
    index = build_card_index(n, jobs=cfg.jobs, cap=cfg.cap)
    rows = sorted(((free_code(t), crn(t, index)) for t in trees), key=lambda r: code_key(r[0]))
    _emit(f"tree={c} crn={r.label} witness={','.join(r.witness)}" for c, r in rows)
    return EXIT_OK


def cmd_verify(args, cfg: Config) -> int:
    if args.suite == "thm1":
        report = verify_theorem_main(args.n, jobs=cfg.jobs, cap=cfg.cap)
        lines = report.lines()
    elif args.suite == "hp0":
        report = verify_hp0(args.n, kind=args.kind, jobs=cfg.jobs, cap=cfg.cap)
        lines = report.lines()
    elif args.suite == "remark":
        report = verify_remark(args.n, jobs=cfg.jobs, cap=cfg.cap)
        lines = report.lines()
    else:
        report, hist = check_conjecture(args.n, jobs=cfg.jobs, cap=cfg.cap)
        lines = report.lines() + [f"hist crn={k} count={v}" for k, v in hist.items()]
    _emit(lines, cfg.out)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_search(args, cfg: Config) -> int:
    orders = range(4, args.n + 1) if args.smallest else [args.n]
    for n in orders:
        if args.kind == "ambiguous":
            found = search_ambiguous_pairs(n, k=2, jobs=cfg.jobs, cap=cfg.cap)
            lines = [f.line() for f in found]
            rechecked = all(recheck_family(f, n, cfg.cap) for f in found)
            label = "families"
        else:
            found = search_nonrecognizable(n, jobs=cfg.jobs, cap=cfg.cap)
            lines = [w.line() for w in found]
            rechecked = all(recheck_witness(w) for w in found)
            label = "witnesses"
        if found or not args.smallest:
            head = f"search={args.kind} n={n} {label}={len(found)} rechecked={int(rechecked)}"
            _emit([head] + lines, cfg.out)
            return EXIT_OK if rechecked else EXIT_VIOLATION
    _emit([f"search={args.kind} n<={args.n} {label}=0 rechecked=1"], cfg.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="largest order enumerated")

    p = argparse.ArgumentParser(prog="treedeck", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $TREEDECK_JOBS or 1)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest order enumerated")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    e = sub.add_parser("enumerate", parents=[common], help="list all free trees on n vertices")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--out", type=Path)
    e.set_defaults(func=cmd_enumerate)

    d = sub.add_parser("deck", parents=[common], help="print the deck of a tree")
    d.add_argument("--tree", required=True)
    d.set_defaults(func=cmd_deck)

    b = sub.add_parser("brushes", parents=[common], help="print the brushes of a tree")
    b.add_argument("--tree", required=True)
    b.set_defaults(func=cmd_brushes)

    r = sub.add_parser("reconstruct", parents=[common], help="rebuild a tree from a leaf card and a brush-root card")
    r.add_argument("--card-u", required=True)
    r.add_argument("--card-v", required=True)
    r.add_argument("--checked", action="store_true", help="require all candidates to be isomorphic")
    r.set_defaults(func=cmd_reconstruct)

    c = sub.add_parser("crn", parents=[common], help="class reconstruction numbers")
    c.add_argument("--n", type=int)
    c.add_argument("--tree")
    c.set_defaults(func=cmd_crn)

    v = sub.add_parser("verify", parents=[common], help="exhaustive verification suites")
    v.add_argument("suite", choices=["thm1", "hp0", "remark", "conjecture"])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--kind", choices=["leaf", "near-leaf"], help="hp0 only: restrict to one vertex kind")
    v.add_argument("--out", type=Path)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common], help="search for witness trees")
    s.add_argument("kind", choices=["ambiguous", "nonrecognizable"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--smallest", action="store_true", help="scan n = 4.. upward and stop at the first hit")
    s.add_argument("--out", type=Path)
    s.set_defaults(func=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config(
            cap=args.cap,
            jobs=args.jobs if args.jobs is not None else default_jobs(),
            checked=getattr(args, "checked", False),
            out=getattr(args, "out", None),
        )
        return args.func(args, cfg)
    except (UsageError, ValueError, IndexError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
