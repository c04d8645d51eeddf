from pathlib import Path

import pytest

from treedeck.canon import isomorphic
from treedeck.cli import build_parser, main
from treedeck.core import Tree, iter_tree_blocks, parse_tree

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_count_only(capsys):
    assert run(capsys, "enumerate", "--n", "4", "--count-only") == (0, "2\n", "")


def test_enumerate_blocks(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4")
    assert code == 0
    assert out == "4\n0 1\n0 3\n1 2\n\n4\n0 1\n0 2\n0 3\n"
    assert len(list(iter_tree_blocks(out))) == 2


def test_enumerate_to_file(capsys, tmp_path):
    dest = tmp_path / "trees.txt"
    assert run(capsys, "enumerate", "--n", "7", "--out", str(dest))[0] == 0
    assert len(list(iter_tree_blocks(dest.read_text()))) == 11


def test_deck(capsys):
    assert run(capsys, "deck", "--tree", str(DATA / "p3.tree")) == (0, "2× (())\n1× ();()\n", "")


def test_brushes(capsys):
    code, out, _ = run(capsys, "brushes", "--tree", str(DATA / "broom.tree"))
    assert (code, out) == (0, "root=0 k=2 leaves=1,2\nroot=3 k=1 leaves=4\n")


def test_reconstruct(capsys):
    code, out, _ = run(
        capsys, "reconstruct", "--card-u", str(DATA / "p3.tree"), "--card-v", str(DATA / "k1p2.forest"), "--checked"
    )
    assert code == 0
    assert out == "4\n0 1\n0 3\n1 2\n"
    assert isomorphic(parse_tree(out), Tree(4, [(0, 1), (1, 2), (2, 3)]))


def test_reconstruct_no_candidate(capsys):
    code, out, err = run(
        capsys, "reconstruct", "--card-u", str(DATA / "k13.tree"), "--card-v", str(DATA / "4k1.forest")
    )
    assert code == 2 and out == "" and "no candidate" in err


def test_reconstruct_order_mismatch(capsys):
    code, _, err = run(
        capsys, "reconstruct", "--card-u", str(DATA / "broom.tree"), "--card-v", str(DATA / "4k1.forest")
    )
    assert code == 2 and "differ in order" in err


def test_crn(capsys):
    code, out, _ = run(capsys, "crn", "--n", "5")
    assert code == 0
    assert out.splitlines() == [
        "tree=((())(())) crn=1 witness=(());(())",
        "tree=(()(()())) crn=1 witness=();();(())",
        "tree=(()()()()) crn=1 witness=();();();()",
    ]
    code, out, _ = run(capsys, "crn", "--tree", str(DATA / "broom.tree"))
    assert out == "tree=(()(()())) crn=1 witness=();();(())\n"


def test_crn_usage_errors(capsys):
    assert run(capsys, "crn")[0] == 2
    assert run(capsys, "crn", "--n", "4", "--tree", str(DATA / "broom.tree"))[0] == 2
    assert run(capsys, "crn", "--n", "2")[0] == 2


def test_verify_hp0(capsys):
    code, out, _ = run(capsys, "verify", "hp0", "--n", "10")
    assert code == 0
    assert out == "suite=hp0 n=10 trees=106 leaf_pairs=501 near-leaf_pairs=60 violations=0\n"


@pytest.mark.parametrize("suite", ["thm1", "remark", "conjecture"])
def test_verify_suites_clean(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--n", "7")
    assert code == 0
    assert out.splitlines()[0].endswith("violations=0")


def test_verify_conjecture_histogram(capsys):
    _, out, _ = run(capsys, "verify", "conjecture", "--n", "7")
    assert out.splitlines()[1:] == ["hist crn=1 count=4", "hist crn=2 count=7"]


def test_verify_violation_exit_code(capsys, monkeypatch):
    from treedeck import verify as V
    from treedeck.reconstruct import CrnResult

    monkeypatch.setattr(V, "crn", lambda t, idx: CrnResult(3, ("a", "b", "c")))
    assert run(capsys, "verify", "conjecture", "--n", "5")[0] == 1


def test_search(capsys):
    code, out, _ = run(capsys, "search", "ambiguous", "--n", "4")
    assert code == 0
    assert out == "search=ambiguous n=4 families=1 rechecked=1\nfamily cards=(()()),(()()) trees=(()(())),(()()())\n"
    code, out, _ = run(capsys, "search", "nonrecognizable", "--n", "8", "--smallest")
    assert code == 0
    assert out.splitlines()[0] == "search=nonrecognizable n=5 witnesses=4 rechecked=1"


def test_jobs_flag_positions_and_env(capsys, monkeypatch):
    base = run(capsys, "verify", "thm1", "--n", "8")[1]
    assert run(capsys, "--jobs", "2", "verify", "thm1", "--n", "8")[1] == base
    assert run(capsys, "verify", "thm1", "--n", "8", "--jobs", "2")[1] == base
    monkeypatch.setenv("TREEDECK_JOBS", "2")
    assert run(capsys, "verify", "thm1", "--n", "8")[1] == base
    monkeypatch.setenv("TREEDECK_JOBS", "zero")
    assert run(capsys, "verify", "thm1", "--n", "8")[0] == 2


def test_bad_inputs(capsys, tmp_path):
    assert run(capsys, "--jobs", "0", "verify", "thm1", "--n", "5")[0] == 2
    assert run(capsys, "deck", "--tree", str(tmp_path / "missing"))[0] == 2
    bad = tmp_path / "bad.tree"
    bad.write_text("3\n0 1\n0 1\n")
    assert run(capsys, "deck", "--tree", str(bad))[0] == 2
    assert run(capsys, "enumerate", "--n", "30")[0] == 2
    assert run(capsys, "verify", "thm1", "--n", "3")[0] == 2


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "cmd", ["enumerate", "deck", "brushes", "reconstruct", "crn", "verify", "search"]
)
def test_every_subcommand_has_help(cmd, capsys):
    with pytest.raises(SystemExit) as exc:
        main([cmd, "--help"])
    assert exc.value.code == 0
    assert "usage:" in capsys.readouterr().out


def test_identical_invocations_identical_output(capsys):
    outs = {run(capsys, "search", "nonrecognizable", "--n", "7")[1] for _ in range(2)}
    assert len(outs) == 1


def test_parser_builds():
    assert build_parser().prog == "treedeck"
