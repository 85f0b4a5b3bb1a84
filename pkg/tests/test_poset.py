import itertools

import pytest

from resbinar.laws import MIRROR, NONTRIVIAL, RULES, law_profile
from resbinar.poset import (SeparationGap, build_poset, closed_sets, commutative_rules,
                            export_dot, label, separation_check)


def _brute_closed(universe, rules):
    out = []
    for k in range(len(universe) + 1):
        for s in itertools.combinations(universe, k):
            s = set(s)
            if all(not (r.premises <= s) or r.conclusion in s for r in rules):
                out.append(frozenset(s))
    return out


def test_closed_counts():
    assert len(closed_sets()) == 29 == len(_brute_closed(NONTRIVIAL, RULES))
    assert len(closed_sets(commutative=True)) == 7
    assert len(_brute_closed(("fm", "lj", "ml"), commutative_rules())) == 7


def test_commutative_rules():
    assert [str(r) for r in commutative_rules()] == ["{fm,lj} => ml"]


def test_atoms_and_coatoms(models):
    d = build_poset()
    profiles = {law_profile(models[m]).laws for m in ("A1", "A2", "A3", "A4", "A5", "A6")}
    assert set(d.atoms) == profiles
    assert set(d.coatoms) == {frozenset([t]) for t in NONTRIVIAL}
    assert d.nodes[d.top] == frozenset()
    assert d.nodes[d.bottom] == frozenset(NONTRIVIAL)


def test_hasse_edges_are_covers():
    d = build_poset()
    for lo, hi in d.edges:
        assert d.nodes[lo] > d.nodes[hi]
        assert not any(d.nodes[lo] > s > d.nodes[hi] for s in d.nodes)


def test_mirror_automorphism():
    nodes = set(build_poset().nodes)
    assert {frozenset(MIRROR[t] for t in s) for s in nodes} == nodes


def test_separation(models):
    seps = separation_check({m: models[m] for m in ("A1", "A2", "A3", "A4", "A5", "A6")})
    assert len(seps) == sum(6 - len(s) for s in closed_sets())
    assert {s.witness for s in seps} <= {"A1", "A2", "A3", "A4", "A5", "A6"}


def test_separation_gap(models):
    with pytest.raises(SeparationGap):
        separation_check({"A1": models["A1"]})


def test_commutative_poset():
    d = build_poset(commutative=True)
    assert len(d.nodes) == 7 and d.commutative


def test_dot_export():
    text = export_dot(build_poset())
    assert text.startswith("digraph laws {")
    assert text.count("->") == len(build_poset().edges)
    assert '"RB"' in text


def test_label():
    assert label(frozenset()) == "RB"
    assert label(frozenset({"ml", "fm"})) == "fm,ml"
