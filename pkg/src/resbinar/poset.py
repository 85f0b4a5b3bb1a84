"""Closed law sets and the poset of subvarieties they axiomatize."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .laws import MIRROR, NONTRIVIAL, RULES, Rule, closure, law_profile, sort_tags

# commutativity identifies each law with its mirror; keep the first of each pair
COMMUTATIVE_REPS = ("fm", "lj", "ml")
_REP = {t: (t if t in COMMUTATIVE_REPS else MIRROR[t]) for t in NONTRIVIAL}


class SeparationGap(AssertionError):
    def __init__(self, laws: frozenset, law: str):
        super().__init__(f"no model satisfies {{{','.join(sort_tags(laws))}}} and fails {law}")
        self.laws = laws
        self.law = law


def commutative_rules() -> tuple[Rule, ...]:
    out = []
    for r in RULES:
        prem = frozenset(_REP[t] for t in r.premises)
        concl = _REP[r.conclusion]
        if concl in prem:
            continue  # degenerate after identification
        rule = Rule(prem, concl)
        if rule not in out:
            out.append(rule)
    return tuple(out)


def _subsets(universe):
    for k in range(len(universe) + 1):
        for combo in itertools.combinations(universe, k):
            yield frozenset(combo)


def closed_sets(commutative: bool = False) -> list[frozenset]:
    """Law sets closed under the implication rules, by size then law order."""
    universe = COMMUTATIVE_REPS if commutative else NONTRIVIAL
    rules = commutative_rules() if commutative else RULES
    found = [s for s in _subsets(universe) if closure(s, rules) == s]
    return sorted(found, key=lambda s: (len(s), [universe.index(t) for t in sort_tags(s)]))


def label(s: frozenset) -> str:
    return ",".join(sort_tags(s)) if s else "RB"


@dataclass(frozen=True)
class PosetDiagram:
    nodes: tuple  # closed sets
    edges: tuple  # (lower, upper) node indices; lower has more laws
    commutative: bool

    def index(self, s) -> int:
        return self.nodes.index(frozenset(s))

    @property
    def top(self) -> int:
        return self.index(frozenset())

    @property
    def bottom(self) -> int:
        return max(range(len(self.nodes)), key=lambda i: len(self.nodes[i]))

    @property
    def coatoms(self) -> list[frozenset]:
        return [self.nodes[lo] for lo, hi in self.edges if hi == self.top]

    @property
    def atoms(self) -> list[frozenset]:
        return [self.nodes[hi] for lo, hi in self.edges if lo == self.bottom]


def build_poset(commutative: bool = False) -> PosetDiagram:
    nodes = tuple(closed_sets(commutative))
    below = lambda i, j: nodes[i] > nodes[j]  # more laws sits lower
    edges = []
    for i, j in itertools.permutations(range(len(nodes)), 2):
        if below(i, j) and not any(below(i, k) and below(k, j) for k in range(len(nodes))):
            edges.append((i, j))
    d = PosetDiagram(nodes, tuple(sorted(edges)), commutative)
    if not commutative:
        singles = {closure({t}) for t in NONTRIVIAL}
        if set(d.coatoms) != singles:
            raise AssertionError("coatoms are not the single-law closures")
        if sorted(map(len, d.atoms)) != [4] * 6:
            raise AssertionError("atoms are not six four-law sets")
    return d


@dataclass(frozen=True)
class Separation:
    laws: frozenset
    law: str
    witness: str  # model id


def separation_check(models: dict) -> list[Separation]:
    """For each closed set and each law outside it, a model in the set's
    variety that fails the law.  ``models`` maps ids to algebras."""
    profiles = {mid: law_profile(alg).laws for mid, alg in models.items()}
    out = []
    for s in closed_sets():
        for law in NONTRIVIAL:
            if law in s:
                continue
            wit = next((m for m, p in profiles.items() if s <= p and law not in p), None)
            if wit is None:
                raise SeparationGap(s, law)
            out.append(Separation(s, law, wit))
    return out


def export_dot(d: PosetDiagram) -> str:
    name = "commutative" if d.commutative else "laws"
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, s in enumerate(d.nodes):
        lines.append(f'  n{i} [label="{label(s)}"];')
    for lo, hi in d.edges:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
