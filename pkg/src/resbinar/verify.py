"""One-shot reproduction suite.

Each item prints a short report followed by ``ITEM <name> PASS|FAIL``.  The
output contains no timings or backend details, so it is byte-identical across
runs, backends and worker counts.
"""

from __future__ import annotations

import numpy as np

from . import frames, kernels, poset
from .algebra import algebra_predicates
from .bundled import MODEL_IDS, load_bundled, matches_reference
from .laws import (ALL_LAWS, ALWAYS_VALID, BIT, MIRROR, NONTRIVIAL, RULES, UNITAL, Rule,
                   check_law, law_profile, law_statement, lemma22_equivalent, sort_tags,
                   unital_checks)
from .search import (FULL_ORDER, TimeBudgetExceeded, falsifiability_rules, iter_batches,
                     verify_section4, verify_theorem32)
from .terms import holds_batch, opposite_statement

EXPECTED_PROFILES = {
    "A1": {"rm", "ml", "mf", "fm"},
    "A2": {"lj", "ml", "mf", "fm"},
    "A3": {"jr", "rm", "mf", "fm"},
    "A4": {"jr", "lj", "rm", "fm"},
    "A5": {"jr", "lj", "ml", "mf"},
    "A6": {"jr", "lj", "rm", "ml"},
}
COMMUTATIVE_MODELS = ("A1", "A6")
A7_HOLD = ("lp", "rp")
A7_FAIL = ("rm", "jr", "ml", "lj", "fm", "mf")
STATEMENT_SWEEP_MAX = 4  # four-variable statement sweeps stop here

ITEMS = ("bundle-integrity", "unital-model", "always-valid", "companions", "mirror-duality",
         "frame-correspondence", "implication-rules", "unital-lemmas", "closed-sets")


class _Item:
    def __init__(self, out, name):
        self.out, self.name = out, name
        self.ok = True
        self.witness = None

    def say(self, text=""):
        self.out(f"  {text}" if text else "")

    def fail(self, witness):
        if self.ok:
            self.witness = witness
        self.ok = False

    def check(self, cond, witness):
        if not cond:
            self.fail(witness)
        return cond


def _fmt(tags) -> str:
    return "{" + ",".join(sort_tags(tags)) + "}"


def _bundle(item, bundle_dir):
    models = {}
    for mid in MODEL_IDS:
        try:
            alg = load_bundled(mid, bundle_dir)
        except Exception as exc:  # any parse or residuation failure is a FAIL
            item.say(f"{mid}: cannot load ({type(exc).__name__}: {exc})")
            item.fail(f"{mid} does not load")
            continue
        models[mid] = alg
        diff = matches_reference(alg, mid)
        if not item.check(diff is None, f"{mid}: {diff}"):
            item.say(f"{mid}: table mismatch, {diff}")
            continue
        prof = law_profile(alg)
        line = f"{mid}: n={alg.n} profile {_fmt(prof.laws)}"
        if mid in EXPECTED_PROFILES:
            item.check(prof.laws == EXPECTED_PROFILES[mid],
                       f"{mid} profile {_fmt(prof.laws)} != {_fmt(EXPECTED_PROFILES[mid])}")
            flags = algebra_predicates(alg)
            item.check(flags.associative, f"{mid} is not associative")
            item.check(flags.commutative == (mid in COMMUTATIVE_MODELS),
                       f"{mid} commutativity differs")
            line += f" associative={flags.associative} commutative={flags.commutative}"
        item.say(line)
    return models


def _unital_model(item, models):
    alg = models.get("A7")
    if alg is None:
        item.fail("A7 unavailable")
        return
    item.check(alg.unit is not None and alg.names[alg.unit] == "e", "A7 unit is not e")
    for tag in A7_HOLD:
        res = check_law(tag, alg)
        item.say(f"{tag}: {res.describe(alg)}")
        item.check(res.holds, f"A7 {tag}: {res.describe(alg)}")
    for tag in A7_FAIL:
        res = check_law(tag, alg)
        item.say(f"{tag}: {res.describe(alg)}")
        item.check(not res.holds, f"A7 satisfies {tag}")
    rep = unital_checks(alg)
    item.say(f"ed: {'holds' if rep.ed else 'fails'}")
    item.check(rep.respected, "A7 violates an ed implication")


def _always_valid(item, batches):
    total = 0
    for n, li, b in batches:
        total += len(b)
        for tag in ALWAYS_VALID:
            bad = ~b.has(BIT[tag])
            if bad.any():
                item.fail(f"{tag} fails on n{n}.L{li}.{int(b.index[np.argmax(bad)])}")
    item.say(f"{total} algebras, laws {','.join(ALWAYS_VALID)}")


def _companions(item, batches):
    total = disagree = 0
    for n, li, b in batches:
        if n > STATEMENT_SWEEP_MAX:
            continue
        total += len(b)
        for tag in NONTRIVIAL:
            law = holds_batch(law_statement(tag), b.lattice, b.tables, b.ldiv, b.rdiv)
            comp = holds_batch(lemma22_equivalent(tag), b.lattice, b.tables, b.ldiv, b.rdiv)
            bad = law != comp
            disagree += int(bad.sum())
            if bad.any():
                item.fail(f"{tag} vs companion on n{n}.L{li}.{int(b.index[np.argmax(bad)])}")
    item.say(f"{total} algebras, {disagree} disagreements")


def _op_bits(b):
    lat = b.lattice
    leq = np.ascontiguousarray(lat.leq, dtype=np.bool_)
    tables = np.ascontiguousarray(b.tables.transpose(0, 2, 1))
    ldiv = np.ascontiguousarray(b.rdiv.transpose(0, 2, 1))
    rdiv = np.ascontiguousarray(b.ldiv.transpose(0, 2, 1))
    bits, _, _ = kernels.analyze(leq, np.ascontiguousarray(lat.meet, dtype=np.uint8),
                                 np.ascontiguousarray(lat.join, dtype=np.uint8), lat.top,
                                 tables, ldiv, rdiv, FULL_ORDER, 0, 0)
    return bits, tables, ldiv, rdiv


def _mirror(item, batches):
    total = stmt_total = violations = 0
    for n, li, b in batches:
        total += len(b)
        bits_op, t_op, l_op, r_op = _op_bits(b)
        unital = b.units >= 0
        for tag in ALL_LAWS:
            here = (b.bits >> np.uint32(BIT[tag])) & 1
            there = (bits_op >> np.uint32(BIT[MIRROR[tag]])) & 1
            bad = here != there
            if tag in UNITAL:
                bad &= unital
            violations += int(bad.sum())
            if bad.any():
                item.fail(f"{tag} mirror on n{n}.L{li}.{int(b.index[np.argmax(bad)])}")
        if n > STATEMENT_SWEEP_MAX:
            continue
        stmt_total += len(b)
        for tag in ALL_LAWS:
            s = law_statement(tag)
            sel = unital if tag in UNITAL else np.ones(len(b), dtype=bool)
            if not sel.any():
                continue
            a = holds_batch(s, b.lattice, b.tables[sel], b.ldiv[sel], b.rdiv[sel], b.units[sel])
            o = holds_batch(opposite_statement(s), b.lattice, t_op[sel], l_op[sel], r_op[sel],
                            b.units[sel])
            bad = a != o
            violations += int(bad.sum())
            if bad.any():
                item.fail(f"opposite of {tag} on n{n}.L{li}")
    item.say(f"law bits: {total} algebras; opposite statements: {stmt_total} algebras; "
              f"{violations} violations")


def _frames(item, max_size, models):
    cal = frames.calibrate_sweep(min(max_size, 4))
    item.say(f"calibration: {cal}")
    if not item.check(cal.chosen is not None, "no variant agrees everywhere"):
        return
    for mid in MODEL_IDS[:6]:
        if mid not in models:
            continue
        rep = frames.correspondence_check(models[mid], cal.chosen)
        verdicts = " ".join(f"{c.law}={'holds' if c.frame else 'fails'}" for c in rep)
        item.say(f"{mid}: {verdicts}")
        item.check(all(c.agree for c in rep), f"{mid} frame disagrees with algebra")
    sweep = frames.frame_sweep(max_size, cal.chosen)
    item.say(sweep.line())
    item.check(sweep.clean, f"frame sweep: first={sweep.first}")


def _rules(item, max_size, budget):
    try:
        verdicts = verify_theorem32(max_size, RULES, time_budget=budget)
        controls = verify_theorem32(max_size, falsifiability_rules(), time_budget=budget)
        false_rule = verify_theorem32(max_size, [Rule(frozenset({"fm"}), "mf")],
                                      time_budget=budget)
    except TimeBudgetExceeded as exc:
        item.say(str(exc))
        item.fail("time budget exceeded")
        return
    for v in verdicts:
        item.say(v.line())
        item.check(v.holds, f"{v.rule}: counterexample {v.report.models[:1]}")
    refuted = sum(1 for v in controls if v.report.models)
    item.say(f"weakened premises refuted: {refuted}/{len(controls)}")
    for v in controls:
        item.check(bool(v.report.models), f"{v.rule} not refuted up to size {max_size}")
    for v in false_rule:
        found = v.report.models
        desc = f"n={found[0].n} profile {_fmt(law_profile(found[0]).laws)}" if found else "none"
        item.say(f"control {v.rule}: countermodel {desc}")
        item.check(bool(found), "false control rule not refuted")


def _lemmas(item, max_size):
    for c in verify_section4(max_size):
        item.say(c.line())
        item.check(c.violations == 0, c.line())


def _closed_sets(item, models):
    plain, comm = poset.closed_sets(), poset.closed_sets(commutative=True)
    item.say(f"closed sets: {len(plain)} (commutative: {len(comm)})")
    item.check(len(plain) == 29 and len(comm) == 7, "closed set counts")
    d = poset.build_poset()
    atoms = {frozenset(a) for a in d.atoms}
    expected = {frozenset(p) for p in EXPECTED_PROFILES.values()}
    item.check(atoms == expected, "atoms differ from the model profiles")
    item.check(set(d.coatoms) == {frozenset([t]) for t in NONTRIVIAL}, "coatoms differ")
    item.say("atoms: " + " ".join(poset.label(a) for a in d.atoms))
    item.say("coatoms: " + " ".join(poset.label(c) for c in d.coatoms))
    mirrored = {frozenset(MIRROR[t] for t in s) for s in d.nodes}
    item.check(mirrored == set(d.nodes), "mirror map is not a poset automorphism")
    inter = all((a & b) in set(d.nodes) for a in d.nodes for b in d.nodes)
    item.check(inter, "closed sets not closed under intersection")
    try:
        seps = poset.separation_check({m: models[m] for m in MODEL_IDS[:6]})
    except (poset.SeparationGap, KeyError) as exc:
        item.fail(f"separation: {exc}")
        return
    used = sorted({s.witness for s in seps})
    item.say(f"separations: {len(seps)} witnessed by {','.join(used)}")


def run(max_size: int = 4, bundle_dir=None, budget: float | None = None, out=print) -> bool:
    """Run all items; returns ``True`` iff every item passes."""
    out(f"verify-paper: sizes up to {max_size}")
    results = []

    def item(name):
        it = _Item(out, name)
        out("")
        out(f"[{len(results) + 1}] {name}")
        results.append(it)
        return it

    def close(it):
        if not it.ok:
            out(f"  first failure: {it.witness}")
        out(f"ITEM {it.name} {'PASS' if it.ok else 'FAIL'}")

    it = item("bundle-integrity")
    models = _bundle(it, bundle_dir)
    close(it)
    it = item("unital-model")
    _unital_model(it, models)
    close(it)
    batches = list(iter_batches(max_size))
    for name, fn in (("always-valid", _always_valid), ("companions", _companions),
                     ("mirror-duality", _mirror)):
        it = item(name)
        fn(it, batches)
        close(it)
    del batches
    it = item("frame-correspondence")
    _frames(it, max_size, models)
    close(it)
    it = item("implication-rules")
    _rules(it, max_size, budget)
    close(it)
    it = item("unital-lemmas")
    _lemmas(it, max_size)
    close(it)
    it = item("closed-sets")
    _closed_sets(it, models)
    close(it)
    passed = sum(r.ok for r in results)
    out("")
    out(f"{passed}/{len(results)} items passed")
    return passed == len(results)
