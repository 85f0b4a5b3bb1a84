"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s`` or
``python tests/test_acceptance.py``.
"""

import os
import subprocess
import sys
import time

import numpy as np
import pytest

from resbinar import frames, poset
from resbinar.algebra import opposite_algebra
from resbinar.bundled import MODEL_IDS, load_bundled
from resbinar.laws import (ALL_LAWS, ALWAYS_VALID, BIT, MIRROR, NONTRIVIAL, UNITAL, check_law,
                           law_profile, law_statement, lemma22_equivalent)
from resbinar.search import (falsifiability_rules, iter_batches, verify_section4,
                             verify_theorem32)
from resbinar.terms import holds_batch, opposite_statement

PROFILES = {
    "A1": {"rm", "ml", "mf", "fm"},
    "A2": {"lj", "ml", "mf", "fm"},
    "A3": {"jr", "rm", "mf", "fm"},
    "A4": {"jr", "lj", "rm", "fm"},
    "A5": {"jr", "lj", "ml", "mf"},
    "A6": {"jr", "lj", "rm", "ml"},
}
DESK = 5  # exhaustive sweeps
SMALL = 4  # four-variable and statement-level sweeps

_results = {}


def report(num, title, ok, detail, capsys=None):
    line = f"CRITERION {num:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    _results[num] = line
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok


def c1():
    t0 = time.perf_counter()
    bad = []
    models = {m: load_bundled(m) for m in MODEL_IDS}
    for mid, want in PROFILES.items():
        got = law_profile(models[mid]).laws
        if got != want:
            bad.append(f"{mid} profile {sorted(got)}")
    a7 = models["A7"]
    for t in ("lp", "rp"):
        if not check_law(t, a7):
            bad.append(f"A7 fails {t}")
    for t in ("rm", "jr", "ml", "lj", "fm", "mf"):
        if check_law(t, a7):
            bad.append(f"A7 satisfies {t}")
    dt = time.perf_counter() - t0
    if dt >= 1:
        bad.append(f"took {dt:.2f}s")
    return not bad, "; ".join(bad) or f"7 models, exact profiles, {dt:.3f}s"


def c2():
    total = violations = 0
    for n, li, b in iter_batches(DESK):
        total += len(b)
        for t in ALWAYS_VALID:
            violations += int((~b.has(BIT[t])).sum())
    return violations == 0, f"{total} algebras up to size {DESK}, {violations} violations"


def c3():
    t0 = time.perf_counter()
    verdicts = verify_theorem32(DESK)
    lines = [f"{v.rule} {v.report.verdict()}" for v in verdicts]
    ok = all(v.holds for v in verdicts)
    return ok, f"size {DESK}, {time.perf_counter() - t0:.1f}s: " + "; ".join(lines)


def c4():
    rules = falsifiability_rules()
    verdicts = verify_theorem32(DESK, rules)
    missing = []
    for v in verdicts:
        if not v.report.models:
            missing.append(str(v.rule))
            continue
        prof = law_profile(v.report.models[0]).laws
        if not (v.rule.premises <= prof and v.rule.conclusion not in prof):
            missing.append(f"{v.rule} (bad countermodel)")
    sizes = sorted({v.report.models[0].n for v in verdicts if v.report.models})
    return not missing, (f"{len(rules) - len(missing)}/{len(rules)} weakened rules refuted, "
                         f"countermodel sizes {sizes}" + (f"; missing {missing}" if missing else ""))


def c5():
    total = disagree = 0
    for n, li, b in iter_batches(SMALL):
        total += len(b)
        for t in NONTRIVIAL:
            a = holds_batch(law_statement(t), b.lattice, b.tables, b.ldiv, b.rdiv)
            c = holds_batch(lemma22_equivalent(t), b.lattice, b.tables, b.ldiv, b.rdiv)
            disagree += int((a != c).sum())
    return disagree == 0, f"{total} algebras up to size {SMALL}, {disagree} disagreements"


def c6():
    cal = frames.calibrate_sweep(SMALL)
    if cal.chosen is None:
        return False, f"calibration found no variant: {cal}"
    sweep = frames.frame_sweep(DESK, cal.chosen)
    ok = sweep.disagreements == 0 and sweep.monotonicity_failures == 0
    return ok, f"calibration {cal}; sweep {sweep.line()}"


def c7():
    total = violations = 0
    for n, li, b in iter_batches(SMALL):
        total += len(b)
        t_op = b.tables.transpose(0, 2, 1)
        l_op = b.rdiv.transpose(0, 2, 1)
        r_op = b.ldiv.transpose(0, 2, 1)
        unital = b.units >= 0
        for t in ALL_LAWS:
            sel = unital if t in UNITAL else np.ones(len(b), dtype=bool)
            if not sel.any():
                continue
            s = law_statement(t)
            here = holds_batch(s, b.lattice, b.tables[sel], b.ldiv[sel], b.rdiv[sel], b.units[sel])
            there = holds_batch(opposite_statement(s), b.lattice, t_op[sel], l_op[sel], r_op[sel],
                                b.units[sel])
            violations += int((here != there).sum())
    # the opposite of a bundled model really is the transposed algebra
    for mid in MODEL_IDS:
        alg = load_bundled(mid)
        op = opposite_algebra(alg)
        for t in ALL_LAWS:
            if t in UNITAL and alg.unit is None:
                continue
            if bool(check_law(t, alg)) != bool(check_law(MIRROR[t], op)):
                violations += 1
    return violations == 0, f"{total} algebras up to size {SMALL} x {len(ALL_LAWS)} laws, {violations} violations"


def c8():
    checks = verify_section4(DESK)
    ok = all(c.violations == 0 for c in checks) and all(c.in_scope > 0 for c in checks)
    return ok, "; ".join(c.line() for c in checks)


def c9():
    plain, comm = poset.closed_sets(), poset.closed_sets(commutative=True)
    d = poset.build_poset()
    problems = []
    if len(plain) != 29 or len(comm) != 7:
        problems.append(f"counts {len(plain)}/{len(comm)}")
    if {frozenset(a) for a in d.atoms} != {frozenset(p) for p in PROFILES.values()}:
        problems.append("atoms")
    if set(d.coatoms) != {frozenset([t]) for t in NONTRIVIAL}:
        problems.append("coatoms")
    try:
        seps = poset.separation_check({m: load_bundled(m) for m in PROFILES})
        used = sorted({s.witness for s in seps})
    except poset.SeparationGap as exc:
        problems.append(str(exc))
        seps, used = [], []
    return not problems, (f"{len(plain)} closed sets, {len(comm)} commutative, "
                          f"{len(seps)} separations witnessed by {','.join(used)}"
                          + (f"; problems: {problems}" if problems else ""))


def _verify_output(threads, numpy_only=False):
    env = dict(os.environ, RESBINAR_THREADS=str(threads))
    env.pop("RESBINAR_DISABLE_NUMBA", None)
    if numpy_only:
        env["RESBINAR_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-m", "resbinar", "verify-paper"], env=env,
                         capture_output=True, timeout=1800)
    return out.returncode, out.stdout


def c10():
    runs = [_verify_output(1), _verify_output(1), _verify_output(2), _verify_output(2, True)]
    same = all(r == runs[0] for r in runs)
    ok = same and runs[0][0] == 0
    return ok, (f"4 runs (threads 1, 1, 2, numpy backend), exit {runs[0][0]}, "
                f"{'identical' if same else 'DIFFERENT'} output, {len(runs[0][1])} bytes")


CRITERIA = [
    (1, "bundle fidelity", c1),
    (2, "always-valid laws", c2),
    (3, "implication rules", c3),
    (4, "falsifiability control", c4),
    (5, "four-variable companions", c5),
    (6, "frame correspondence", c6),
    (7, "mirror duality", c7),
    (8, "unital lemmas", c8),
    (9, "closed-set poset", c9),
    (10, "determinism", c10),
]


@pytest.mark.slow
@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion{n:02d}_{t.replace(' ', '_')}"
                                                         for n, t, _ in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, detail = fn()
    assert report(num, title, ok, detail, capsys), detail


if __name__ == "__main__":
    failed = 0
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        failed += not report(num, title, ok, detail)
    sys.exit(1 if failed else 0)
