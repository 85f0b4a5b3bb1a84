import itertools

import numpy as np
import pytest

from resbinar import kernels
from resbinar.frames import (CONDITIONS, VARIANTS, Frame, NotDistributive, build_frame,
                             calibrate, calibrate_sweep, correspondence_check, frame_condition,
                             frame_order, frame_sweep, monotonicity_witness, prime_filters,
                             relation)
from resbinar.laws import check_law
from resbinar.lattice import chain
from resbinar.search import enumerate_binars, enumerate_lattices


def _sets(lat, masks):
    return sorted(tuple(lat.names[i] for i in range(lat.n) if m >> i & 1) for m in masks)


def _brute_prime_filters(lat):
    n, out = lat.n, []
    for bits in itertools.product((0, 1), repeat=n):
        F = {i for i in range(n) if bits[i]}
        if not F or len(F) == n:
            continue
        up = all(y in F for x in F for y in range(n) if lat.leq[x, y])
        meets = all(lat.meet[x, y] in F for x in F for y in F)
        prime = all(x in F or y in F for x in range(n) for y in range(n) if lat.join[x, y] in F)
        if up and meets and prime:
            out.append(sum(1 << i for i in F))
    return sorted(out)


def test_prime_filters_examples(diamond, fig4):
    assert _sets(diamond, prime_filters(diamond)) == [("a", "top"), ("b", "top")]
    assert _sets(chain(2), prime_filters(chain(2))) == [("1",)]
    assert _sets(fig4, prime_filters(fig4)) == [("a", "e", "top"), ("b", "e", "top"), ("top",)]


def test_prime_filters_match_brute_force():
    for n in range(2, 8):
        for lat in enumerate_lattices(n, distributive_only=True):
            assert prime_filters(lat) == _brute_prime_filters(lat)


def test_non_distributive_rejected(m3):
    with pytest.raises(NotDistributive):
        prime_filters(m3)


def test_a1_frame(models):
    fr = build_frame(models["A1"])
    assert [sorted(models["A1"].names[e] for e in fr.point_elements(i))
            for i in range(len(fr.points))] == [["a", "top"], ["b", "top"]]


@pytest.mark.parametrize("mid", ["A1", "A2", "A3", "A4", "A5", "A6"])
def test_correspondence_on_models(models, mid):
    for c in correspondence_check(models[mid]):
        assert c.agree, (mid, c)


def test_condition_witness_points(models):
    # A1 fails lj; the witness must satisfy the condition's premise
    fr = build_frame(models["A1"])
    res = frame_condition(fr, "lj")
    assert not res and not check_law("lj", models["A1"])
    x, y, p, q, j = res.witness
    assert fr.R[x, p, j] and fr.R[y, q, j]


def test_contains_order_is_reverse_inclusion(diamond):
    pts = prime_filters(chain(3))
    inc = frame_order(pts, "literal")
    assert np.array_equal(frame_order(pts, "contains"), inc.T)


def test_contains_relation_is_monotone():
    for lat in enumerate_lattices(4, distributive_only=True):
        for alg in enumerate_binars(lat):
            build_frame(alg, "contains")  # raises on failure


def test_unknown_variant(models):
    with pytest.raises(ValueError):
        build_frame(models["A1"], "other")
    with pytest.raises(ValueError):
        frame_condition(build_frame(models["A1"]), "fm")


@pytest.mark.parametrize("variant", VARIANTS)
def test_kernel_matches_reference(fig4, variant):
    pts = prime_filters(fig4)
    points = np.array(pts, dtype=np.uint64)
    up = np.array([fig4.upset_mask(x) for x in range(fig4.n)], dtype=np.uint64)
    le = np.ascontiguousarray(frame_order(pts, variant))
    algs = list(enumerate_binars(fig4))[::40]
    tables = np.ascontiguousarray(np.stack([a.mult for a in algs]).astype(np.uint8))
    vid = {"literal": kernels.V_LITERAL, "upset": kernels.V_UPSET, "contains": kernels.V_CONTAINS}
    conds, mono = kernels.frame_conditions(points, up, le, tables, vid[variant])
    for k, alg in enumerate(algs):
        R = relation(alg, pts, variant)
        assert mono[k] == (monotonicity_witness(R, le) is None)
        fr = Frame(tuple(pts), le, R, variant, alg.n)
        want = sum(bit for bit, c in zip((1, 2, 4), CONDITIONS) if frame_condition(fr, c))
        assert conds[k] == want


def test_calibration_small():
    cal = calibrate_sweep(4)
    assert cal.chosen == "contains"
    # frozen from the first run of the reference checker below
    assert cal.disagreements == {"literal": 104, "upset": 82, "contains": 0}
    assert cal.examined == 1139


def test_calibration_reference_agrees():
    algs = [a for n in range(1, 5) for lat in enumerate_lattices(n, True)
            for a in enumerate_binars(lat)]
    cal = calibrate(algs)
    assert cal.examined == 1139
    assert cal.disagreements == {"literal": 104, "upset": 82, "contains": 0}


def test_sweep_size4_clean():
    rep = frame_sweep(4)
    assert rep.clean and rep.examined == 1139
