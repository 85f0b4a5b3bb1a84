import json

import numpy as np
import pytest

from resbinar.algebra import (NotResiduated, ResidualMismatch, ResiduatedBinar, UnitMismatch,
                              algebra_from_dict, algebra_predicates, algebra_to_dict,
                              derive_residuals, dumps_algebra, loads_algebra, opposite_algebra,
                              preserves_joins)
from resbinar.lattice import build_lattice, chain
from resbinar.laws import law_profile

# frozen from a brute-force scan of the printed A1 table
A1_LDIV = [["top", "top", "top", "top"], ["top", "top", "top", "top"],
           ["a", "a", "a", "top"], ["a", "a", "a", "top"]]
A1_RDIV = [["top", "top", "a", "a"], ["top", "top", "a", "a"],
           ["top", "top", "a", "a"], ["top", "top", "top", "top"]]


def named(alg, table):
    return [[alg.names[v] for v in row] for row in table]


def test_a1_residual_tables(models):
    a1 = models["A1"]
    assert named(a1, a1.ldiv) == A1_LDIV
    assert named(a1, a1.rdiv) == A1_RDIV
    top, b = a1.lattice.index("top"), a1.lattice.index("b")
    assert a1.names[a1.ldiv[top, b]] == "a"


def test_anything_under_top_divides(models):
    for alg in models.values():
        assert (alg.ldiv[:, alg.lattice.top] == alg.lattice.top).all()
        assert (alg.rdiv[alg.lattice.top, :] == alg.lattice.top).all()


def test_join_is_not_residuated(diamond):
    with pytest.raises(NotResiduated) as err:
        derive_residuals(diamond, diamond.join)
    assert err.value.side in ("left", "right")
    assert preserves_joins(diamond, np.asarray(diamond.join)) is not None


def test_residuation_law(models):
    for alg in models.values():
        leq, m, n = alg.lattice.leq, alg.mult, alg.n
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    a = leq[m[x, y], z]
                    assert a == leq[x, alg.rdiv[z, y]] == leq[y, alg.ldiv[x, z]]


def test_residual_monotonicity(models):
    for alg in models.values():
        leq, n = alg.lattice.leq, alg.n
        for x in range(n):
            for x2 in range(n):
                if not leq[x, x2]:
                    continue
                for z in range(n):
                    assert leq[alg.ldiv[x2, z], alg.ldiv[x, z]]  # antitone in the denominator
                    assert leq[alg.ldiv[z, x], alg.ldiv[z, x2]]
                    assert leq[alg.rdiv[x, z], alg.rdiv[x2, z]]
                    assert leq[alg.rdiv[z, x2], alg.rdiv[z, x]]


def test_predicates(models):
    f1 = algebra_predicates(models["A1"])
    assert f1.associative and f1.commutative and not f1.unital
    f7 = algebra_predicates(models["A7"])
    assert f7.unital and not f7.integral
    assert models["A7"].names[models["A7"].unit] == "e"
    one = ResiduatedBinar.from_table(chain(1), [[0]])
    assert all(vars(algebra_predicates(one)).values())


def test_opposite(models):
    a1 = models["A1"]
    assert opposite_algebra(a1).table_equal(a1)
    op2 = opposite_algebra(models["A2"])
    assert law_profile(op2).laws == {"jr", "rm", "fm", "mf"}
    a4 = models["A4"]
    twice = opposite_algebra(opposite_algebra(a4))
    assert twice.table_equal(a4) and twice.name == a4.name
    assert np.array_equal(twice.ldiv, a4.ldiv)


def test_opposite_residuals_are_derived_ones(models):
    for alg in models.values():
        op = opposite_algebra(alg)
        ld, rd = derive_residuals(op.lattice, op.mult)
        assert np.array_equal(ld, op.ldiv) and np.array_equal(rd, op.rdiv)


def test_file_roundtrip(models):
    for alg in models.values():
        again = loads_algebra(dumps_algebra(alg, residuals=True))
        assert again.table_equal(alg) and again.unit == alg.unit
        assert np.array_equal(again.ldiv, alg.ldiv)


def test_declared_unit_is_checked(models):
    data = algebra_to_dict(models["A7"])
    data["unit"] = "top"
    with pytest.raises(UnitMismatch):
        algebra_from_dict(data)


def test_wrong_residual_in_file_is_rejected(models):
    data = algebra_to_dict(models["A1"], residuals=True)
    data["ldiv"][0][0] = "bot"
    with pytest.raises(ResidualMismatch):
        algebra_from_dict(data)


def test_file_is_json(models):
    data = json.loads(dumps_algebra(models["A3"]))
    assert data["elements"] == ["bot", "a", "b", "top"]
    assert len(data["mult"]) == 4


def test_meet_on_chain_is_residuated():
    c = chain(3)
    alg = ResiduatedBinar.from_table(c, c.meet)
    assert alg.unit == c.top
    assert algebra_predicates(alg).integral


def test_non_annihilating_table_rejected():
    lat = build_lattice(["0", "1"], [("0", "1")])
    with pytest.raises(NotResiduated):
        ResiduatedBinar.from_table(lat, [[1, 1], [1, 1]])
