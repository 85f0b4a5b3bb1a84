import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resbinar.algebra import NoUnit, opposite_algebra
from resbinar.laws import ALL_LAWS, law_statement
from resbinar.search import analyze_lattice, enumerate_lattices
from resbinar.terms import (AdjacentOperators, Binary, Const, Statement, TermSyntaxError,
                            UnbalancedParens, UnboundVariable, Var, as_equation,
                            check_statement, check_statement_naive, evaluate, format_term,
                            holds_batch, join, ldiv, meet, opposite_statement, opposite_term,
                            parse, parse_statement, prod, rdiv, variables)

x, y, z = Var("x"), Var("y"), Var("z")


def test_prelinearity_grouping():
    assert parse("x\\y v y\\x") == join(ldiv(x, y), ldiv(y, x))


def test_distributive_law_grouping():
    s = parse("x*(y v z) = x*y v x*z")
    assert s == Statement("equation", prod(x, join(y, z)), join(prod(x, y), prod(x, z)))


def test_single_variable():
    assert parse("x") == x


def test_precedence_tiers():
    assert parse("x*y\\z") == ldiv(prod(x, y), z)
    assert parse("x\\y*z") == ldiv(x, prod(y, z))
    assert parse("x ^ y/z") == meet(x, rdiv(y, z))


def test_left_associative_within_tier():
    assert parse("x ^ y v z") == join(meet(x, y), z)
    assert parse("x/y\\z") == ldiv(rdiv(x, y), z)


def test_unicode_aliases():
    assert parse("x·(y∨z) ≤ ⊤ ∧ x") == parse("x*(y v z) <= top ^ x")


@pytest.mark.parametrize("src,exc", [
    ("x * * y", AdjacentOperators),
    ("(x v y", UnbalancedParens),
    ("x v y)", UnbalancedParens),
    ("x $ y", TermSyntaxError),
    ("", TermSyntaxError),
])
def test_parse_errors(src, exc):
    with pytest.raises(exc) as err:
        parse(src)
    assert err.value.pos >= 0


def test_error_position():
    with pytest.raises(AdjacentOperators) as err:
        parse("x ∧ ∨ y")
    assert err.value.pos == 4


def test_format_examples():
    assert format_term(join(ldiv(x, y), ldiv(y, x))) == "x\\y v y\\x"
    assert format_term(prod(x, join(y, z))) == "x*(y v z)"
    assert format_term(meet(x, meet(y, z))) == "x ^ (y ^ z)"
    assert format_term(meet(meet(x, y), z)) == "x ^ y ^ z"


def test_catalog_roundtrip():
    for tag in ALL_LAWS:
        s = law_statement(tag)
        assert parse(format_term(s)) == s


def terms(depth):
    leaf = st.sampled_from([x, y, z, Const("e"), Const("bot"), Const("top")])
    if depth == 0:
        return leaf
    sub = terms(depth - 1)
    ops = st.sampled_from(["meet", "join", "prod", "ldiv", "rdiv"])
    return st.one_of(leaf, st.builds(Binary, ops, sub, sub))


@settings(max_examples=300, deadline=None)
@given(terms(6))
def test_random_roundtrip(t):
    assert parse(format_term(t)) == t


@settings(max_examples=100, deadline=None)
@given(terms(5))
def test_opposite_is_involution(t):
    assert opposite_term(opposite_term(t)) == t


def test_opposite_examples():
    assert format_term(opposite_term(parse("x\\(y v z)"))) == "(z v y)/x"
    ml = opposite_statement(law_statement("ml"))
    assert ml == parse_statement("z/(y ^ x) = z/y v z/x")


def test_evaluate_examples(models):
    a1, a7 = models["A1"], models["A7"]
    b = a1.lattice.index("b")
    assert a1.names[evaluate(parse("x\\bot"), a1, {"x": b})] == "a"
    for alg in models.values():
        assert evaluate(parse("top*bot"), alg, {}) == alg.lattice.bot
    a = a7.lattice.index("a")
    assert evaluate(parse("e*x"), a7, {"x": a}) == a


def test_evaluate_errors(models):
    with pytest.raises(UnboundVariable):
        evaluate(parse("x v y"), models["A1"], {"x": 0})
    with pytest.raises(NoUnit):
        evaluate(parse("e"), models["A1"], {})


def test_check_witness_is_first_failure(models):
    a1 = models["A1"]
    res = check_statement(law_statement("lj"), a1)
    assert not res
    assert {k: a1.names[v] for k, v in res.witness.items()} == {"x": "b", "y": "a", "z": "b"}
    assert (a1.names[res.lhs_value], a1.names[res.rhs_value]) == ("top", "a")
    assert check_statement(law_statement("fj"), a1)
    assert check_statement("x = x", a1)


def test_checker_matches_naive(models):
    for alg in models.values():
        for tag in ALL_LAWS:
            if tag in ("lp", "rp", "ed") and alg.unit is None:
                continue
            fast = check_statement(law_statement(tag), alg)
            slow = check_statement_naive(law_statement(tag), alg)
            assert fast == slow, (alg.name, tag)


def test_inequation_as_equation(models):
    rng = np.random.default_rng(7)
    from resbinar.terms import random_term

    for _ in range(60):
        s = Statement("inequation", random_term(rng, 3, constants=("bot", "top")),
                      random_term(rng, 3, constants=("bot", "top")))
        for alg in models.values():
            assert bool(check_statement(s, alg)) == bool(check_statement(as_equation(s), alg))


def test_variable_order():
    assert variables(parse_statement("z*y = x v z")) == ["z", "y", "x"]


def test_semantic_mirror_duality_small():
    """A |= s iff A^op |= s^op for random statements over all algebras of size <= 4."""
    rng = np.random.default_rng(11)
    from resbinar.terms import random_term

    stmts = [Statement("equation", random_term(rng, 3, constants=("bot", "top")),
                       random_term(rng, 3, constants=("bot", "top"))) for _ in range(25)]
    for n in range(1, 5):
        for lat in enumerate_lattices(n):
            b = analyze_lattice(lat)
            t_op = b.tables.transpose(0, 2, 1)
            for s in stmts:
                here = holds_batch(s, lat, b.tables, b.ldiv, b.rdiv)
                there = holds_batch(opposite_statement(s), lat, t_op,
                                    b.rdiv.transpose(0, 2, 1), b.ldiv.transpose(0, 2, 1))
                assert np.array_equal(here, there)


def test_holds_batch_matches_single(models):
    for alg in models.values():
        for tag in ALL_LAWS:
            if tag in ("lp", "rp", "ed") and alg.unit is None:
                continue
            got = holds_batch(law_statement(tag), alg.lattice, alg.mult[None], alg.ldiv[None],
                              alg.rdiv[None], np.array([alg.unit if alg.unit is not None else -1]))
            assert got[0] == bool(check_statement(law_statement(tag), alg))
            op = opposite_algebra(alg)
            assert bool(check_statement(law_statement(tag), alg)) == bool(
                check_statement(opposite_statement(law_statement(tag)), op))
