import numpy as np
import pytest

from resbinar.lattice import (CyclicCovers, DuplicateLabel, FiniteLattice, NotALattice,
                              build_lattice, chain, complements_of, lattice_predicates,
                              transitive_closure)


def test_diamond_bounds(diamond):
    a, b = diamond.index("a"), diamond.index("b")
    assert diamond.join[a, b] == diamond.index("top")
    assert diamond.meet[a, b] == diamond.index("bot")
    assert diamond.bot == 0 and diamond.top == 3
    assert diamond.join_irreducibles == (a, b)


def test_two_chain_is_min_max():
    c = build_lattice(["0", "1"], [("0", "1")])
    assert c.meet.tolist() == [[0, 0], [0, 1]]
    assert c.join.tolist() == [[0, 1], [1, 1]]


def test_missing_upper_bound_rejected():
    with pytest.raises(NotALattice) as err:
        build_lattice(["bot", "a", "b", "top"], [("bot", "a"), ("a", "top"), ("bot", "b")])
    assert err.value.pair is not None


def test_non_unique_join_rejected():
    # a, b both below c and d, which are incomparable
    names = ["bot", "a", "b", "c", "d", "top"]
    covers = [("bot", "a"), ("bot", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("b", "d"),
              ("c", "top"), ("d", "top")]
    with pytest.raises(NotALattice):
        build_lattice(names, covers)


def test_cycle_and_duplicates():
    with pytest.raises(CyclicCovers):
        build_lattice(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(DuplicateLabel):
        build_lattice(["a", "a"], [])


def test_predicates(diamond, m3, fig4):
    assert lattice_predicates(diamond) == (True, True, True)
    assert not lattice_predicates(m3).distributive
    assert lattice_predicates(m3).complemented
    flags = lattice_predicates(fig4)
    assert flags.distributive and not flags.complemented


def test_complements(diamond, fig4):
    assert complements_of(diamond, diamond.index("a")) == [diamond.index("b")]
    c3 = chain(3)
    assert complements_of(c3, 1) == []
    assert complements_of(fig4, fig4.index("e")) == []


def test_fig4_join_irreducibles(fig4):
    assert [fig4.names[j] for j in fig4.join_irreducibles] == ["a", "b", "top"]


def test_every_element_is_join_of_irreducibles(diamond, fig4, m3):
    for lat in (diamond, fig4, m3, chain(5)):
        for x in range(lat.n):
            below = [j for j in lat.join_irreducibles if lat.leq[j, x]]
            assert lat.join_of(below) == x


def test_from_leq_roundtrip(fig4):
    again = FiniteLattice.from_leq(fig4.leq, fig4.names)
    assert again.same_as(fig4)
    assert np.array_equal(again.meet, fig4.meet)


def test_closure_is_transitive():
    rel = np.zeros((4, 4), dtype=bool)
    rel[0, 1] = rel[1, 2] = rel[2, 3] = True
    assert transitive_closure(rel)[0, 3]


def test_tables_are_read_only(diamond):
    with pytest.raises(ValueError):
        diamond.join[0, 0] = 1
