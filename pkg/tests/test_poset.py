import random

import pytest
from hypothesis import given, settings, strategies as st

from latticecount.construct import chain
from latticecount.enumeration import enumerate_all_lattices
from latticecount.poset import NotALattice, Poset, PosetError, is_dismantlable, naive_is_lattice

from helpers import diamond, pentagon, random_adjunct, random_poset


def test_rejects_cycle():
    with pytest.raises(PosetError):
        Poset(3, [(0, 1), (1, 2), (2, 0)])


def test_rejects_transitive_pair():
    with pytest.raises(PosetError):
        Poset(3, [(0, 1), (1, 2), (0, 2)])


def test_rejects_self_cover_and_range():
    with pytest.raises(PosetError):
        Poset(2, [(1, 1)])
    with pytest.raises(PosetError):
        Poset(2, [(0, 2)])
    with pytest.raises(PosetError):
        Poset(0)


def test_single_point():
    p = Poset(1)
    assert p.is_lattice
    assert p.nullity == 0
    assert p.reducible_elements() == frozenset()
    assert p.height == 0


def test_diamond_basics():
    d = diamond()
    assert d.is_lattice
    assert d.nullity == 1
    assert d.reducible_elements() == {0, 3}
    assert d.meet(1, 2) == 0 and d.join(1, 2) == 3
    assert d.height == 2


def test_pentagon():
    p = pentagon()
    assert p.is_lattice
    assert p.nullity == 1
    assert p.height == 3
    assert p.is_rc()


def test_not_a_lattice():
    # two minimal elements
    p = Poset(3, [(0, 2), (1, 2)])
    assert not p.is_lattice
    with pytest.raises(NotALattice):
        p.reducible_elements()
    # bowtie: 0,1 below both 2,3 plus bounds
    bow = Poset(6, [(4, 0), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 5), (3, 5)])
    assert not bow.is_lattice
    assert not naive_is_lattice(bow)


def test_doubly_irreducible_examples():
    assert chain(2).doubly_irreducible() == {0, 1}
    assert diamond().irr_star() == {1, 2}


def test_pendant_vertices():
    assert chain(2).pendant_vertices() == {0, 1}
    assert diamond().pendant_vertices() == frozenset()
    # diamond with one more element on top
    p = Poset(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)])
    assert p.pendant_vertices() == {4}


def test_remove_splice():
    p = chain(4).remove(1, splice=True)
    assert p == chain(3)


def test_induced():
    d = diamond()
    assert d.induced([0, 1, 3]) == chain(3)


@pytest.mark.parametrize("n", range(1, 9))
def test_is_lattice_agrees_with_naive(n):
    for p in enumerate_all_lattices(n).values():
        assert p.is_lattice and naive_is_lattice(p)


def test_is_lattice_agrees_on_random_posets():
    rng = random.Random(7)
    for _ in range(300):
        p = random_poset(rng, rng.randint(1, 7))
        assert p.is_lattice == naive_is_lattice(p)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_dual_invariants(seed):
    p, _ = random_adjunct(random.Random(seed))
    q = p.dual()
    assert q.dual() == p
    assert q.nullity == p.nullity
    assert q.height == p.height
    assert len(q.reducible_elements()) == len(p.reducible_elements())


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_reducible_count_bounds(seed):
    p, pieces = random_adjunct(random.Random(seed))
    r = len(p.reducible_elements())
    if r >= 2:
        assert 2 <= r <= 2 * p.nullity


def test_dismantlable():
    assert is_dismantlable(pentagon())
    # M3 is dismantlable, a crown-containing lattice is not
    m3 = Poset(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    assert is_dismantlable(m3)
    non = [p for p in enumerate_all_lattices(8).values() if not is_dismantlable(p)]
    assert len(non) == 1
