import random
from itertools import permutations

from hypothesis import given, settings, strategies as st

from latticecount.canon import CanonicalForm, canonical_form, canonical_labelling, canonical_poset, is_isomorphic
from latticecount.construct import chain

from helpers import diamond, pentagon, random_adjunct, random_poset


def brute_isomorphic(p, q):
    if p.n != q.n or len(p.covers) != len(q.covers):
        return False
    return any(p.relabel(perm).covers == q.covers for perm in permutations(range(p.n)))


def shuffled(p, rng):
    perm = list(range(p.n))
    rng.shuffle(perm)
    return p.relabel(perm)


def test_relabel_invariance():
    rng = random.Random(1)
    for _ in range(200):
        p, _ = random_adjunct(rng)
        assert canonical_form(shuffled(p, rng)) == canonical_form(p)


def test_labelling_gives_representative():
    rng = random.Random(2)
    for _ in range(100):
        p, _ = random_adjunct(rng)
        form, perm = canonical_labelling(p)
        assert p.relabel(perm) == form.poset() == canonical_poset(p)


def test_matches_brute_force_small():
    rng = random.Random(3)
    for _ in range(400):
        n = rng.randint(1, 7)
        p, q = random_poset(rng, n), random_poset(rng, n)
        if rng.random() < 0.3:
            q = shuffled(p, rng)
        assert is_isomorphic(p, q) == brute_isomorphic(p, q)


def test_distinguishes_pentagon_and_dual_chain_sum():
    assert not is_isomorphic(pentagon(), diamond())
    assert is_isomorphic(pentagon(), pentagon().dual())
    assert not is_isomorphic(chain(5), pentagon())


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_hex_roundtrip(seed):
    p, _ = random_adjunct(random.Random(seed))
    form = canonical_form(p)
    assert CanonicalForm.from_hex(form.hex()) == form
    assert is_isomorphic(form.poset(), p)
