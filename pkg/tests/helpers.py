"""Random lattice and poset generators shared by the tests."""
import random
from itertools import combinations

from latticecount.construct import adjunct, chain, valid_pairs
from latticecount.poset import Poset


def diamond():
    return Poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def pentagon():
    return Poset(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def random_adjunct(rng: random.Random, n_max=14, k_max=3):
    """Random adjunct of chains.  Returns (lattice, pieces, pairs used)
    where pieces is the list of operands fed to ``adjunct``."""
    k = rng.randint(0, k_max)
    budget = n_max - k
    base = rng.randint(3, max(3, budget - k))
    lat = chain(base)
    pieces = []
    for _ in range(k):
        pairs = valid_pairs(lat)
        room = n_max - lat.n
        if not pairs or room < 1:
            break
        a, b = rng.choice(pairs)
        tail = chain(rng.randint(1, min(3, room)))
        pieces.append((lat, a, b, tail))
        lat = adjunct(lat, a, b, tail)
    return lat, pieces


def random_poset(rng: random.Random, n: int, density=0.35) -> Poset:
    """Transitive reduction of a random DAG on a shuffled order."""
    order = list(range(n))
    rng.shuffle(order)
    rel = {(order[i], order[j]) for i, j in combinations(range(n), 2) if rng.random() < density}
    # close transitively then keep covers only
    less = {x: set() for x in range(n)}
    for x, y in rel:
        less[x].add(y)
    for x in reversed(order):
        for y in list(less[x]):
            less[x] |= less[y]
    covers = [(x, y) for x in range(n) for y in less[x]
              if not any(y in less[z] for z in less[x] if z != y)]
    return Poset(n, covers)


def brute_partitions(n, k):
    """Partitions of n into exactly k positive parts, listed directly."""
    def parts(rest, slots, smallest):
        if slots == 0:
            if rest == 0:
                yield ()
            return
        for first in range(smallest, rest // slots + 1):
            for tail in parts(rest - first, slots - 1, first):
                yield (first,) + tail
    if k == 0:
        return 1 if n == 0 else 0
    return sum(1 for _ in parts(n, k, 1))
