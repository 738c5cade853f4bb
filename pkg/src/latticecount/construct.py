"""Lattice-building operations and the fixed catalog of basic blocks.

Blocks whose adjunct representation is written out explicitly are built
from it; the remaining ones are cover lists read off the diagram
coordinates, with elements numbered bottom-up.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .poset import NotALattice, Poset


class AdjunctError(ValueError):
    """Base class for invalid adjunct operations."""


class PairOrderError(AdjunctError):
    """Adjunct pair (a, b) does not satisfy a < b."""


class CoveringPairError(AdjunctError):
    """Adjunct pair (a, b) is a cover, so the sum would not be a lattice."""


class RealizeError(AdjunctError):
    def __init__(self, stage: int, cause: Exception):
        super().__init__(f"stage {stage}: {cause}")
        self.stage = stage
        self.cause = cause


def chain(m: int) -> Poset:
    if m < 1:
        raise ValueError(f"chain length must be positive, got {m}")
    return Poset(m, ((i, i + 1) for i in range(m - 1)))


def antichain(m: int) -> Poset:
    return Poset(m, ())


def direct_sum(p: Poset, q: Poset) -> Poset:
    """Every element of ``p`` below every element of ``q``; q is relabelled
    after p."""
    off = p.n
    covers = set(p.covers)
    covers.update((x + off, y + off) for x, y in q.covers)
    covers.update((x, y + off) for x in p.maximal_elements() for y in q.minimal_elements())
    return Poset(p.n + q.n, covers)


def vertical_sum(p: Poset, q: Poset) -> Poset:
    """Direct sum with top of ``p`` identified with bottom of ``q``."""
    if p.top is None:
        raise ValueError("vertical sum needs a greatest element in the lower summand")
    if q.bottom is None:
        raise ValueError("vertical sum needs a least element in the upper summand")
    label = {}
    nxt = p.n
    for x in range(q.n):
        if x == q.bottom:
            label[x] = p.top
        else:
            label[x] = nxt
            nxt += 1
    covers = set(p.covers) | {(label[x], label[y]) for x, y in q.covers}
    return Poset(p.n + q.n - 1, covers)


def adjunct(l1: Poset, a: int, b: int, l2: Poset) -> Poset:
    """``l1 ]_a^b l2``: hang ``l2`` between a and b, adding the covers
    a < bottom(l2) and top(l2) < b.  ``l2`` is relabelled after ``l1``."""
    if not l1.is_lattice or not l2.is_lattice:
        raise NotALattice("adjunct operands must be lattices")
    if a == b or not l1.leq(a, b):
        raise PairOrderError(f"adjunct pair needs {a} < {b}")
    if b in l1.upper_covers[a]:
        raise CoveringPairError(f"adjunct pair ({a}, {b}) is a cover")
    off = l1.n
    covers = set(l1.covers) | {(x + off, y + off) for x, y in l2.covers}
    covers.add((a, l2.bottom + off))
    covers.add((l2.top + off, b))
    return Poset(l1.n + l2.n, covers)


def valid_pairs(p: Poset) -> list[tuple[int, int]]:
    """All (a, b) with a < b and a not covered by b."""
    out = []
    for a in range(p.n):
        covers = set(p.upper_covers[a])
        for b in range(p.n):
            if b != a and p.leq(a, b) and b not in covers:
                out.append((a, b))
    return out


@dataclass(frozen=True)
class AdjunctRep:
    """``C0 ]^{b1}_{a1} C1 ... ]^{bl}_{al} Cl``.

    Elements are numbered chain by chain, each chain bottom-up, so pair i
    may name any element of C0..C(i-1).
    """

    chains: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "chains", tuple(self.chains))
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))
        if len(self.pairs) != len(self.chains) - 1:
            raise ValueError("need exactly one adjunct pair per adjoined chain")

    @property
    def size(self) -> int:
        return sum(self.chains)


def realize(rep: AdjunctRep) -> Poset:
    lat = chain(rep.chains[0])
    for stage, (length, (a, b)) in enumerate(zip(rep.chains[1:], rep.pairs), start=1):
        try:
            if not (0 <= a < lat.n and 0 <= b < lat.n):
                raise PairOrderError(f"pair ({a}, {b}) names an element not yet placed")
            lat = adjunct(lat, a, b, chain(length))
        except (AdjunctError, ValueError) as exc:
            raise RealizeError(stage, exc) from exc
    return lat


# -- catalog -------------------------------------------------------------

@dataclass(frozen=True)
class BlockInfo:
    tag: str
    size: int
    reducible: int
    nullity: int
    height: int
    dual_of: str | None = None


# Quoted adjunct representations.  Base chain C is labelled 0..len-1.
_REPS = {
    # C: 0 < a < b < 1
    "B1": AdjunctRep((4, 1, 1, 1), ((1, 3), (0, 2), (0, 2))),
    "B3": AdjunctRep((4, 1, 1, 1), ((0, 2), (1, 3), (0, 3))),
    # C: 0 < a < x < b < 1
    "B4": AdjunctRep((5, 1, 1, 1), ((1, 3), (1, 3), (0, 4))),
    "B5": AdjunctRep((5, 1, 1, 1), ((1, 3), (0, 4), (0, 4))),
    # C: 0 < a < b < y < 1
    "B6": AdjunctRep((5, 1, 1, 1), ((1, 4), (2, 4), (0, 2))),
    # C: 0 < x < a < b < y < 1
    "B13": AdjunctRep((6, 1, 1, 1), ((0, 2), (0, 2), (3, 5))),
    "B21": AdjunctRep((6, 1, 1, 1), ((0, 2), (3, 5), (0, 5))),
    # C: 0 < x < a < y < b < 1
    "B15": AdjunctRep((6, 1, 1, 1), ((0, 2), (2, 4), (2, 5))),
    "B19": AdjunctRep((6, 1, 1, 1), ((0, 2), (2, 4), (0, 5))),
    # C: 0 < x < a < y < b < z < 1
    "B22": AdjunctRep((7, 1, 1, 1), ((0, 2), (2, 4), (4, 6))),
}

# Cover lists read from the figure coordinates, elements ordered bottom-up.
_FIGURE_COVERS = {
    "F1": (6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)]),
    "F2": (6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 5), (4, 5)]),
    "F3": (7, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)]),
    "F4": (8, [(0, 1), (0, 2), (0, 4), (1, 3), (2, 3), (3, 5), (3, 6), (4, 7), (5, 7), (6, 7)]),
    "F5": (6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (3, 5), (4, 5)]),
    "F6": (7, [(0, 1), (0, 6), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (6, 5)]),
    "F7": (8, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 7), (6, 7)]),
    "B2": (7, [(0, 1), (0, 2), (1, 4), (2, 3), (2, 4), (2, 5), (3, 6), (4, 6), (5, 6)]),
    "B7": (8, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 6), (4, 5), (4, 6), (5, 7), (6, 7)]),
    "B8": (8, [(0, 1), (0, 4), (1, 2), (1, 3), (2, 5), (2, 6), (3, 7), (4, 7), (5, 7), (6, 7)]),
    "B9": (8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 7), (4, 6), (5, 6), (6, 7)]),
    "B10": (8, [(0, 1), (0, 3), (0, 4), (1, 2), (1, 5), (2, 6), (3, 6), (4, 7), (5, 6), (6, 7)]),
    "B11": (8, [(0, 1), (0, 4), (1, 2), (1, 3), (1, 5), (2, 6), (3, 7), (4, 7), (5, 6), (6, 7)]),
    "B12": (8, [(0, 1), (0, 2), (1, 3), (1, 4), (1, 5), (2, 6), (3, 6), (4, 6), (5, 7), (6, 7)]),
    "B14": (9, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (4, 7), (5, 8), (6, 8), (7, 8)]),
    "B16": (9, [(0, 1), (0, 2), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5), (5, 6), (5, 7), (6, 8), (7, 8)]),
    "B17": (9, [(0, 1), (0, 2), (0, 4), (1, 3), (2, 3), (3, 5), (4, 5), (5, 6), (5, 7), (6, 8), (7, 8)]),
    "B18": (9, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 8), (5, 6), (5, 7), (6, 8), (7, 8)]),
    "B20": (9, [(0, 1), (0, 4), (1, 2), (1, 3), (2, 5), (3, 5), (4, 8), (5, 6), (5, 7), (6, 8), (7, 8)]),
}

# (size, reducible, nullity, height, caption dual)
_INFO = {
    "F1": (6, 3, 2, 3, None), "F2": (6, 3, 2, 3, None), "F3": (7, 3, 2, 4, None),
    "F4": (8, 3, 3, 4, None), "F5": (6, 4, 2, 3, None), "F6": (7, 4, 2, 4, None),
    "F7": (8, 4, 2, 5, None),
    "B1": (7, 4, 3, 3, None), "B2": (7, 4, 3, 3, "B1"), "B3": (7, 4, 3, 3, None),
    "B4": (8, 4, 3, 4, None), "B5": (8, 4, 3, 4, None), "B6": (8, 4, 3, 4, None),
    "B7": (8, 4, 3, 4, "B6"), "B8": (8, 4, 3, 4, None), "B9": (8, 4, 3, 4, "B8"),
    "B10": (8, 4, 3, 4, None), "B11": (8, 4, 3, 4, "B10"), "B12": (8, 4, 3, 4, None),
    "B13": (9, 4, 3, 5, None), "B14": (9, 4, 3, 5, "B13"), "B15": (9, 4, 3, 5, None),
    "B16": (9, 4, 3, 5, "B15"), "B17": (9, 4, 3, 5, None), "B18": (9, 4, 3, 5, "B17"),
    "B19": (9, 4, 3, 5, None), "B20": (9, 4, 3, 5, "B19"), "B21": (9, 4, 3, 5, None),
    "B22": (10, 4, 3, 6, None),
}

F_BLOCKS = tuple(f"F{i}" for i in range(1, 8))
B_BLOCKS = tuple(f"B{i}" for i in range(1, 23))
BLOCK_IDS = F_BLOCKS + B_BLOCKS
CAPTION_DUALS = tuple((d, t) for t, (*_, d) in _INFO.items() if d)


def block_info(tag: str) -> BlockInfo:
    try:
        size, red, null, h, dual = _INFO[tag]
    except KeyError:
        raise KeyError(f"unknown basic block {tag!r}") from None
    return BlockInfo(tag, size, red, null, h, dual)


def catalog_rep(tag: str) -> AdjunctRep | None:
    block_info(tag)
    return _REPS.get(tag)


@lru_cache(maxsize=None)
def catalog(tag: str) -> Poset:
    block_info(tag)
    if tag in _REPS:
        return realize(_REPS[tag])
    n, covers = _FIGURE_COVERS[tag]
    return Poset(n, covers)
