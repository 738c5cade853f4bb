"""Retractible elements, basic retracts and basic blocks.

Removal of a retractible element of Irr* splices its two covers together,
which keeps the nullity and the reducible elements unchanged; stripping
pendant vertices afterwards does the same.
"""
from __future__ import annotations

import random
from functools import lru_cache

from .canon import CanonicalForm, canonical_form
from .construct import BLOCK_IDS, catalog
from .poset import Poset


class NotDoublyIrreducible(ValueError):
    pass


def is_retractible(p: Poset, x: int) -> bool:
    if x not in p.doubly_irreducible():
        raise NotDoublyIrreducible(f"element {x} is not doubly irreducible")
    lows, highs = p.lower_covers[x], p.upper_covers[x]
    if not lows or not highs:
        return True
    (y,), (z,) = lows, highs
    red = p.red()
    if y not in red or z not in red:
        return True
    # any other directed path y -> z must leave y through an upper cover other than x
    return not any(w != x and p.leq(w, z) for w in p.upper_covers[y])


def _retractible_star(p: Poset) -> list[int]:
    return [x for x in sorted(p.irr_star()) if is_retractible(p, x)]


def basic_retract(p: Poset, rng: random.Random | None = None) -> Poset:
    """Remove retractible Irr* elements until none is left.

    Lowest label first unless ``rng`` is given, in which case the element
    removed at each step is drawn at random (used to probe confluence).
    """
    while True:
        cands = _retractible_star(p)
        if not cands:
            return p
        x = rng.choice(cands) if rng is not None else cands[0]
        p = p.remove(x, splice=True)


def strip_pendants(p: Poset) -> Poset:
    while p.n > 1:
        pend = sorted(p.pendant_vertices())
        if not pend:
            break
        p = p.remove(pend[0])
    return p


def basic_block(p: Poset, rng: random.Random | None = None) -> Poset:
    return strip_pendants(basic_retract(p, rng))


def is_basic_block(p: Poset) -> bool:
    """One element, no doubly irreducibles, or every doubly irreducible
    element's removal drops the nullity by one."""
    if p.n == 1:
        return True
    irr = p.doubly_irreducible()
    return all(p.remove(x).nullity == p.nullity - 1 for x in irr)


def maximal_block(p: Poset) -> Poset:
    """Strip the chain tails below and above the maximal block."""
    while p.n > 1 and p.bottom is not None and len(p.upper_covers[p.bottom]) == 1:
        p = p.remove(p.bottom)
    while p.n > 1 and p.top is not None and len(p.lower_covers[p.top]) == 1:
        p = p.remove(p.top)
    return p


def is_block(p: Poset) -> bool:
    return (p.n > 1 and p.bottom is not None and p.top is not None
            and len(p.upper_covers[p.bottom]) >= 2 and len(p.lower_covers[p.top]) >= 2)


@lru_cache(maxsize=None)
def _catalog_index() -> dict[CanonicalForm, str]:
    return {canonical_form(catalog(t)): t for t in BLOCK_IDS}


def identify_block(p: Poset, reduce_first: bool = True) -> str | None:
    """Catalog tag of the basic block of ``p``, or None when it is not one
    of F1..F7, B1..B22."""
    b = basic_block(p) if reduce_first else p
    return _catalog_index().get(canonical_form(b))


def routes(p: Poset) -> dict[tuple[int, int], int]:
    """Multiplicity of cover paths between reducible elements that pass
    only through doubly irreducible elements (a direct cover counts once)."""
    red = p.red()
    out: dict[tuple[int, int], int] = {}
    for u in red:
        for w in p.upper_covers[u]:
            while w not in red and p.upper_covers[w]:
                (w,) = p.upper_covers[w]
            if w in red:
                out[(u, w)] = out.get((u, w), 0) + 1
    return out


def three_reducible_type(p: Poset) -> str | None:
    """Family F1..F4 of a lattice with three reducible elements 0 < a < 1,
    for any nullity.

    F3 has no route from 0 to 1 avoiding a; otherwise F1 has a single
    route 0 -> a, F2 a single route a -> 1 and F4 several of both.  At
    nullity two this agrees with the catalog blocks F1..F3, and F4 is the
    nullity-three member of its family.
    """
    b = basic_block(p)
    red = sorted(b.red(), key=lambda x: b.levels[x])
    if len(red) != 3 or not (b.leq(red[0], red[1]) and b.leq(red[1], red[2])):
        return None
    lo, mid, hi = red
    mult = routes(b)
    below, above, bypass = mult.get((lo, mid), 0), mult.get((mid, hi), 0), mult.get((lo, hi), 0)
    if bypass == 0:
        return "F3"
    if below == 1:
        return "F1"
    if above == 1:
        return "F2"
    return "F4"
