"""Brute-force oracles and the classifier used to check every formula.

Two independent generators:

* ``enumerate_all_lattices`` grows every lattice by adding a new coatom
  (a new maximal element of the meet-semilattice ``L - {1}``) and keeps one
  representative per canonical form.
* ``enumerate_adjunct_lattices`` builds adjuncts of chains with adjunct
  pairs allowed anywhere, again deduplicated by canonical form.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .canon import CanonicalForm, canonical_form
from .construct import adjunct, chain, valid_pairs
from .poset import NotALattice, Poset
from .reduce import basic_block, identify_block, is_block, three_reducible_type

log = logging.getLogger(__name__)

MAX_EXHAUSTIVE_N = 9
MAX_ADJUNCT_K = 4


class OracleBudgetError(ValueError):
    """Requested size is beyond what the brute-force oracles will attempt."""


def default_workers() -> int:
    return int(os.environ.get("LATTICECOUNT_WORKERS", "1"))


def _run(fn, items, workers):
    if workers > 1 and len(items) > 1:
        chunks = [items[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return [r for part in ex.map(fn, chunks) for r in part]
    return fn(items)


# -- exhaustive oracle ----------------------------------------------------

def _antichains(p: Poset, elements: list[int]):
    """Non-empty antichains drawn from ``elements``."""
    def grow(start, chosen, mask):
        for idx in range(start, len(elements)):
            x = elements[idx]
            if mask & (p.up[x] | p.down[x]):
                continue
            new = chosen + [x]
            yield new
            yield from grow(idx + 1, new, mask | (1 << x))
    yield from grow(0, [], 0)


def _coatom_extensions(lat: Poset) -> list[tuple[CanonicalForm, tuple]]:
    """Lattices on n+1 elements obtained by adding a new coatom to ``lat``."""
    top = lat.top
    rest = [x for x in range(lat.n) if x != top]
    meet = lat._meet_table()
    new = lat.n
    out = []
    for below in _antichains(lat, rest):
        # meet(new, y) must exist: {d ^ y : d in below} needs a greatest element
        ok = True
        for y in rest:
            ms = {meet[d][y] for d in below}
            if len(ms) > 1 and not any(all(lat.leq(m2, m) for m2 in ms) for m in ms):
                ok = False
                break
        if not ok:
            continue
        covers = {(x, y) for x, y in lat.covers if not (y == top and x in below)}
        covers.update((d, new) for d in below)
        covers.add((new, top))
        child = Poset(lat.n + 1, covers)
        out.append((canonical_form(child), tuple(sorted(child.covers))))
    return out


def _extend_chunk(lats: list[tuple[int, tuple]]) -> list[tuple[CanonicalForm, tuple]]:
    out = []
    for n, covers in lats:
        out.extend(_coatom_extensions(Poset(n, covers)))
    return out


def _merge(found) -> dict[CanonicalForm, Poset]:
    reps: dict[CanonicalForm, Poset] = {}
    for key, covers in found:
        if key not in reps:
            reps[key] = key.poset()
    return dict(sorted(reps.items()))


@lru_cache(maxsize=None)
def _all_lattices(n: int, workers: int) -> dict[CanonicalForm, Poset]:
    if n <= 2:
        p = chain(n)
        return {canonical_form(p): canonical_form(p).poset()}
    prev = _all_lattices(n - 1, workers)
    items = [(p.n, tuple(sorted(p.covers))) for p in prev.values()]
    result = _merge(_run(_extend_chunk, items, workers))
    log.info("exhaustive oracle: %d lattices on %d elements", len(result), n)
    return result


def enumerate_all_lattices(n: int, workers: int | None = None) -> dict[CanonicalForm, Poset]:
    """One canonical representative per isomorphism class of n-element
    lattices, keyed and ordered by canonical form."""
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise OracleBudgetError(f"exhaustive oracle supports 1 <= n <= {MAX_EXHAUSTIVE_N}, got {n}")
    return _all_lattices(n, 1 if workers is None else workers)


# -- adjunct-of-chains oracle ---------------------------------------------

def _adjoin_chunk(items: list[tuple[int, tuple, int]]) -> list[tuple[CanonicalForm, tuple]]:
    out = []
    for n, covers, length in items:
        base = Poset(n, covers)
        tail = chain(length)
        for a, b in valid_pairs(base):
            lat = adjunct(base, a, b, tail)
            out.append((canonical_form(lat), tuple(sorted(lat.covers))))
    return out


@lru_cache(maxsize=None)
def _adjunct_layer(n: int, k: int, workers: int) -> dict[CanonicalForm, Poset]:
    """Adjuncts of exactly k + 1 chains on n elements."""
    if k == 0:
        p = chain(n)
        return {canonical_form(p): canonical_form(p).poset()}
    items = []
    for length in range(1, n - 2):
        for p in _adjunct_layer(n - length, k - 1, workers).values():
            items.append((p.n, tuple(sorted(p.covers)), length))
    return _merge(_run(_adjoin_chunk, items, workers))


def enumerate_adjunct_lattices(n: int, k_max: int, workers: int | None = None) -> dict[CanonicalForm, Poset]:
    """Dismantlable lattices on n elements with nullity at most ``k_max``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= k_max <= MAX_ADJUNCT_K:
        raise OracleBudgetError(f"adjunct oracle supports 0 <= k_max <= {MAX_ADJUNCT_K}, got {k_max}")
    w = 1 if workers is None else workers
    out: dict[CanonicalForm, Poset] = {}
    for k in range(k_max + 1):
        out.update(_adjunct_layer(n, k, w))
    return dict(sorted(out.items()))


# -- classification -------------------------------------------------------

@dataclass(frozen=True, order=True)
class ClassKey:
    n: int
    r: int
    k: int
    rc: bool
    h: int | None


def _key(p: Poset, bb: Poset | None) -> ClassKey:
    r = len(p.reducible_elements())
    h = bb.height if bb is not None and r >= 2 else None
    return ClassKey(p.n, r, p.nullity, p.is_rc(), h)


def classify(p: Poset) -> ClassKey:
    if not p.is_lattice:
        raise NotALattice("classify needs a lattice")
    return _key(p, basic_block(p))


def _tails(p: Poset) -> tuple[int, int]:
    below = above = 0
    x = p.bottom
    while len(p.upper_covers[x]) == 1 and x != p.top:
        (x,) = p.upper_covers[x]
        below += 1
    if x == p.top:
        return below, 0
    y = p.top
    while len(p.lower_covers[y]) == 1:
        (y,) = p.lower_covers[y]
        above += 1
    return below, above


@dataclass(frozen=True)
class Classified:
    """A lattice with everything the verification tables filter on."""

    key: ClassKey
    block: bool
    basic: str | None
    family: str | None
    tails: tuple[int, int]


def describe(p: Poset) -> Classified:
    if not p.is_lattice:
        raise NotALattice("describe needs a lattice")
    bb = basic_block(p)
    key = _key(p, bb)
    basic = identify_block(bb, reduce_first=False) if key.r >= 2 else None
    family = three_reducible_type(p) if key.r == 3 else None
    return Classified(key, is_block(p), basic, family, _tails(p))
