"""Canonical forms for posets, so that enumeration counts isomorphism classes.

The search is the usual individualize-and-refine scheme: colour elements by
cheap order invariants, refine to an equitable colouring, then branch on the
first non-singleton cell and keep the lexicographically smallest relabelled
cover list over all leaves.  Elements with identical upper and lower covers
are interchangeable, so only one of each such twin group is branched on.
"""
from __future__ import annotations

from dataclasses import dataclass

from .poset import Poset


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-invariant key: element count plus the sorted cover list
    under a canonical labelling."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def to_bytes(self) -> bytes:
        out = bytearray([self.n])
        for x, y in self.edges:
            out += bytes((x, y))
        return bytes(out)

    def hex(self) -> str:
        return self.to_bytes().hex()

    @classmethod
    def from_hex(cls, text: str) -> "CanonicalForm":
        raw = bytes.fromhex(text)
        pairs = tuple((raw[i], raw[i + 1]) for i in range(1, len(raw), 2))
        return cls(raw[0], pairs)

    def poset(self) -> Poset:
        return Poset(self.n, self.edges)


def _initial_colours(p: Poset) -> list[int]:
    inv = [
        (len(p.lower_covers[x]), len(p.upper_covers[x]), p.levels[x],
         p.down[x].bit_count(), p.up[x].bit_count())
        for x in range(p.n)
    ]
    rank = {v: i for i, v in enumerate(sorted(set(inv)))}
    return [rank[v] for v in inv]


def _refine(colours: list[int], ups, downs) -> list[int]:
    n = len(colours)
    cells = len(set(colours))
    while True:
        sig = [
            (colours[v],
             tuple(sorted(colours[u] for u in ups[v])),
             tuple(sorted(colours[d] for d in downs[v])))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        colours = [rank[s] for s in sig]
        if len(rank) == cells:
            return colours
        cells = len(rank)


def _search(p: Poset, colours: list[int], best: list):
    ups, downs = p.upper_covers, p.lower_covers
    colours = _refine(colours, ups, downs)
    n = p.n
    counts = [0] * n
    for c in colours:
        counts[c] += 1
    target = next((c for c in range(n) if counts[c] > 1), None)
    if target is None:
        key = tuple(sorted((colours[x], colours[y]) for x, y in p.covers))
        if best[0] is None or key < best[0]:
            best[0] = key
            best[1] = colours
        return
    seen: set[tuple] = set()
    for v in range(n):
        if colours[v] != target:
            continue
        twin = (ups[v], downs[v])
        if twin in seen:
            continue
        seen.add(twin)
        branch = [2 * c for c in colours]
        branch[v] -= 1
        _search(p, branch, best)


def canonical_labelling(p: Poset) -> tuple[CanonicalForm, list[int]]:
    """Canonical form plus the relabelling ``perm`` with
    ``p.relabel(perm)`` equal to the canonical representative."""
    best: list = [None, None]
    _search(p, _initial_colours(p), best)
    return CanonicalForm(p.n, best[0]), best[1]


def canonical_form(p: Poset) -> CanonicalForm:
    return canonical_labelling(p)[0]


def canonical_poset(p: Poset) -> Poset:
    return canonical_form(p).poset()


def is_isomorphic(p: Poset, q: Poset) -> bool:
    if p.n != q.n or len(p.covers) != len(q.covers):
        return False
    return canonical_form(p) == canonical_form(q)
