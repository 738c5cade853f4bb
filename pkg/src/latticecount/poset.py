"""Finite posets stored as cover relations (Hasse diagrams) on 0..n-1.

Order queries use Python ints as bitsets: ``up[x]`` has bit ``y`` set iff
``x <= y``.  Everything structural that the counts classify by lives
here: nullity, reducible elements, doubly irreducible elements, height.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable


class PosetError(ValueError):
    """Raised for malformed cover relations."""


class NotALattice(ValueError):
    """Raised when a lattice-only query is made on a non-lattice."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset given by its covers ``(x, y)`` meaning x < y
    with nothing in between.

    The constructor rejects self-pairs, out-of-range labels, cycles and
    transitive (non-cover) pairs.
    """

    def __init__(self, n: int, covers: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise PosetError(f"poset needs at least one element, got n={n}")
        cov = frozenset((int(x), int(y)) for x, y in covers)
        for x, y in cov:
            if not (0 <= x < n and 0 <= y < n):
                raise PosetError(f"cover ({x}, {y}) out of range for n={n}")
            if x == y:
                raise PosetError(f"self cover ({x}, {x})")
        self.n = n
        self.covers = cov
        self._check()

    def _check(self) -> None:
        up = self.up  # raises on cycles
        for x, y in self.covers:
            for z in self.upper_covers[x]:
                if z != y and (up[z] >> y) & 1:
                    raise PosetError(f"({x}, {y}) is not a cover: {x} < {z} < {y}")

    # -- basic structure ---------------------------------------------------

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        ups: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.covers:
            ups[x].append(y)
        return tuple(tuple(sorted(u)) for u in ups)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        downs: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.covers:
            downs[y].append(x)
        return tuple(tuple(sorted(d)) for d in downs)

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        indeg = [len(d) for d in self.lower_covers]
        ready = [x for x in range(self.n) if indeg[x] == 0]
        order = []
        while ready:
            x = ready.pop()
            order.append(x)
            for y in self.upper_covers[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
        if len(order) != self.n:
            raise PosetError("cover relation contains a cycle")
        return tuple(order)

    @cached_property
    def up(self) -> tuple[int, ...]:
        """Principal up-sets as bitmasks (reflexive)."""
        up = [0] * self.n
        for x in reversed(self.topological_order):
            m = 1 << x
            for y in self.upper_covers[x]:
                m |= up[y]
            up[x] = m
        return tuple(up)

    @cached_property
    def down(self) -> tuple[int, ...]:
        """Principal down-sets as bitmasks (reflexive)."""
        down = [0] * self.n
        for y in self.topological_order:
            m = 1 << y
            for x in self.lower_covers[y]:
                m |= down[x]
            down[y] = m
        return tuple(down)

    def leq(self, x: int, y: int) -> bool:
        return bool((self.up[x] >> y) & 1)

    def transitive_closure(self) -> list[list[bool]]:
        """Reflexive order matrix: ``m[x][y]`` iff x <= y."""
        return [[bool((self.up[x] >> y) & 1) for y in range(self.n)] for x in range(self.n)]

    @property
    def edge_count(self) -> int:
        return len(self.covers)

    def minimal_elements(self) -> list[int]:
        return [x for x in range(self.n) if not self.lower_covers[x]]

    def maximal_elements(self) -> list[int]:
        return [x for x in range(self.n) if not self.upper_covers[x]]

    @cached_property
    def bottom(self) -> int | None:
        mins = self.minimal_elements()
        return mins[0] if len(mins) == 1 else None

    @cached_property
    def top(self) -> int | None:
        maxs = self.maximal_elements()
        return maxs[0] if len(maxs) == 1 else None

    # -- lattice structure -------------------------------------------------

    @cached_property
    def is_lattice(self) -> bool:
        if self.bottom is None or self.top is None:
            return False
        return self._meet_table() is not None and self._join_table() is not None

    def _bound_table(self, sets: tuple[int, ...]) -> list[list[int]] | None:
        # sets[x] = principal down-set (meets) or up-set (joins); the
        # common bound set must be principal for some member of itself
        n = self.n
        table = [[0] * n for _ in range(n)]
        for x in range(n):
            table[x][x] = x
            for y in range(x + 1, n):
                common = sets[x] & sets[y]
                best = -1
                for z in _bits(common):
                    if sets[z] == common:
                        best = z
                        break
                if best < 0:
                    return None
                table[x][y] = table[y][x] = best
        return table

    def _meet_table(self):
        if "_meet" not in self.__dict__:
            self.__dict__["_meet"] = self._bound_table(self.down)
        return self.__dict__["_meet"]

    def _join_table(self):
        if "_join" not in self.__dict__:
            self.__dict__["_join"] = self._bound_table(self.up)
        return self.__dict__["_join"]

    def _require_lattice(self) -> None:
        if not self.is_lattice:
            raise NotALattice("operation requires a lattice")

    def meet(self, x: int, y: int) -> int:
        self._require_lattice()
        return self._meet_table()[x][y]

    def join(self, x: int, y: int) -> int:
        self._require_lattice()
        return self._join_table()[x][y]

    # -- statistics --------------------------------------------------------

    @cached_property
    def components(self) -> int:
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        count = self.n
        for x, y in self.covers:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
                count -= 1
        return count

    @property
    def nullity(self) -> int:
        """Cycle rank of the cover graph: edges - vertices + components."""
        return len(self.covers) - self.n + self.components

    @cached_property
    def height(self) -> int:
        """Number of covers in a longest chain."""
        return max(self.levels)

    @cached_property
    def levels(self) -> tuple[int, ...]:
        """Length of the longest chain ending at each element."""
        level = [0] * self.n
        for y in self.topological_order:
            for x in self.lower_covers[y]:
                level[y] = max(level[y], level[x] + 1)
        return tuple(level)

    def degree(self, x: int) -> int:
        return len(self.upper_covers[x]) + len(self.lower_covers[x])

    def doubly_irreducible(self) -> frozenset[int]:
        """Irr: at most one upper and at most one lower cover."""
        return self._irr

    @cached_property
    def _irr(self) -> frozenset[int]:
        return frozenset(
            x for x in range(self.n)
            if len(self.upper_covers[x]) <= 1 and len(self.lower_covers[x]) <= 1
        )

    def irr_star(self) -> frozenset[int]:
        """Irr*: exactly one upper and exactly one lower cover."""
        return frozenset(
            x for x in range(self.n)
            if len(self.upper_covers[x]) == 1 and len(self.lower_covers[x]) == 1
        )

    def red(self) -> frozenset[int]:
        """Complement of Irr; defined for any poset."""
        return self._red

    @cached_property
    def _red(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self._irr

    def reducible_elements(self) -> frozenset[int]:
        # in a finite lattice, >=2 upper covers <=> meet-reducible and
        # >=2 lower covers <=> join-reducible
        self._require_lattice()
        return self.red()

    def is_rc(self) -> bool:
        red = sorted(self.reducible_elements())
        return all(self.leq(x, y) or self.leq(y, x) for i, x in enumerate(red) for y in red[i + 1:])

    def pendant_vertices(self) -> frozenset[int]:
        return frozenset(x for x in range(self.n) if self.degree(x) == 1)

    # -- derived posets ----------------------------------------------------

    def dual(self) -> "Poset":
        return Poset(self.n, ((y, x) for x, y in self.covers))

    def relabel(self, perm) -> "Poset":
        """Poset with element ``x`` renamed ``perm[x]``."""
        return Poset(self.n, ((perm[x], perm[y]) for x, y in self.covers))

    def remove(self, x: int, splice: bool = False) -> "Poset":
        """Delete ``x`` and compact labels; with ``splice`` the unique lower
        and upper covers of ``x`` become a cover."""
        if self.n == 1:
            raise PosetError("cannot remove the only element")
        new = [i - (i > x) for i in range(self.n)]
        covers = {(new[a], new[b]) for a, b in self.covers if a != x and b != x}
        if splice:
            (lo,), (hi,) = self.lower_covers[x], self.upper_covers[x]
            covers.add((new[lo], new[hi]))
        return Poset(self.n - 1, covers)

    def induced(self, keep: Iterable[int]) -> "Poset":
        """Subposet on ``keep`` (relabelled in increasing order)."""
        keep = sorted(set(keep))
        idx = {x: i for i, x in enumerate(keep)}
        mask = sum(1 << x for x in keep)
        covers = []
        for x in keep:
            above = self.up[x] & mask & ~(1 << x)
            for y in _bits(above):
                # y covers x in the subposet iff nothing kept lies strictly between
                if not any((self.up[x] >> z) & 1 and (self.up[z] >> y) & 1
                           for z in _bits(above) if z != y):
                    covers.append((idx[x], idx[y]))
        return Poset(len(keep), covers)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self.covers == other.covers

    def __hash__(self):
        return hash((self.n, self.covers))

    def __repr__(self):
        return f"Poset({self.n}, {sorted(self.covers)})"

    def __len__(self):
        return self.n


def naive_is_lattice(p: Poset) -> bool:
    """Quartic inf/sup existence check straight from the definitions."""
    n = p.n
    leq = p.transitive_closure()
    for x in range(n):
        for y in range(n):
            ub = [z for z in range(n) if leq[x][z] and leq[y][z]]
            least = [z for z in ub if all(leq[z][w] for w in ub)]
            lb = [z for z in range(n) if leq[z][x] and leq[z][y]]
            greatest = [z for z in lb if all(leq[w][z] for w in lb)]
            if len(least) != 1 or len(greatest) != 1:
                return False
    return True


def is_dismantlable(p: Poset) -> bool:
    """Greedy removal of doubly irreducible elements down to one point.

    Crown-freeness passes to sublattices, so the removal order does not
    matter.
    """
    if not p.is_lattice:
        raise NotALattice("dismantlability is defined for lattices")
    while p.n > 1:
        irr = p.doubly_irreducible()
        if not irr:
            return False
        x = min(irr)
        p = p.induced(y for y in range(p.n) if y != x)
    return True
