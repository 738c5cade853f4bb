"""Formula-versus-oracle reports.

Each formula id is paired with a predicate on ``Classified`` lattices; a
report row holds the formula value and the number of oracle lattices on n
elements passing the predicate.  Up to ``MAX_EXHAUSTIVE_N`` the oracle is
the exhaustive one, above that the adjunct oracle with nullity at most 3,
so rows needing larger nullity are not produced there.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Callable, Iterable

from . import formulas as F
from .enumeration import (MAX_EXHAUSTIVE_N, Classified, OracleBudgetError, default_workers,
                          describe, enumerate_adjunct_lattices, enumerate_all_lattices)

MAX_VERIFY_N = 12
ADJUNCT_K = 3

COLUMNS = ("formula_id", "n", "k", "h", "formula_value", "oracle_value", "match")


@dataclass(frozen=True, order=True)
class Row:
    formula_id: str
    n: int
    k: int
    h: int | None
    formula_value: int
    oracle_value: int

    @property
    def match(self) -> bool:
        return self.formula_value == self.oracle_value


@dataclass(frozen=True)
class Report:
    rows: tuple[Row, ...]

    @property
    def passed(self) -> bool:
        return all(r.match for r in self.rows)

    def mismatches(self) -> list[Row]:
        return [r for r in self.rows if not r.match]

    def records(self) -> list[dict]:
        return [{**asdict(r), "match": r.match} for r in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in self.rows:
            w.writerow((r.formula_id, r.n, r.k, "" if r.h is None else r.h,
                        r.formula_value, r.oracle_value, str(r.match).lower()))
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"passed": self.passed, "rows": self.records()}, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        return cls(tuple(Row(d["formula_id"], d["n"], d["k"], d["h"],
                             d["formula_value"], d["oracle_value"]) for d in data["rows"]))


# -- oracle side ----------------------------------------------------------

@lru_cache(maxsize=None)
def oracle_classes(n: int, workers: int = 1) -> tuple[Classified, ...]:
    if n <= MAX_EXHAUSTIVE_N:
        lats = enumerate_all_lattices(n, workers)
    else:
        lats = enumerate_adjunct_lattices(n, ADJUNCT_K, workers)
    return tuple(describe(p) for p in lats.values())


def max_oracle_k(n: int) -> int | None:
    """Largest nullity the oracle for size n sees completely (None: all)."""
    return None if n <= MAX_EXHAUSTIVE_N else ADJUNCT_K


# -- class table ----------------------------------------------------------

Pred = Callable[[Classified], bool]


@dataclass(frozen=True)
class Check:
    formula_id: str
    value: Callable[[int, int], int]      # (n, k) -> formula value
    pred: Callable[[int], Pred]           # k -> predicate
    ks: Callable[[int], Iterable[int]]    # n -> nullities to report
    h: int | None = None


def _is(r, k, rc=None, block=None, h=None, basic=None, family=None):
    def test(c: Classified) -> bool:
        key = c.key
        return (key.r == r and key.k == k
                and (rc is None or key.rc == rc)
                and (block is None or c.block == block)
                and (h is None or key.h == h)
                and (basic is None or c.basic == basic)
                and (family is None or c.family == family))
    return test


def _fixed(k):
    return lambda n: (k,)


def _build_checks() -> dict[str, Check]:
    checks: dict[str, Check] = {}

    def add(fid, value, pred, ks, h=None):
        checks[fid] = Check(fid, value, pred, ks, h)

    add("L2", F.count_L_2red, lambda k: _is(2, k), lambda n: range(1, max(n - 2, 1)))
    add("L3", F.count_L_3red, lambda k: _is(3, k), lambda n: range(2, max(n - 3, 2)))
    add("B3", F.count_B_3red, lambda k: _is(3, k, block=True), lambda n: range(2, max(n - 3, 2)))
    for fam, fn in (("F1", F.count_B_3red_F1), ("F2", F.count_B_3red_F2),
                    ("F3", F.count_B_3red_F3), ("F4", F.count_B_3red_F4)):
        add(f"B3.{fam}", fn, lambda k, fam=fam: _is(3, k, block=True, family=fam),
            lambda n: range(2, max(n - 3, 2)))
    add("L22s", lambda n, k: F.count_L_sandwiched_22(n),
        lambda k: lambda c: _is(2, 2)(c) and min(c.tails) > 0, _fixed(2))

    for corrected, sfx in ((False, ""), (True, "c")):
        add(f"L42{sfx}", lambda n, k, c=corrected: F.count_L_42(n, c), lambda k: _is(4, 2), _fixed(2))
        add(f"B42{sfx}", lambda n, k, c=corrected: F.count_B_42(n, c),
            lambda k: _is(4, 2, block=True), _fixed(2))
        add(f"L43{sfx}", lambda n, k, c=corrected: F.count_L_43(n, c),
            lambda k: _is(4, 3, rc=True), _fixed(3))
        add(f"B43{sfx}", lambda n, k, c=corrected: F.count_B_43(n, c),
            lambda k: _is(4, 3, rc=True, block=True), _fixed(3))
    for h in (3, 4, 5):
        add(f"B42.{h}", lambda n, k, h=h: F.count_B_42_h(n, h),
            lambda k, h=h: _is(4, 2, block=True, h=h), _fixed(2), h)
    add("B42.5c", lambda n, k: F.count_B_42_5_corrected(n),
        lambda k: _is(4, 2, block=True, h=5), _fixed(2), 5)
    for h in (3, 4, 5, 6):
        add(f"L43.{h}", lambda n, k, h=h: F.count_L_43_h(n, h),
            lambda k, h=h: _is(4, 3, rc=True, h=h), _fixed(3), h)
        add(f"B43.{h}", lambda n, k, h=h: F.count_B_43_h(n, h),
            lambda k, h=h: _is(4, 3, rc=True, block=True, h=h), _fixed(3), h)
    add("L43.5c", lambda n, k: F.count_L_43_h(n, 5, True),
        lambda k: _is(4, 3, rc=True, h=5), _fixed(3), 5)
    add("B43.5c", lambda n, k: F.count_B_43_h(n, 5, True),
        lambda k: _is(4, 3, rc=True, block=True, h=5), _fixed(3), 5)
    for i in range(1, 23):
        h = F.block_height(i)
        add(f"BB43.{i}", lambda n, k, i=i: F.count_BB_43(n, i),
            lambda k, i=i: _is(4, 3, rc=True, block=True, basic=f"B{i}"), _fixed(3), h)
    add("BB43.21c", lambda n, k: F.count_BB_43(n, 21, True),
        lambda k: _is(4, 3, rc=True, block=True, basic="B21"), _fixed(3), 5)
    return checks


CHECKS = _build_checks()

# class names accepted by verify; the group names expand to their members
GROUPS = {
    "B3.Fi": tuple(f"B3.F{i}" for i in range(1, 5)),
    "B42.h": ("B42.3", "B42.4", "B42.5"),
    "L43.h": tuple(f"L43.{h}" for h in range(3, 7)),
    "B43.h": tuple(f"B43.{h}" for h in range(3, 7)),
    "BB43.i": tuple(f"BB43.{i}" for i in range(1, 23)),
}

# the published sums; the "c" variants are opt-in
DEFAULT_CLASSES = ("L2", "L3", "B3.Fi", "B42.h", "L42", "L22s", "BB43.i", "L43.h", "L43")


def expand_classes(classes: Iterable[str]) -> list[str]:
    out: list[str] = []
    for name in classes:
        members = GROUPS.get(name, (name,))
        for m in members:
            if m not in CHECKS:
                raise KeyError(f"unknown class {m!r}")
            if m not in out:
                out.append(m)
    return out


def verify(n_max: int, classes: Iterable[str] | None = None, workers: int | None = None) -> Report:
    """Compare every requested formula with the oracle for n = 1..n_max."""
    names = expand_classes(DEFAULT_CLASSES if classes is None else classes)
    if not names:
        return Report(())
    if not 1 <= n_max <= MAX_VERIFY_N:
        raise OracleBudgetError(f"verify supports 1 <= n_max <= {MAX_VERIFY_N}, got {n_max}")
    w = default_workers() if workers is None else workers
    rows = []
    for n in range(1, n_max + 1):
        lats = oracle_classes(n, w)
        cap = max_oracle_k(n)
        for name in names:
            chk = CHECKS[name]
            for k in chk.ks(n):
                if cap is not None and k > cap:
                    continue
                pred = chk.pred(k)
                oracle = sum(1 for c in lats if pred(c))
                rows.append(Row(name, n, k, chk.h, chk.value(n, k), oracle))
    return Report(tuple(sorted(rows)))
