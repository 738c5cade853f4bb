"""The ten acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (shown even under output
capture) and then asserts.  Run directly with ``python tests/test_acceptance.py``
for just the summary lines.
"""
import random
import sys
import time

import pytest

from latticecount import formulas as F
from latticecount.canon import is_isomorphic
from latticecount.construct import B_BLOCKS, CAPTION_DUALS, adjunct, catalog
from latticecount.enumeration import classify, enumerate_adjunct_lattices, enumerate_all_lattices
from latticecount.reduce import basic_block, identify_block
from latticecount.verify import verify

from helpers import brute_partitions, random_adjunct

_print = print


@pytest.fixture(autouse=True)
def _show(capsys):
    # let the PASS/FAIL lines through pytest's capture
    global _print

    def shown(*a):
        with capsys.disabled():
            print(*a)
    _print = shown
    yield
    _print = print


def outcome(num, ok, detail):
    _print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
    return ok


def _counts(lats, pred):
    return sum(1 for p in lats if pred(p))


def test_1_partitions():
    t = time.perf_counter()
    bad = [(n, k) for n in range(26) for k in range(n + 2) if F.P(n, k) != brute_partitions(n, k)]
    rec = [(n, k) for n in range(1, 61) for k in range(1, n + 1)
           if F.P(n, k) != F.P(n - 1, k - 1) + F.P(n - k, k)]
    dt = time.perf_counter() - t
    ok = not bad and not rec and dt < 1
    assert outcome(1, ok, f"brute mismatches={len(bad)} recurrence failures={len(rec)} time={dt:.2f}s")


def test_2_exhaustive_calibration():
    t = time.perf_counter()
    got = [len(enumerate_all_lattices(n)) for n in range(1, 9)]
    dt = time.perf_counter() - t
    ok = got == [1, 1, 1, 2, 5, 15, 53, 222] and dt < 300
    assert outcome(2, ok, f"counts={got} time={dt:.1f}s")


def test_3_two_reducible():
    report = verify(9, ["L2"])
    bad = [(r.n, r.k, r.formula_value, r.oracle_value) for r in report.mismatches()]
    assert outcome(3, report.passed, f"{len(report.rows)} (n,k) rows, mismatches={bad}")


def test_4_three_reducible():
    report = verify(9, ["L3"])
    rows = [r for r in report.rows if r.k in (2, 3)]
    bad = [(r.n, r.k, r.formula_value, r.oracle_value) for r in rows if not r.match]
    assert outcome(4, not bad and rows, f"{len(rows)} rows with k in (2,3), mismatches={bad}")


def _class_counts(n, r, k, rc):
    def pred(p):
        c = classify(p)
        return c.r == r and c.k == k and (not rc or c.rc)
    adj = _counts(enumerate_adjunct_lattices(n, 3).values(), pred)
    full = _counts(enumerate_all_lattices(n).values(), pred) if n <= 9 else None
    return adj, full


def test_5_four_two():
    bad = []
    for n in range(1, 11):
        adj, full = _class_counts(n, 4, 2, False)
        f = F.count_L_42(n)
        if f != adj or (full is not None and f != full):
            bad.append((n, f, adj, full))
    assert outcome(5, not bad, f"mismatches (n, formula, adjunct, exhaustive)={bad}")


def test_6_four_three_rc():
    t = time.perf_counter()
    bad = []
    for n in range(1, 11):
        adj, full = _class_counts(n, 4, 3, True)
        f = F.count_L_43(n)
        if f != adj or (full is not None and f != full):
            bad.append((n, f, adj, full))
    dt = time.perf_counter() - t
    ok = not bad and F.count_L_43(7) == 3 and dt < 600
    assert outcome(6, ok, f"L43(7)={F.count_L_43(7)} mismatches (n, formula, adjunct, exhaustive)={bad} "
                          f"time={dt:.1f}s")


def test_7_basic_block_catalog():
    members = none = outside = 0
    for n in range(1, 11):
        for p in enumerate_adjunct_lattices(n, 3).values():
            c = classify(p)
            if (c.r, c.k, c.rc) != (4, 3, True):
                continue
            members += 1
            tag = identify_block(p)
            if tag is None:
                none += 1
            elif tag not in B_BLOCKS:
                outside += 1
    exhaustive_members = sum(1 for p in enumerate_all_lattices(9).values()
                             if (lambda c: (c.r, c.k, c.rc) == (4, 3, True))(classify(p)))
    adjunct_members = sum(1 for p in enumerate_adjunct_lattices(9, 3).values()
                          if (lambda c: (c.r, c.k, c.rc) == (4, 3, True))(classify(p)))
    ok = members > 0 and none == 0 and outside == 0 and exhaustive_members == adjunct_members
    assert outcome(7, ok, f"{members} class members, unidentified={none}, non-B={outside}, "
                          f"n=9 oracles agree={exhaustive_members == adjunct_members}")


def test_8_reduction_preserves():
    rng = random.Random(8)
    violations = 0
    for _ in range(1000):
        p, _ = random_adjunct(rng, n_max=14, k_max=3)
        b = basic_block(p)
        if b.nullity != p.nullity or len(b.reducible_elements()) != len(p.reducible_elements()):
            violations += 1
        elif p.reducible_elements():
            red_p = p.induced(sorted(p.reducible_elements()))
            red_b = b.induced(sorted(b.reducible_elements()))
            violations += not is_isomorphic(red_p, red_b)
    assert outcome(8, violations == 0, f"1000 random adjunct lattices, violations={violations}")


def test_9_structural_laws():
    rng = random.Random(9)
    edge = null = steps = 0
    for _ in range(1000):
        lat, pieces = random_adjunct(rng, n_max=14, k_max=3)
        for l1, a, b, l2 in pieces:
            steps += 1
            edge += adjunct(l1, a, b, l2).edge_count != l1.edge_count + l2.edge_count + 2
        null += lat.nullity != len(pieces)
    ok = edge == 0 and null == 0
    assert outcome(9, ok, f"1000 constructions ({steps} adjunct steps), edge violations={edge}, "
                          f"nullity violations={null}")


def test_10_duality():
    bad_pairs = [(a, b) for a, b in CAPTION_DUALS if not is_isomorphic(catalog(a).dual(), catalog(b))]
    eq = [(1, 2), (6, 7), (8, 9), (10, 11), (13, 14), (15, 16), (17, 18), (19, 20)]
    bad_eq = [(i, k, j) for i, k in eq for j in range(7, 21) if F.count_BB_43(j, i) != F.count_BB_43(j, k)]
    ok = not bad_pairs and not bad_eq
    assert outcome(10, ok, f"{len(CAPTION_DUALS)} caption pairs, failing={bad_pairs}; "
                           f"formula equalities failing={bad_eq}")


if __name__ == "__main__":
    failed = 0
    tests = [(int(name.split("_")[1]), fn) for name, fn in list(globals().items()) if name.startswith("test_")]
    for _, fn in sorted(tests):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
