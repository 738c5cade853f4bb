import csv
import io

import pytest

from latticecount.enumeration import OracleBudgetError
from latticecount.verify import COLUMNS, DEFAULT_CLASSES, Report, expand_classes, verify


def test_empty_class_list():
    assert verify(9, []).rows == ()
    assert verify(99, []).passed


def test_budget_refusal():
    with pytest.raises(OracleBudgetError):
        verify(99, ["L2"])


def test_unknown_class():
    with pytest.raises(KeyError):
        expand_classes(["L7"])


def test_groups_expand():
    names = expand_classes(["BB43.i", "L2", "L2"])
    assert names[:3] == ["BB43.1", "BB43.2", "BB43.3"] and names.count("L2") == 1


def test_l2_up_to_nine():
    report = verify(9, ["L2"])
    assert report.passed
    assert {(r.n, r.k) for r in report.rows} >= {(9, k) for k in range(1, 7)}


def test_default_classes_pass_to_eight():
    assert verify(8).passed


def test_published_mismatches_are_the_double_diamond_families():
    report = verify(10, list(DEFAULT_CLASSES) + ["B42", "B43", "B43.h"])
    bad = {(r.formula_id, r.n) for r in report.mismatches()}
    assert bad == {("B42.5", 9), ("B42.5", 10), ("B42", 9), ("B42", 10), ("L42", 9), ("L42", 10), ("BB43.21", 10),
                   ("B43.5", 10), ("B43", 10), ("L43.5", 10), ("L43", 10)}


def test_corrected_variants_pass():
    report = verify(11, ["B42.5c", "B42c", "L42c", "BB43.21c", "B43.5c", "B43c", "L43.5c", "L43c"])
    assert report.passed


def test_csv_and_json():
    report = verify(8, ["L2", "BB43.1"])
    rows = list(csv.reader(io.StringIO(report.to_csv())))
    assert tuple(rows[0]) == COLUMNS
    assert len(rows) == len(report.rows) + 1
    assert Report.from_json(report.to_json()) == report


def test_deterministic_across_workers():
    a = verify(9, ["L43", "L3"], workers=1)
    b = verify(9, ["L43", "L3"], workers=2)
    assert a.to_csv() == b.to_csv()
