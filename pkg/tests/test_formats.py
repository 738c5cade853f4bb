import pytest

from latticecount.construct import catalog
from latticecount.formats import format_poset, parse_poset, to_dot
from latticecount.poset import PosetError

from helpers import diamond


def test_roundtrip():
    for tag in ("F1", "B8", "B22"):
        p = catalog(tag)
        assert parse_poset(format_poset(p, header=tag)) == p


def test_comments_and_blank_lines():
    assert parse_poset("# a diamond\n4\n\n0 1\n0 2  # left\n1 3\n2 3\n") == diamond()


@pytest.mark.parametrize("text", ["", "x\n", "3\n0\n", "2\n0 1 2\n", "2\n0 5\n"])
def test_bad_text(text):
    with pytest.raises(PosetError):
        parse_poset(text)


def test_dot():
    text = to_dot(diamond(), "D", "n=4")
    assert text.startswith("// n=4\ndigraph \"D\" {")
    assert "rankdir=BT;" in text
    assert {"  0 -> 1;", "  0 -> 2;", "  1 -> 3;", "  2 -> 3;"} <= set(text.splitlines())
