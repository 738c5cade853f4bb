"""Poset text format and Graphviz DOT export.

Text format: first line ``n``, then one ``x y`` cover per line, 0-based.
Blank lines and ``#`` comments are ignored.
"""
from __future__ import annotations

from .poset import Poset, PosetError


def parse_poset(text: str) -> Poset:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise PosetError("empty poset text")
    try:
        n = int(lines[0])
        covers = []
        for ln in lines[1:]:
            x, y = ln.split()
            covers.append((int(x), int(y)))
    except ValueError as exc:
        raise PosetError(f"malformed poset text: {exc}") from None
    return Poset(n, covers)


def format_poset(p: Poset, header: str | None = None) -> str:
    out = [f"# {header}"] if header else []
    out.append(str(p.n))
    out.extend(f"{x} {y}" for x, y in sorted(p.covers))
    return "\n".join(out) + "\n"


def to_dot(p: Poset, name: str = "P", header: str | None = None) -> str:
    """Hasse diagram, bottom to top: every cover x < y is an edge x -> y."""
    out = []
    if header:
        out.append(f"// {header}")
    out.append(f'digraph "{name}" {{')
    out.append("  rankdir=BT;")
    out.append("  node [shape=circle, label=\"\", width=0.15];")
    out.extend(f"  {x};" for x in range(p.n))
    out.extend(f"  {x} -> {y};" for x, y in sorted(p.covers))
    out.append("}")
    return "\n".join(out) + "\n"
