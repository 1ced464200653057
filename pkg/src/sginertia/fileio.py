"""Plain-text signed graph files.

::

    # comment
    sg 4
    e 0 1 +
    e 1 2 +
    e 2 3 +
    e 3 0 -

Vertices are 0-based; signs are the ASCII characters ``+`` and ``-``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .graph import SignedGraph, build


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_signed_graph(text: str) -> SignedGraph:
    n = None
    edges = []
    where = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "sg":
            if n is not None:
                raise ParseError(lineno, "second 'sg' header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(lineno, f"expected 'sg <n>', got {line!r}")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise ParseError(lineno, "edge before the 'sg <n>' header")
            if len(parts) != 4:
                raise ParseError(lineno, f"expected 'e <u> <v> <+|->', got {line!r}")
            u, v, s = parts[1:]
            if not (u.isdigit() and v.isdigit()):
                raise ParseError(lineno, f"vertex indices must be non-negative integers, got {u!r} {v!r}")
            if s not in ("+", "-"):
                raise ParseError(lineno, f"sign must be '+' or '-', got {s!r}")
            u, v = int(u), int(v)
            if u == v:
                raise ParseError(lineno, f"edge ({u}, {v}) is a loop")
            if u >= n or v >= n:
                raise ParseError(lineno, f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            key = (min(u, v), max(u, v))
            if key in where:
                raise ParseError(lineno, f"duplicate edge {{{u}, {v}}} (first on line {where[key]})")
            where[key] = lineno
            edges.append((u, v, s))
        else:
            raise ParseError(lineno, f"unknown record {parts[0]!r}")
    if n is None:
        raise ParseError(0, "missing 'sg <n>' header")
    return build(n, edges)


def format_signed_graph(g: SignedGraph) -> str:
    lines = [f"sg {g.n}"]
    lines += [f"e {u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges]
    return "\n".join(lines) + "\n"


def read_signed_graph(path: Union[str, Path]) -> SignedGraph:
    return parse_signed_graph(Path(path).read_text())


def write_signed_graph(g: SignedGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_signed_graph(g))
