"""Graph and coloring file formats.

* DIMACS: ``p edge <n> <m>`` header, ``e <u> <v>`` lines, 1-based, ``c`` comments.
  Without a header the vertex count is the largest endpoint.
* edgelist: ``u v`` per line, 0-based; ``#`` comments.  An optional
  ``# n <count>`` comment fixes the vertex count (isolated trailing vertices).
* coloring: JSON ``{"palette": k, "colors": [c_0, ...]}`` with colors >= 1.
"""

from __future__ import annotations

import io
import json
import os
from typing import IO, Union

from .errors import DuplicateEdge, ParseError, SelfLoop
from .graph import Coloring, Graph

Source = Union[str, os.PathLike, IO[str]]
FORMATS = ("dimacs", "edgelist")


def _read(source: Source) -> str:
    if hasattr(source, "read"):
        return source.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def guess_format(path: str) -> str:
    return "edgelist" if str(path).endswith((".txt", ".edges", ".edgelist")) else "dimacs"


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"not an integer: {tok!r}") from None


def _build(n: int, edges: list[tuple[int, int, int]], base: int) -> Graph:
    seen: dict[tuple[int, int], int] = {}
    for u, v, lineno in edges:
        if u == v:
            raise SelfLoop(u + base, lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(key[0] + base, key[1] + base, lineno)
        seen[key] = lineno
    return Graph(n, list(seen))


def parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None:
                raise ParseError(lineno, "second problem line")
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise ParseError(lineno, "expected 'p edge <n> <m>'")
            n, declared_m = _int(tok[2], lineno), _int(tok[3], lineno)
            if n < 0 or declared_m < 0:
                raise ParseError(lineno, "negative size")
        elif tok[0] == "e":
            if len(tok) != 3:
                raise ParseError(lineno, "expected 'e <u> <v>'")
            u, v = _int(tok[1], lineno), _int(tok[2], lineno)
            if u == v:
                raise SelfLoop(u, lineno)
            for x in (u, v):
                if x < 1 or (n is not None and x > n):
                    raise ParseError(lineno, f"vertex {x} outside 1..{n if n is not None else 'n'}")
            edges.append((u - 1, v - 1, lineno))
        else:
            raise ParseError(lineno, f"unknown line type {tok[0]!r}")
    if n is None:
        # headerless input: n is the largest endpoint
        n = max((max(u, v) + 1 for u, v, _ in edges), default=0)
        return _build(n, edges, 1)
    if any(max(u, v) >= n for u, v, _ in edges):
        bad = next(ln for u, v, ln in edges if max(u, v) >= n)
        raise ParseError(bad, f"vertex outside 1..{n}")
    if len(edges) != declared_m:
        raise ParseError(0, f"header declares {declared_m} edges, found {len(edges)}")
    return _build(n, edges, 1)


def parse_edgelist(text: str) -> Graph:
    n_decl = None
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            tok = line[1:].split()
            if len(tok) == 2 and tok[0] == "n":
                n_decl = _int(tok[1], lineno)
            continue
        tok = line.split()
        if len(tok) != 2:
            raise ParseError(lineno, "expected 'u v'")
        u, v = _int(tok[0], lineno), _int(tok[1], lineno)
        if u < 0 or v < 0:
            raise ParseError(lineno, "negative vertex id")
        top = max(top, u, v)
        edges.append((u, v, lineno))
    n = top + 1 if n_decl is None else n_decl
    if top >= n:
        raise ParseError(0, f"vertex {top} outside the declared count {n}")
    return _build(n, edges, 0)


def parse_graph(source: Source, fmt: str = "dimacs") -> Graph:
    text = _read(source)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown format {fmt!r}")


def emit_graph(g: Graph, fmt: str = "dimacs") -> str:
    buf = io.StringIO()
    if fmt == "dimacs":
        buf.write(f"p edge {g.n} {g.m}\n")
        for u, v in g.edges():
            buf.write(f"e {u + 1} {v + 1}\n")
    elif fmt == "edgelist":
        buf.write(f"# n {g.n}\n")
        for u, v in g.edges():
            buf.write(f"{u} {v}\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return buf.getvalue()


def coloring_to_json(c: Coloring) -> str:
    return json.dumps({"palette": c.palette, "colors": list(c.colors)})


def coloring_from_json(text: str) -> Coloring:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None
    if not isinstance(doc, dict) or "colors" not in doc:
        raise ParseError(0, "coloring document needs a 'colors' list")
    colors = doc["colors"]
    if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
        raise ParseError(0, "'colors' must be a list of integers")
    palette = doc.get("palette", max(colors, default=1))
    if not isinstance(palette, int) or palette < 1:
        raise ParseError(0, "'palette' must be a positive integer")
    try:
        return Coloring(colors, palette)
    except ValueError as exc:
        raise ParseError(0, str(exc)) from None
