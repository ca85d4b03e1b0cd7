"""Readers for the bin-covering, graph and point file formats."""

from __future__ import annotations

import csv
from pathlib import Path

from .errors import ParseError
from .graphs import WeightedGraph
from .rects import WeightedPointSet


def _tokens(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        out.extend(line.replace(",", " ").split())
    return out


def _ints(tokens: list[str], where: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def read_sizes(path) -> list[int]:
    """Item sizes: integers separated by whitespace or commas; ``#`` starts a comment."""
    sizes = _ints(_tokens(Path(path).read_text()), str(path))
    if not sizes:
        raise ParseError(f"{path}: no item sizes found")
    return sizes


def parse_graph(text: str, where: str = "<graph>") -> tuple[WeightedGraph, int, list[tuple[int, int]] | None]:
    """Header ``n m k``, then m edge lines ``u v``, then n weight lines.

    An optional trailing section starts with a line ``tree`` followed by
    n - 1 edges of a spanning tree to use instead of building one.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError(f"{where}: empty graph file")
    header = _ints(lines[0].split(), where)
    if len(header) != 3:
        raise ParseError(f"{where}: header must be 'n m k'")
    n, m, k = header
    body = lines[1:]
    if len(body) < m + n:
        raise ParseError(f"{where}: expected {m} edges and {n} weights, file is too short")
    edges = []
    for ln in body[:m]:
        pair = _ints(ln.split(), where)
        if len(pair) != 2:
            raise ParseError(f"{where}: edge line {ln!r} must hold two vertices")
        edges.append((pair[0], pair[1]))
    weights = []
    for ln in body[m : m + n]:
        vals = _ints(ln.split(), where)
        if len(vals) != 1:
            raise ParseError(f"{where}: weight line {ln!r} must hold one integer")
        weights.append(vals[0])
    rest = body[m + n :]
    tree = None
    if rest:
        if rest[0].lower() != "tree":
            raise ParseError(f"{where}: unexpected line {rest[0]!r} after weights")
        tree = []
        for ln in rest[1:]:
            pair = _ints(ln.split(), where)
            if len(pair) != 2:
                raise ParseError(f"{where}: tree edge line {ln!r} must hold two vertices")
            tree.append((pair[0], pair[1]))
    return WeightedGraph(n, edges, weights), k, tree


def read_graph(path):
    return parse_graph(Path(path).read_text(), str(path))


def read_points(path) -> WeightedPointSet:
    """CSV with header ``x,y,weight`` and integer fields."""
    with Path(path).open(newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["x", "y", "weight"]:
            raise ParseError(f"{path}: header must be x,y,weight")
        pts = []
        for row in reader:
            try:
                pts.append((int(row["x"]), int(row["y"]), int(row["weight"])))
            except (TypeError, ValueError):
                raise ParseError(f"{path}:{reader.line_num}: non-integer field") from None
    if not pts:
        raise ParseError(f"{path}: no points")
    return WeightedPointSet(pts)
