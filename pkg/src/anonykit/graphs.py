"""Connected k-anonymous partitions of vertex-weighted graphs.

A low-degree spanning tree is cut repeatedly: each round removes the tree
edge whose lighter side is as light as possible while both sides still
weigh at least k, and emits that lighter side as one group. With tree
degree ``d`` every group weighs at most ``kappa + d * (k - 1)`` where
``kappa = max(k, heaviest vertex)``.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import Disconnected, InfeasibleTotal, InvalidInstance, InvalidSuppliedTree, TooLarge

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: tuple[Edge, ...]
    weights: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]], weights: Iterable[int]):
        n = int(n)
        weights = tuple(int(w) for w in weights)
        if n < 1:
            raise InvalidInstance("graph needs at least one vertex")
        if len(weights) != n:
            raise InvalidInstance(f"expected {n} weights, got {len(weights)}")
        if any(w < 0 for w in weights):
            raise InvalidInstance("vertex weights must be non-negative")
        seen = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInstance(f"edge ({u}, {v}) references a missing vertex")
            if u == v:
                raise InvalidInstance(f"self-loop at vertex {u}")
            e = _norm(u, v)
            if e in seen:
                raise InvalidInstance(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @property
    def total(self) -> int:
        return sum(self.weights)

    def is_connected_subset(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        if not vs:
            return False
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if v in vs and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == len(vs)


@dataclass(frozen=True)
class SpanningTree:
    n: int
    edges: tuple[Edge, ...]

    @property
    def degree(self) -> int:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return max(deg) if self.n else 0

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True)
class GraphPartition:
    parts: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]
    tree_degree: int
    kappa: int
    k: int

    @property
    def cost(self) -> int:
        return max(self.weights)

    @property
    def bound(self) -> int:
        """Certified cost bound ``kappa + d * (k - 1)``."""
        return self.kappa + self.tree_degree * (self.k - 1)

    @property
    def ratio_bound(self) -> int:
        """Approximation factor implied by the bound: ``d + 1``."""
        return self.tree_degree + 1


def _bfs_tree(g: WeightedGraph) -> list[Edge]:
    parent = [-1] * g.n
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    edges = []
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                edges.append(_norm(u, v))
                queue.append(v)
    if not all(seen):
        raise Disconnected("graph is not connected")
    return edges


def _tree_path(adj: list[set[int]], a: int, b: int) -> list[int]:
    prev = {a: a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for v in adj[u]:
            if v not in prev:
                prev[v] = u
                queue.append(v)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def _improve_degree(g: WeightedGraph, tree: list[Edge], max_rounds: int = 10_000) -> list[Edge]:
    """Local search: swap a non-tree edge in for a tree edge at a max-degree vertex.

    A swap is taken when the new edge joins two vertices of degree at most
    ``D - 2`` and its tree cycle passes through a vertex of degree ``D``; the
    cycle edge at that vertex is dropped. This lowers the number of
    max-degree vertices without creating new ones.
    """
    edges = set(tree)
    for _ in range(max_rounds):
        adj: list[set[int]] = [set() for _ in range(g.n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        deg = [len(a) for a in adj]
        top = max(deg)
        if top <= 2:
            break
        swapped = False
        for a, b in g.edges:
            if (a, b) in edges or deg[a] > top - 2 or deg[b] > top - 2:
                continue
            path = _tree_path(adj, a, b)
            for pos in range(1, len(path) - 1):
                w = path[pos]
                if deg[w] == top:
                    edges.discard(_norm(w, path[pos + 1]))
                    edges.add((a, b))
                    swapped = True
                    break
            if swapped:
                break
        if not swapped:
            break
    return sorted(edges)


def _check_tree(g: WeightedGraph, tree_edges: Iterable[Sequence[int]]) -> SpanningTree:
    edges = [_norm(int(u), int(v)) for u, v in tree_edges]
    graph_edges = set(g.edges)
    if len(set(edges)) != len(edges):
        raise InvalidSuppliedTree("tree lists an edge twice")
    for e in edges:
        if e not in graph_edges:
            raise InvalidSuppliedTree(f"tree edge {e} is not an edge of the graph")
    if len(edges) != g.n - 1:
        raise InvalidSuppliedTree(f"a spanning tree on {g.n} vertices has {g.n - 1} edges, got {len(edges)}")
    tree = SpanningTree(g.n, tuple(sorted(edges)))
    adj = tree.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    if len(seen) != g.n:
        raise InvalidSuppliedTree("supplied edges do not span the graph")
    return tree


def build_spanning_tree(g: WeightedGraph, tree: Iterable[Sequence[int]] | None = None) -> SpanningTree:
    """Spanning tree of small maximum degree.

    A supplied tree is validated and returned unchanged. Otherwise a BFS tree
    is improved by degree-reducing edge swaps; no degree guarantee is made
    beyond what the search reaches.
    """
    if tree is not None:
        return _check_tree(g, tree)
    edges = _bfs_tree(g)
    return SpanningTree(g.n, tuple(_improve_degree(g, edges)))


def _subtree_weights(adj: list[set[int]], alive: set[int], root: int, weights) -> tuple[dict, dict]:
    parent = {root: None}
    order = [root]
    for u in order:
        for v in adj[u]:
            if v in alive and v not in parent:
                parent[v] = u
                order.append(v)
    below = {}
    for u in reversed(order):
        below[u] = weights[u] + sum(below[v] for v in adj[u] if v in alive and parent.get(v) == u)
    return parent, below


def split_tree(tree: SpanningTree, weights: Sequence[int], k: int) -> GraphPartition:
    """Cut ``tree`` into connected groups of weight >= k.

    Each round picks, over all tree edges whose removal leaves both sides at
    weight >= k, the side of least weight; ties go to the lexicographically
    smallest edge, and on equal sides to the side holding the edge's smaller
    endpoint. That side becomes a group and the rest is cut again. When no
    edge qualifies the remainder is the last group.
    """
    weights = [int(w) for w in weights]
    total = sum(weights)
    if total < k:
        raise InfeasibleTotal(f"total weight {total} is below k={k}")
    adj = tree.adjacency()
    alive = set(range(tree.n))
    parts: list[tuple[int, ...]] = []

    while True:
        root = min(alive)
        parent, below = _subtree_weights(adj, alive, root, weights)
        rest_total = below[root]
        best = None
        for v, p in parent.items():
            if p is None:
                continue
            child_side = below[v]
            other_side = rest_total - child_side
            if child_side < k or other_side < k:
                continue
            edge = _norm(v, p)
            lower_end = edge[0]
            # child side contains v; decide which side holds the smaller endpoint
            if child_side < other_side or (child_side == other_side and lower_end == v):
                key = (child_side, edge, 0)
                side = ("child", v)
            else:
                key = (other_side, edge, 1)
                side = ("other", v)
            if best is None or key < best[0]:
                best = (key, side)
        if best is None:
            parts.append(tuple(sorted(alive)))
            break
        which, v = best[1]
        sub = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in alive and parent.get(w) == u and w not in sub:
                    sub.add(w)
                    stack.append(w)
        emitted = sub if which == "child" else alive - sub
        parts.append(tuple(sorted(emitted)))
        alive -= emitted

    part_weights = tuple(sum(weights[u] for u in p) for p in parts)
    kappa = max([k] + weights)
    return GraphPartition(tuple(parts), part_weights, tree.degree, kappa, k)


def partition_graph(g: WeightedGraph, k: int, tree: Iterable[Sequence[int]] | None = None) -> GraphPartition:
    if g.total < k:
        raise InfeasibleTotal(f"total weight {g.total} is below k={k}")
    t = build_spanning_tree(g, tree)
    if t.degree > 3:
        warnings.warn(f"spanning tree has degree {t.degree}; bound kappa + {t.degree}(k-1) applies", stacklevel=2)
    return split_tree(t, g.weights, k)


MAX_EXACT_VERTICES = 12


def exact_connected_partition(g: WeightedGraph, k: int, max_vertices: int = MAX_EXACT_VERTICES) -> tuple[int, GraphPartition]:
    """Optimal min-max partition into connected groups of weight >= k.

    Same subset recursion as the bin-covering oracle, with groups restricted
    to vertex sets that induce connected subgraphs.
    """
    n = g.n
    if n > max_vertices:
        raise TooLarge(f"exact search limited to {max_vertices} vertices, got {n}")
    if g.total < k:
        raise InfeasibleTotal(f"total weight {g.total} is below k={k}")
    size_of = 1 << n
    nbr = [sum(1 << v for v in g.adjacency[u]) for u in range(n)]
    level = [0] * size_of
    connected = [False] * size_of
    for m in range(1, size_of):
        low = m & -m
        level[m] = level[m ^ low] + g.weights[low.bit_length() - 1]
        reach = low
        frontier = low
        while frontier:
            grow = 0
            f = frontier
            while f:
                b = f & -f
                grow |= nbr[b.bit_length() - 1]
                f ^= b
            frontier = grow & m & ~reach
            reach |= frontier
        connected[m] = reach == m

    inf = float("inf")
    best = [inf] * size_of
    choice = [0] * size_of
    best[0] = 0
    for m in range(1, size_of):
        low = m & -m
        rest = m ^ low
        cur, cur_sub = inf, 0
        sub = rest
        while True:
            s = sub | low
            ls = level[s]
            if ls >= k and ls < cur and connected[s]:
                other = best[m ^ s]
                c = ls if ls > other else other
                if c < cur:
                    cur, cur_sub = c, s
            if not sub:
                break
            sub = (sub - 1) & rest
        best[m] = cur
        choice[m] = cur_sub

    full = size_of - 1
    if best[full] == inf:
        raise InfeasibleTotal("no partition into connected groups of weight >= k")
    parts = []
    m = full
    while m:
        s = choice[m]
        parts.append(tuple(i for i in range(n) if s >> i & 1))
        m ^= s
    part_weights = tuple(sum(g.weights[u] for u in p) for p in parts)
    kappa = max([k] + list(g.weights))
    return int(best[full]), GraphPartition(tuple(parts), part_weights, 0, kappa, k)
