"""Brute-force reference solvers, deliberately independent of the package code paths."""

from __future__ import annotations

import itertools
import random


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for j in range(len(part)):
            yield part[:j] + [[first] + part[j]] + part[j + 1 :]


def naive_min_max(sizes, k):
    best = None
    for part in set_partitions(range(len(sizes))):
        levels = [sum(sizes[i] for i in b) for b in part]
        if min(levels) >= k:
            cost = max(levels)
            if best is None or cost < best:
                best = cost
    return best


def _connected(adj, block):
    block = set(block)
    start = next(iter(block))
    seen, stack = {start}, [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v in block and v not in seen:
                seen.add(v)
                stack.append(v)
    return seen == block


def naive_connected_partition(n, edges, weights, k):
    adj = {u: set() for u in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    best = None
    for part in set_partitions(range(n)):
        ws = [sum(weights[u] for u in b) for b in part]
        if min(ws) < k or not all(_connected(adj, b) for b in part):
            continue
        if best is None or max(ws) < best:
            best = max(ws)
    return best


def naive_guillotine(points, k):
    """Min-max guillotine cost by plain recursion on point lists (no memo)."""
    total = sum(w for _, _, w in points)
    if total < k:
        return None
    best = total
    for pos in (0, 1):
        coords = sorted({p[pos] for p in points})
        for a in coords[:-1]:
            left = [p for p in points if p[pos] <= a]
            right = [p for p in points if p[pos] > a]
            lc = naive_guillotine(left, k)
            rc = naive_guillotine(right, k)
            if lc is None or rc is None:
                continue
            best = min(best, max(lc, rc))
    return best


def spanning_trees(n, edges):
    for combo in itertools.combinations(edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v in combo:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            yield combo


def tree_degree(n, edges):
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return max(deg)


def random_instance(rng: random.Random, n_max: int, k_range=(2, 100), size_factor=4):
    while True:
        n = rng.randint(1, n_max)
        k = rng.randint(*k_range)
        sizes = [rng.randint(1, size_factor * k) for _ in range(n)]
        if sum(sizes) >= k:
            return sizes, k


def random_connected_graph(rng: random.Random, n: int, extra_p: float = 0.3):
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_p:
                edges.add((u, v))
    return sorted(edges)


def random_points(rng: random.Random, max_coords: int, max_points: int, max_weight: int):
    n = rng.randint(1, max_points)
    xs = rng.sample(range(-50, 50), rng.randint(1, max_coords))
    ys = rng.sample(range(-50, 50), rng.randint(1, max_coords))
    pts = {}
    for _ in range(n):
        pts[(rng.choice(xs), rng.choice(ys))] = rng.randint(1, max_weight)
    return [(x, y, w) for (x, y), w in pts.items()]
