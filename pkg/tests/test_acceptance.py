"""Exit criteria, each run at its frozen tolerance and time limit.

Every test records one PASS/FAIL line that is printed in the terminal
summary, whatever the outcome.
"""

import csv
import io
import math
import random
import subprocess
import sys
import time
from fractions import Fraction
from importlib.resources import files

import pytest

from anonykit.bincover import (
    approx_two_eps,
    exact_min_max,
    fold,
    relaxed_one_eps,
    split_three,
    split_two,
    spread,
)
from anonykit.errors import EnumerationBudgetExceeded
from anonykit.graphs import WeightedGraph, exact_connected_partition, partition_graph
from anonykit.model import make_instance
from anonykit.rects import WeightedPointSet, candidate_cuts, guillotine_optimal, kd_partition
from conftest import ACCEPTANCE_LINES
from oracles import naive_guillotine, naive_min_max, random_connected_graph, random_instance, random_points

pytestmark = pytest.mark.acceptance


class Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit
        self.violations = []
        self.checked = 0

    def check(self, ok, detail):
        self.checked += 1
        if not ok:
            self.violations.append(detail)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and not self.violations and elapsed < self.limit
        status = "PASS" if ok else "FAIL"
        note = f"{self.checked} checks, {len(self.violations)} violations, {elapsed:.2f}s (limit {self.limit}s)"
        if exc_type is not None:
            note += f", raised {exc_type.__name__}"
        ACCEPTANCE_LINES[self.number] = f"{status} criterion {self.number}: {self.title} [{note}]"
        if exc_type is None:
            assert not self.violations, self.violations[:5]
            assert elapsed < self.limit, f"took {elapsed:.2f}s"
        return False


def mixed_instances(seed, count, n_max):
    # alternate all-nominal instances (the hard case for enumeration) with sizes up to 4k
    rng = random.Random(seed)
    return [random_instance(rng, n_max, (2, 100), 1 if i % 2 == 0 else 4) for i in range(count)]


@pytest.fixture(scope="module")
def ptas_instances():
    out = []
    for sizes, k in mixed_instances(2024, 200, 10):
        inst = make_instance(sizes, k)
        out.append((inst, exact_min_max(inst)[0]))
    return out


def test_fold_bound():
    with Criterion(1, "fold bound max(k-1+max x, 3k-3) over 1000 instances x 5 orders", 10) as c:
        rng = random.Random(1)
        for _ in range(1000):
            sizes, k = random_instance(rng, 50, (2, 100), 4)
            inst = make_instance(sizes, k)
            bound = max(k - 1 + max(sizes), 3 * k - 3)
            for _ in range(5):
                order = list(range(inst.n))
                rng.shuffle(order)
                p = fold(inst, order)
                c.check(p.feasible and p.cost <= bound, (sizes, k, order, p.cost))


def test_spread_ratio():
    with Criterion(2, "spread <= ceil(5/2 exact) and <= fold over 500 instances", 60) as c:
        for sizes, k in mixed_instances(2, 500, 12):
            inst = make_instance(sizes, k)
            opt = exact_min_max(inst)[0]
            p = spread(inst)
            c.check(p.feasible and p.cost <= math.ceil(Fraction(5, 2) * opt), (sizes, k, p.cost, opt))
            c.check(p.cost <= fold(inst).cost, (sizes, k, "above fold"))


def test_split_properties():
    with Criterion(3, "split_two and split_three properties on 10000 inputs each", 5) as c:
        rng = random.Random(3)
        for _ in range(10000):
            m = rng.randint(1, 60)
            values = [rng.randint(1, m) for _ in range(rng.randint(0, 30))]
            s = sum(values)
            a, b = split_two(values, m)
            c.check(a + b == values and 2 * sum(a) <= s + m and 2 * sum(b) <= s + m, (values, m))
        for _ in range(10000):
            values = [rng.randint(1, 40) for _ in range(rng.randint(2, 30))]
            total = sum(values)
            while 2 * max(values) > total:
                values.append(rng.randint(1, 40))
                total = sum(values)
            parts = split_three(values, total)
            ok = sorted(parts[0] + parts[1] + parts[2]) == sorted(values)
            c.check(ok and all(2 * sum(p) <= total for p in parts), (values,))


def test_ptas_bound(ptas_instances):
    with Criterion(4, "2+eps scheme cost <= floor((1+eps)(exact+k)) for eps in {1/2, 1/4}", 300) as c:
        for eps in (Fraction(1, 2), Fraction(1, 4)):
            for inst, opt in ptas_instances:
                try:
                    p = approx_two_eps(inst, eps)
                except EnumerationBudgetExceeded:
                    c.check(False, (inst.sizes, inst.k, eps, "budget"))
                    continue
                c.check(p.feasible and p.cost <= math.floor((1 + eps) * (opt + inst.k)), (inst.sizes, inst.k, eps))


def test_relaxed_scheme(ptas_instances):
    with Criterion(5, "relaxed scheme bins >= ceil((1-eps)k), cost <= ceil((1+eps) exact)", 300) as c:
        for eps in (Fraction(1, 2), Fraction(1, 4)):
            for inst, opt in ptas_instances:
                p = relaxed_one_eps(inst, eps)
                floor = math.ceil((1 - eps) * inst.k)
                c.check(min(p.levels) >= floor, (inst.sizes, inst.k, eps, p.levels))
                c.check(p.cost <= math.ceil((1 + eps) * opt), (inst.sizes, inst.k, eps, p.cost, opt))


@pytest.mark.filterwarnings("ignore:spanning tree has degree")
def test_tree_split_bounds():
    with Criterion(6, "tree splitting part-weight bounds and ratio <= d+1 on 300 graphs", 60) as c:
        rng = random.Random(6)
        done = 0
        while done < 300:
            n = rng.randint(1, 10)
            k = rng.randint(1, 10)
            edges = random_connected_graph(rng, n, rng.choice([0.0, 0.2, 0.5]))
            weights = [rng.randint(0, 3 * k) for _ in range(n)]
            if sum(weights) < k:
                continue
            done += 1
            g = WeightedGraph(n, edges, weights)
            part = partition_graph(g, k)
            d, kappa = part.tree_degree, part.kappa
            for p, w in zip(part.parts, part.weights):
                c.check(g.is_connected_subset(p) and w >= k, (edges, weights, k, p))
            for w in part.weights[:-1]:
                c.check(w <= kappa + (d - 1) * (k - 1), (edges, weights, k, "non-final"))
            c.check(part.weights[-1] <= kappa + d * (k - 1), (edges, weights, k, "final"))
            opt = exact_connected_partition(g, k)[0]
            c.check(part.cost <= (d + 1) * opt, (edges, weights, k, part.cost, opt))


def _leaves_ok(ps, tree, k):
    leaves = list(tree.leaves())
    if sum(l.rect.area for l in leaves) != tree.rect.area:
        return False
    if any(a.rect.overlaps(b.rect) for i, a in enumerate(leaves) for b in leaves[i + 1 :]):
        return False
    for leaf in leaves:
        inside = [p for p in ps.points if leaf.rect.contains(p[0], p[1])]
        if sum(p[2] for p in inside) != leaf.weight or leaf.weight < k:
            return False
        if any(lo >= k and hi >= k for _, _, lo, hi in candidate_cuts(inside)):
            return False
    return sum(l.weight for l in leaves) == ps.total


def test_kd_tree():
    with Criterion(7, "kd-tree degenerate 5k-4 leaf; tiling, maximality, <= 5x guillotine on 300 sets", 120) as c:
        degenerate = WeightedPointSet([(0, 0, 3), (0, 1, 2), (0, -1, 2), (1, 0, 2), (-1, 0, 2)])
        tree = kd_partition(degenerate, 3)
        c.check(tree.is_leaf and tree.weight == 11, "degenerate instance")
        rng = random.Random(7)
        done = 0
        while done < 300:
            k = rng.randint(1, 12)
            pts = random_points(rng, 12, 40, 8)
            ps = WeightedPointSet(pts)
            if ps.total < k:
                continue
            done += 1
            tree = kd_partition(ps, k)
            opt = guillotine_optimal(ps, k)[0]
            c.check(_leaves_ok(ps, tree, k), (pts, k, "structure"))
            c.check(tree.cost <= 5 * opt, (pts, k, tree.cost, opt))


def test_oracles():
    with Criterion(8, "exact_min_max vs enumeration (200), guillotine vs plain recursion (50)", 60) as c:
        rng = random.Random(8)
        for _ in range(200):
            sizes, k = random_instance(rng, 8, (2, 30), rng.choice([1, 2, 4]))
            c.check(exact_min_max(make_instance(sizes, k))[0] == naive_min_max(sizes, k), (sizes, k))
        done = 0
        while done < 50:
            k = rng.randint(1, 6)
            pts = random_points(rng, 4, 8, 5)
            if sum(w for *_, w in pts) < k:
                continue
            done += 1
            c.check(guillotine_optimal(WeightedPointSet(pts), k)[0] == naive_guillotine(pts, k), (pts, k))


def test_sweep_reproducible(tmp_path):
    with Criterion(9, "sweep CSV byte-identical; sorted spread <= sorted fold on >= 70% of k", 30) as c:
        fixture = str(files("anonykit") / "data" / "zipf500.txt")
        outputs = []
        for run in range(2):
            path = tmp_path / f"sweep{run}.csv"
            cmd = [sys.executable, "-m", "anonykit.cli", "sweep", "--seed", "42", "--csv", str(path), fixture]
            subprocess.run(cmd, check=True, capture_output=True)
            outputs.append(path.read_bytes())
        c.check(outputs[0] == outputs[1], "CSV differs between runs")
        ratios = {}
        for row in csv.DictReader(io.StringIO(outputs[0].decode())):
            ratios[(int(row["k"]), row["order"], row["algorithm"])] = Fraction(row["ratio"])
        ks = sorted({k for k, _, _ in ratios})
        wins = sum(ratios[(k, "sorted", "spread")] <= ratios[(k, "sorted", "fold")] for k in ks)
        c.check(wins >= 0.7 * len(ks), f"sorted spread wins {wins}/{len(ks)}")
