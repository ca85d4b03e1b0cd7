import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anonykit.bincover import exact_min_max, fold, spread, spread_experimental
from anonykit.bincover.exact import MAX_EXACT_ITEMS
from anonykit.errors import TooLarge
from anonykit.model import make_instance
from oracles import naive_min_max, random_instance


def fold_bound(sizes, k):
    return max(k - 1 + max(sizes), 3 * k - 3)


# ---- exact oracle -------------------------------------------------------


@pytest.mark.parametrize(
    "sizes,k,opt",
    [
        ([1, 1, 1, 1, 1], 3, 5),
        ([3, 3], 3, 3),
        ([2, 2, 2, 3], 4, 5),
        ([2, 2, 2, 2, 2, 2, 2, 2, 1], 3, 5),
        ([5, 4, 3], 5, 7),
    ],
)
def test_exact_examples(sizes, k, opt):
    cost, packing = exact_min_max(make_instance(sizes, k))
    assert cost == opt == packing.cost
    assert packing.feasible


def test_exact_agrees_with_enumeration():
    rng = random.Random(11)
    for _ in range(60):
        sizes, k = random_instance(rng, 7, (2, 12))
        assert exact_min_max(make_instance(sizes, k))[0] == naive_min_max(sizes, k)


def test_exact_size_limit():
    with pytest.raises(TooLarge):
        exact_min_max(make_instance([1] * (MAX_EXACT_ITEMS + 1), 2))


# ---- fold ---------------------------------------------------------------


def test_fold_merges_trailing_bin():
    p = fold(make_instance([1, 1, 1, 1, 1], 3))
    assert p.bins == ((0, 1, 2, 3, 4),)
    assert p.cost == 5 <= fold_bound([1] * 5, 3)


def test_fold_oversize_singleton():
    p = fold(make_instance([3], 3))
    assert p.bins == ((0,),) and p.cost == 3


def test_fold_pairs():
    p = fold(make_instance([2, 2, 2, 2], 3))
    assert p.bins == ((0, 1), (2, 3))
    assert p.cost == 4


def test_fold_leftover_joins_smallest_oversize_when_nothing_closed():
    p = fold(make_instance([9, 7, 1], 5))
    assert sorted(p.bins) == [(0,), (1, 2)]
    assert p.cost == 9


def test_fold_respects_order():
    inst = make_instance([2, 1, 1, 2], 3)
    assert fold(inst).bins == ((0, 1), (2, 3))
    assert fold(inst, [0, 3, 1, 2]).bins == ((0, 1, 2, 3),)
    with pytest.raises(ValueError):
        fold(inst, [0, 1, 2])


@settings(max_examples=200, deadline=None)
@given(
    st.integers(2, 40).flatmap(
        lambda k: st.tuples(st.just(k), st.lists(st.integers(1, 4 * k), min_size=1, max_size=30), st.randoms())
    )
)
def test_fold_bound_property(case):
    k, sizes, rnd = case
    if sum(sizes) < k:
        return
    order = list(range(len(sizes)))
    rnd.shuffle(order)
    p = fold(make_instance(sizes, k), order)
    assert p.feasible
    assert p.cost <= fold_bound(sizes, k)
    assert p.cost >= max(k, max(sizes))


# ---- spread -------------------------------------------------------------


def test_spread_case_one():
    sizes = [2, 2, 2, 2, 2, 2, 2, 2, 1]
    p = spread(make_instance(sizes, 3))
    assert p.cost == 5
    assert p.cost <= math.ceil(Fraction(5, 2) * naive_min_max(sizes, 3))


def test_spread_perfect_cover():
    p = spread(make_instance([3, 3], 3))
    assert p.cost == 3 and len(p.bins) == 2


def test_spread_few_bins_uses_exact():
    p = spread(make_instance([2, 2, 1], 5))
    assert p.bins == ((0, 1, 2),) and p.cost == 5


def test_spread_case_two_one_swap():
    # greedy: {7,7} {7,7} {6,6} {6,6} | {6,2}: f=6 > k/2, x1=7 and 7+2 >= 10
    sizes = [7, 7, 7, 7, 6, 6, 6, 6, 6, 2]
    inst = make_instance(sizes, 10)
    p = spread(inst)
    assert p.feasible
    assert p.cost <= math.ceil(Fraction(5, 2) * exact_min_max(inst)[0])
    assert p.cost <= fold(inst).cost


def test_spread_larger_instances_against_oracle():
    rng = random.Random(5)
    for _ in range(40):
        k = rng.randint(3, 30)
        sizes = [rng.randint(1, k) for _ in range(rng.randint(8, 14))]
        if sum(sizes) < k:
            continue
        inst = make_instance(sizes, k)
        p = spread(inst)
        assert p.feasible
        assert p.cost <= math.ceil(Fraction(5, 2) * exact_min_max(inst)[0])
        assert p.cost <= fold(inst).cost


def test_spread_beyond_exact_limit_still_feasible():
    sizes = [1] * 20 + [2] * 5
    inst = make_instance(sizes, 12)
    p = spread(inst)
    assert p.feasible
    assert p.cost <= fold(inst).cost


# ---- experimental spread -----------------------------------------------


@pytest.mark.parametrize(
    "sizes,k,cost",
    [([2, 2, 2, 1], 3, 4), ([3, 3, 3], 3, 3), ([1, 1, 1, 1], 3, 4)],
)
def test_spread_experimental_examples(sizes, k, cost):
    p = spread_experimental(make_instance(sizes, k))
    assert p.feasible and p.cost == cost


def test_spread_experimental_round_robin_phase():
    # next fit closes {5,4}=9 and {6,1}=7; leftover items 4, 5, 6 (sizes 2, 2, 1)
    # item 4 lifts the 7-bin to 9 (the max); item 5 would raise it, so 5 and 6 are dealt to bins 0, 1
    p = spread_experimental(make_instance([5, 4, 6, 1, 2, 2, 1], 7))
    assert p.bins == ((0, 1, 5), (2, 3, 4, 6))
    assert p.levels == (11, 10)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 30).flatmap(lambda k: st.tuples(st.just(k), st.lists(st.integers(1, 3 * k), min_size=1, max_size=25), st.randoms())))
def test_spread_experimental_always_feasible(case):
    k, sizes, rnd = case
    if sum(sizes) < k:
        return
    order = list(range(len(sizes)))
    rnd.shuffle(order)
    p = spread_experimental(make_instance(sizes, k), order)
    assert p.feasible


def test_every_algorithm_at_least_kappa():
    rng = random.Random(3)
    for _ in range(100):
        sizes, k = random_instance(rng, 10, (2, 30))
        inst = make_instance(sizes, k)
        for p in (fold(inst), spread(inst), spread_experimental(inst)):
            assert p.cost >= inst.kappa
